"""Conversion of validated XML instance documents into RDF.

Conversion rules:
  C1  complex element instance -> individual,
      IRI = instance ns + document id + "/" + element name + "/" + ordinal
      (1-based, pre-order document position per element name)
  C2  the individual is rdf:typed to its derived class
  C3  attribute / simple-child values -> datatype-property triples, literals
      typed per the schema simple type
  C4  complex nesting -> object-property triple
  C5  whitespace-only text inside complex elements is ignored

Validation against the schema happens inline (structure, occurrence bounds,
lexical forms). Errors name the XPath-like location of the offending node.
Non-string simple values are whitespace-collapsed before validation, like
XML Schema does; strings are kept verbatim.
"""

from __future__ import annotations

import datetime
import re

from semlift import vocab
from semlift.errors import ConversionError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal, Triple
from semlift.xmllift.lift import DerivedOntology
from semlift.xmllift.model import LiftConfig, XmlDocument, XmlElement

_INTEGER_RE = re.compile(r"[+-]?[0-9]+")
_DECIMAL_RE = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)")
_DATE_RE = re.compile(r"([0-9]{4})-([0-9]{2})-([0-9]{2})")


def _valid_lexical(simple_type: str, value: str) -> bool:
    if simple_type == "string":
        return True
    if simple_type == "integer":
        return _INTEGER_RE.fullmatch(value) is not None
    if simple_type == "decimal":
        return _DECIMAL_RE.fullmatch(value) is not None
    if simple_type == "boolean":
        return value in ("true", "false", "1", "0")
    if simple_type == "date":
        m = _DATE_RE.fullmatch(value)
        if not m:
            return False
        try:
            datetime.date(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        except ValueError:
            return False
        return True
    raise ConversionError(f"unknown simple type {simple_type!r}")


def _literal(simple_type: str, raw: str, location: str) -> Literal:
    value = raw if simple_type == "string" else " ".join(raw.split())
    if not _valid_lexical(simple_type, value):
        raise ConversionError(f"invalid {simple_type} value {raw!r} at {location}")
    from semlift.xmllift.model import DATATYPE_FOR_SIMPLE_TYPE

    return Literal(value, datatype=DATATYPE_FOR_SIMPLE_TYPE[simple_type])


def convert_instance(doc: XmlDocument, onto: DerivedOntology, config: LiftConfig) -> Graph:
    schema = onto.schema
    g = Graph(prefixes={"rdf": vocab.RDF_NS})
    counters: dict[str, int] = {}

    def mint_individual(name: str) -> Iri:
        counters[name] = counters.get(name, 0) + 1
        return Iri(f"{config.instance_namespace}{config.document_id}/{name}/{counters[name]}")

    def convert_complex(elem: XmlElement, location: str) -> Iri:
        decl = schema.element(elem.name)
        individual = mint_individual(elem.name)
        g.insert(Triple(individual, vocab.RDF_TYPE, onto.class_for_element[elem.name]))

        if elem.text.strip():
            raise ConversionError(f"unexpected text content at {location}")

        declared_attrs = {a.name: a for a in decl.content.attributes}
        for attr_name, raw in elem.attributes.items():
            attr = declared_attrs.get(attr_name)
            if attr is None:
                raise ConversionError(f"undeclared attribute {attr_name!r} at {location}")
            prop = onto.property_for_attribute[(elem.name, attr_name)]
            g.insert(Triple(individual, prop, _literal(attr.simple_type, raw, location)))

        declared_children = {ref.name: ref for ref in decl.content.children}
        sibling_counts: dict[str, int] = {}
        for child in elem.children:
            ref = declared_children.get(child.name)
            if ref is None:
                raise ConversionError(f"undeclared child element {child.name!r} at {location}")
            sibling_counts[child.name] = sibling_counts.get(child.name, 0) + 1
            child_location = f"{location}/{child.name}[{sibling_counts[child.name]}]"
            child_decl = schema.element(child.name)
            prop = onto.property_for_child[(elem.name, child.name)]
            if child_decl.is_complex:
                g.insert(Triple(individual, prop, convert_complex(child, child_location)))
            else:
                convert_simple(individual, prop, child, child_decl, child_location)

        for ref in decl.content.children:
            n = sibling_counts.get(ref.name, 0)
            if n < ref.min_occurs or (ref.max_occurs is not None and n > ref.max_occurs):
                bound = "unbounded" if ref.max_occurs is None else str(ref.max_occurs)
                raise ConversionError(
                    f"element {ref.name!r} occurs {n} times at {location}, "
                    f"expected {ref.min_occurs}..{bound}"
                )
        return individual

    def convert_simple(subject: Iri, prop: Iri, elem: XmlElement, decl, location: str):
        if elem.children:
            raise ConversionError(f"unexpected child elements in simple element at {location}")
        if elem.attributes:
            name = next(iter(elem.attributes))
            raise ConversionError(f"undeclared attribute {name!r} at {location}")
        g.insert(Triple(subject, prop, _literal(decl.content.simple_type, elem.text, location)))

    root = doc.root
    root_decl = schema.element(root.name)
    if root_decl is None:
        raise ConversionError(f"undeclared root element {root.name!r}")
    root_location = f"/{root.name}[1]"
    if root_decl.is_complex:
        convert_complex(root, root_location)
    else:
        # a simple root yields no individuals; still validate its value
        _literal(root_decl.content.simple_type, root.text, root_location)
    return g
