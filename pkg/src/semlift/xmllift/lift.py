"""Ontology derivation from an XML schema.

Derivation rules:
  R1  complex-content element -> class, IRI = lifting ns + PascalCase(name)
  R2  attribute / simple-content child -> datatype property,
      IRI = lifting ns + camelCase(parent) + "_" + camelCase(name),
      domain = parent class, range = mapped XSD datatype
  R3  complex-content child -> object property,
      IRI = lifting ns + "has" + PascalCase(child), range = child class
  R4  local-name collisions get _2, _3, ... in derivation order
      (classes first in schema order, then per element: attributes, children)

Every class and property carries the original XML name as its label. The
derivation is pure: the same schema and config always produce the same
ontology, byte-identical once serialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift import vocab
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal, Triple
from semlift.xmllift.model import (
    DATATYPE_FOR_SIMPLE_TYPE,
    LiftConfig,
    XmlSchemaModel,
)
from semlift.xmllift.names import camel_case, pascal_case


@dataclass(frozen=True)
class ClassDecl:
    iri: Iri
    label: str


@dataclass(frozen=True)
class DatatypePropertyDecl:
    iri: Iri
    domain: Iri
    range: Iri
    label: str


@dataclass(frozen=True)
class ObjectPropertyDecl:
    iri: Iri
    domain: Iri
    range: Iri
    label: str


@dataclass
class DerivedOntology:
    namespace: str
    classes: tuple[ClassDecl, ...]
    datatype_properties: tuple[DatatypePropertyDecl, ...]
    object_properties: tuple[ObjectPropertyDecl, ...]
    schema: XmlSchemaModel
    class_for_element: dict[str, Iri] = field(repr=False)
    property_for_attribute: dict[tuple[str, str], Iri] = field(repr=False)
    property_for_child: dict[tuple[str, str], Iri] = field(repr=False)

    def to_graph(self) -> Graph:
        g = Graph(
            prefixes={
                "": self.namespace,
                "owl": vocab.OWL_NS,
                "rdfs": vocab.RDFS_NS,
                "xsd": vocab.XSD_NS,
            }
        )
        for cls in self.classes:
            g.insert(Triple(cls.iri, vocab.RDF_TYPE, vocab.OWL_CLASS))
            g.insert(Triple(cls.iri, vocab.RDFS_LABEL, Literal(cls.label)))
        for prop in self.datatype_properties:
            g.insert(Triple(prop.iri, vocab.RDF_TYPE, vocab.OWL_DATATYPE_PROPERTY))
            g.insert(Triple(prop.iri, vocab.RDFS_DOMAIN, prop.domain))
            g.insert(Triple(prop.iri, vocab.RDFS_RANGE, prop.range))
            g.insert(Triple(prop.iri, vocab.RDFS_LABEL, Literal(prop.label)))
        for prop in self.object_properties:
            g.insert(Triple(prop.iri, vocab.RDF_TYPE, vocab.OWL_OBJECT_PROPERTY))
            g.insert(Triple(prop.iri, vocab.RDFS_DOMAIN, prop.domain))
            g.insert(Triple(prop.iri, vocab.RDFS_RANGE, prop.range))
            g.insert(Triple(prop.iri, vocab.RDFS_LABEL, Literal(prop.label)))
        return g

    def mapping_report(self) -> str:
        """Human-reviewable derivation report, one line per derived term.

        A curator can inspect (and veto) the derived mapping here before any
        instance conversion runs.
        """
        lines = []
        for cls in self.classes:
            lines.append(f"class\t{cls.iri.value}\tfrom element '{cls.label}'")
        for prop in self.datatype_properties:
            lines.append(
                f"datatype-property\t{prop.iri.value}\tdomain {prop.domain.value}"
                f"\trange {prop.range.value}\tfrom '{prop.label}'"
            )
        for prop in self.object_properties:
            lines.append(
                f"object-property\t{prop.iri.value}\tdomain {prop.domain.value}"
                f"\trange {prop.range.value}\tfrom '{prop.label}'"
            )
        return "".join(line + "\n" for line in lines)


def lift_schema(schema: XmlSchemaModel, config: LiftConfig) -> DerivedOntology:
    ns = config.lifting_namespace
    taken: set[str] = set()

    def mint(base: str) -> str:
        if base not in taken:
            taken.add(base)
            return base
        i = 2
        while f"{base}_{i}" in taken:
            i += 1
        name = f"{base}_{i}"
        taken.add(name)
        return name

    classes: list[ClassDecl] = []
    class_for_element: dict[str, Iri] = {}
    for decl in schema.elements:
        if decl.is_complex:
            iri = Iri(ns + mint(pascal_case(decl.name)))
            classes.append(ClassDecl(iri, decl.name))
            class_for_element[decl.name] = iri

    datatype_props: list[DatatypePropertyDecl] = []
    object_props: list[ObjectPropertyDecl] = []
    property_for_attribute: dict[tuple[str, str], Iri] = {}
    property_for_child: dict[tuple[str, str], Iri] = {}
    for decl in schema.elements:
        if not decl.is_complex:
            continue
        domain = class_for_element[decl.name]
        for attr in decl.content.attributes:
            iri = Iri(ns + mint(f"{camel_case(decl.name)}_{camel_case(attr.name)}"))
            datatype_props.append(
                DatatypePropertyDecl(iri, domain, DATATYPE_FOR_SIMPLE_TYPE[attr.simple_type], attr.name)
            )
            property_for_attribute[(decl.name, attr.name)] = iri
        for ref in decl.content.children:
            child = schema.element(ref.name)
            if child.is_complex:
                iri = Iri(ns + mint("has" + pascal_case(ref.name)))
                object_props.append(
                    ObjectPropertyDecl(iri, domain, class_for_element[ref.name], ref.name)
                )
            else:
                iri = Iri(ns + mint(f"{camel_case(decl.name)}_{camel_case(ref.name)}"))
                datatype_props.append(
                    DatatypePropertyDecl(
                        iri,
                        domain,
                        DATATYPE_FOR_SIMPLE_TYPE[child.content.simple_type],
                        ref.name,
                    )
                )
            property_for_child[(decl.name, ref.name)] = iri

    return DerivedOntology(
        namespace=ns,
        classes=tuple(classes),
        datatype_properties=tuple(datatype_props),
        object_properties=tuple(object_props),
        schema=schema,
        class_for_element=class_for_element,
        property_for_attribute=property_for_attribute,
        property_for_child=property_for_child,
    )
