"""Ingestion of schema and instance XML into the structural models.

Only the target namespace is lifted (design decision D3): element and
attribute names prefixed with the target namespace are stripped to local
names, unprefixed names are taken as-is, and anything in a foreign namespace
is rejected.
"""

from __future__ import annotations

import io
import xml.etree.ElementTree as ET

from semlift.errors import ConversionError, ParseError, SchemaError, UnsupportedFeatureError
from semlift.xmllift.model import (
    SIMPLE_TYPES,
    AttrDecl,
    ComplexContent,
    ElementDecl,
    ElementRef,
    SimpleContent,
    XmlDocument,
    XmlElement,
    XmlSchemaModel,
)

XSD_XML_NS = "http://www.w3.org/2001/XMLSchema"


def _xml_error(e: ET.ParseError) -> ParseError:
    line, column = e.position
    return ParseError(f"XML syntax error: {e.msg.split(':')[0]}, column {column}", line=line)


def _unsupported(construct: str) -> UnsupportedFeatureError:
    return UnsupportedFeatureError(construct, kind="schema construct")


def _split_tag(tag: str) -> tuple[str | None, str]:
    if tag.startswith("{"):
        uri, _, local = tag[1:].partition("}")
        return uri, local
    return None, tag


def parse_schema(text: str | bytes) -> XmlSchemaModel:
    """Parse the supported .xsd subset into an XmlSchemaModel."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    nsmap: dict[str | None, str] = {}
    try:
        it = ET.iterparse(io.StringIO(text), events=("start-ns", "end"))
        for event, payload in it:
            if event == "start-ns":
                prefix, uri = payload
                nsmap[prefix or None] = uri
        root = it.root  # type: ignore[attr-defined]
    except ET.ParseError as e:
        raise _xml_error(e) from None

    ns, local = _split_tag(root.tag)
    if ns != XSD_XML_NS or local != "schema":
        raise SchemaError(f"not an XML schema document (root is {root.tag!r})")
    target_ns = root.get("targetNamespace")
    if not target_ns:
        raise SchemaError("schema has no targetNamespace")

    def resolve_qname(value: str) -> tuple[str | None, str]:
        prefix, sep, local_part = value.partition(":")
        if not sep:
            return nsmap.get(None), value
        uri = nsmap.get(prefix)
        if uri is None:
            raise SchemaError(f"undeclared namespace prefix in type {value!r}")
        return uri, local_part

    def simple_type_for(value: str, context: str) -> str:
        uri, local_part = resolve_qname(value)
        if uri == XSD_XML_NS and local_part in SIMPLE_TYPES:
            return local_part
        raise _unsupported(f"type {value!r} on {context}")

    def parse_occurs(el, attr: str, default: int | None) -> int | None:
        raw = el.get(attr)
        if raw is None:
            return default
        if raw == "unbounded":
            if attr == "minOccurs":
                raise SchemaError("minOccurs cannot be 'unbounded'")
            return None
        try:
            return int(raw)
        except ValueError:
            raise SchemaError(f"bad {attr} value {raw!r}") from None

    def parse_element(el) -> ElementDecl:
        name = el.get("name")
        if not name:
            raise _unsupported("top-level element without a name")
        if el.get("minOccurs") or el.get("maxOccurs"):
            raise _unsupported("occurrence bounds on a global element")
        type_attr = el.get("type")
        complex_children = [c for c in el if _split_tag(c.tag) == (XSD_XML_NS, "complexType")]
        if type_attr and complex_children:
            raise SchemaError(f"element {name!r} has both a type and a complexType")
        if type_attr:
            return ElementDecl(name, SimpleContent(simple_type_for(type_attr, f"element {name!r}")))
        if not complex_children:
            raise _unsupported(f"element {name!r} without a type")
        if len(complex_children) > 1:
            raise SchemaError(f"element {name!r} has multiple complexType children")
        return ElementDecl(name, parse_complex_type(complex_children[0], name))

    def parse_complex_type(ct, element_name: str) -> ComplexContent:
        children: list[ElementRef] = []
        attributes: list[AttrDecl] = []
        for node in ct:
            ns_c, local_c = _split_tag(node.tag)
            if ns_c != XSD_XML_NS:
                raise _unsupported(f"foreign element {node.tag!r}")
            if local_c == "sequence":
                for ref_el in node:
                    ns_r, local_r = _split_tag(ref_el.tag)
                    if (ns_r, local_r) != (XSD_XML_NS, "element"):
                        raise _unsupported(f"xs:{local_r} inside xs:sequence")
                    ref = ref_el.get("ref")
                    if not ref:
                        raise _unsupported(
                            f"local element declaration inside {element_name!r} (use ref=)"
                        )
                    _, ref_local = resolve_qname(ref)
                    children.append(
                        ElementRef(
                            ref_local,
                            min_occurs=parse_occurs(ref_el, "minOccurs", 1),
                            max_occurs=parse_occurs(ref_el, "maxOccurs", 1),
                        )
                    )
            elif local_c == "attribute":
                attr_name = node.get("name")
                attr_type = node.get("type")
                if not attr_name or not attr_type:
                    raise _unsupported(f"attribute without name/type in element {element_name!r}")
                attributes.append(
                    AttrDecl(attr_name, simple_type_for(attr_type, f"attribute {attr_name!r}"))
                )
            else:
                raise _unsupported(f"xs:{local_c}")
        return ComplexContent(tuple(children), tuple(attributes))

    elements = []
    for child in root:
        ns_c, local_c = _split_tag(child.tag)
        if (ns_c, local_c) != (XSD_XML_NS, "element"):
            raise _unsupported(f"xs:{local_c}" if ns_c == XSD_XML_NS else f"{child.tag!r}")
        elements.append(parse_element(child))
    return XmlSchemaModel(target_ns, tuple(elements))


def parse_document(text: str | bytes, target_namespace: str | None = None) -> XmlDocument:
    """Parse an instance document, preserving element order and text chunks."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        root = ET.fromstring(text)
    except ET.ParseError as e:
        raise _xml_error(e) from None

    def local_name(tag: str, what: str) -> str:
        ns, local = _split_tag(tag)
        if ns is None or ns == target_namespace:
            return local
        raise ConversionError(f"foreign namespace on {what} {local!r}: {ns}")

    def build(el) -> XmlElement:
        name = local_name(el.tag, "element")
        attributes = {local_name(k, "attribute"): v for k, v in el.attrib.items()}
        children = [build(c) for c in el]
        texts = [t for t in [el.text, *(c.tail for c in el)] if t]
        return XmlElement(name, attributes, children, texts)

    return XmlDocument(build(root))
