"""Structural models for the supported XML schema subset and instance documents.

The subset (design decision D1): flat global element declarations with
sequence content referencing other global elements, attributes, min/max
occurs, and five simple types. Anything else is rejected at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift import vocab
from semlift.errors import SchemaError, ValidationError
from semlift.rdf.terms import Iri

SIMPLE_TYPES = ("string", "integer", "decimal", "boolean", "date")

DATATYPE_FOR_SIMPLE_TYPE = {
    "string": vocab.XSD_STRING,
    "integer": vocab.XSD_INTEGER,
    "decimal": vocab.XSD_DECIMAL,
    "boolean": vocab.XSD_BOOLEAN,
    "date": vocab.XSD_DATE,
}


@dataclass(frozen=True)
class AttrDecl:
    name: str
    simple_type: str

    def __post_init__(self):
        if self.simple_type not in SIMPLE_TYPES:
            raise SchemaError(f"unknown simple type {self.simple_type!r} on attribute {self.name!r}")


@dataclass(frozen=True)
class ElementRef:
    """Reference to a globally declared element, with occurrence bounds.

    max_occurs None means unbounded.
    """

    name: str
    min_occurs: int = 1
    max_occurs: int | None = 1

    def __post_init__(self):
        if self.min_occurs < 0:
            raise SchemaError(f"negative minOccurs on {self.name!r}")
        if self.max_occurs is not None and self.min_occurs > self.max_occurs:
            raise SchemaError(f"minOccurs > maxOccurs on {self.name!r}")


@dataclass(frozen=True)
class ComplexContent:
    children: tuple[ElementRef, ...] = ()
    attributes: tuple[AttrDecl, ...] = ()


@dataclass(frozen=True)
class SimpleContent:
    simple_type: str

    def __post_init__(self):
        if self.simple_type not in SIMPLE_TYPES:
            raise SchemaError(f"unknown simple type {self.simple_type!r}")


@dataclass(frozen=True)
class ElementDecl:
    name: str
    content: ComplexContent | SimpleContent

    @property
    def is_complex(self) -> bool:
        return isinstance(self.content, ComplexContent)


@dataclass
class XmlSchemaModel:
    target_namespace: str
    elements: tuple[ElementDecl, ...]
    _by_name: dict[str, ElementDecl] = field(init=False, repr=False)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        by_name: dict[str, ElementDecl] = {}
        for decl in self.elements:
            if decl.name in by_name:
                raise SchemaError(f"duplicate element declaration: {decl.name!r}")
            by_name[decl.name] = decl
        dangling = sorted(
            {
                ref.name
                for decl in self.elements
                if decl.is_complex
                for ref in decl.content.children
                if ref.name not in by_name
            }
        )
        if dangling:
            raise SchemaError("unresolved element references: " + ", ".join(dangling))
        for decl in self.elements:
            if decl.is_complex:
                seen = set()
                for ref in decl.content.children:
                    if ref.name in seen:
                        raise SchemaError(
                            f"duplicate child reference {ref.name!r} in element {decl.name!r}"
                        )
                    seen.add(ref.name)
        self._by_name = by_name

    def element(self, name: str) -> ElementDecl | None:
        return self._by_name.get(name)


@dataclass
class XmlElement:
    """One element instance: attributes in document order, ordered children,
    and the raw character data chunks interleaved with them."""

    name: str
    attributes: dict[str, str]
    children: list["XmlElement"]
    texts: list[str]

    @property
    def text(self) -> str:
        return "".join(self.texts)


@dataclass
class XmlDocument:
    root: XmlElement


@dataclass(frozen=True)
class LiftConfig:
    """Namespaces and document identity for lifting and conversion."""

    lifting_namespace: str
    instance_namespace: str
    document_id: str = "doc"

    def __post_init__(self):
        for label, ns in (
            ("lifting namespace", self.lifting_namespace),
            ("instance namespace", self.instance_namespace),
        ):
            if not ns.endswith(("/", "#")):
                raise ValidationError(f"{label} must end in '/' or '#': {ns!r}")
            Iri(ns + "x")  # fail early if the namespace is not IRI-safe
