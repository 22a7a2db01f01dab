"""Syntactic conversion: schema-derived ontologies and XML-to-RDF instance conversion."""

from semlift.xmllift.convert import convert_instance
from semlift.xmllift.lift import DerivedOntology, lift_schema
from semlift.xmllift.model import (
    AttrDecl,
    ComplexContent,
    ElementDecl,
    ElementRef,
    LiftConfig,
    SimpleContent,
    XmlDocument,
    XmlElement,
    XmlSchemaModel,
)
from semlift.xmllift.xml_io import parse_document, parse_schema

__all__ = [
    "AttrDecl",
    "ComplexContent",
    "DerivedOntology",
    "ElementDecl",
    "ElementRef",
    "LiftConfig",
    "SimpleContent",
    "XmlDocument",
    "XmlElement",
    "XmlSchemaModel",
    "convert_instance",
    "lift_schema",
    "parse_document",
    "parse_schema",
]
