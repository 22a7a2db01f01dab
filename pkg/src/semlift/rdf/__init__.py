"""RDF terms, an indexed in-memory graph, and N-Triples/Turtle serialization."""

from semlift.rdf.graph import Graph, triple_sort_key
from semlift.rdf.ntriples import parse_ntriples, write_ntriples
from semlift.rdf.terms import BlankNode, Iri, Literal, Term, Triple
from semlift.rdf.turtle import parse_turtle, write_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "Iri",
    "Literal",
    "Term",
    "Triple",
    "parse_ntriples",
    "parse_turtle",
    "triple_sort_key",
    "write_ntriples",
    "write_turtle",
]
