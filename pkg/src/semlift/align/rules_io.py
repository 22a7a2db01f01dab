"""Mapping-rule serialization: a line-oriented TSV format plus Turtle axioms.

TSV columns: kind, source IRI, target IRI, confidence, provenance — one rule
per line, written in the order the rules are given (suggest_alignments
already sorts its output).
"""

from __future__ import annotations

from semlift.errors import ParseError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Triple
from semlift.align.apply import AXIOM_PREDICATE
from semlift.align.model import MappingRule, RuleKind


def write_rules(rules: list[MappingRule]) -> str:
    lines = [
        f"{r.kind.value}\t{r.source.value}\t{r.target.value}\t{r.confidence}\t{r.provenance}"
        for r in rules
    ]
    return "".join(line + "\n" for line in lines)


def parse_rules(text: str) -> list[MappingRule]:
    rules = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError(f"expected 5 tab-separated fields, got {len(fields)}", line=lineno)
        kind_s, source, target, confidence_s, provenance = fields
        try:
            kind = RuleKind(kind_s)
        except ValueError:
            raise ParseError(f"unknown rule kind {kind_s!r}", line=lineno) from None
        try:
            confidence = float(confidence_s)
        except ValueError:
            raise ParseError(f"bad confidence {confidence_s!r}", line=lineno) from None
        try:
            rules.append(MappingRule(kind, Iri(source), Iri(target), confidence, provenance))
        except ValidationError as e:
            raise ParseError(str(e), line=lineno) from None
    return rules


def rules_to_graph(rules: list[MappingRule]) -> Graph:
    """The rules as Turtle-exportable axiom triples (confidence not carried)."""
    g = Graph(prefixes={"owl": "http://www.w3.org/2002/07/owl#", "rdfs": "http://www.w3.org/2000/01/rdf-schema#"})
    for r in rules:
        g.insert(Triple(r.source, AXIOM_PREDICATE[r.kind], r.target))
    return g
