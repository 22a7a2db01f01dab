"""Semantic conversion: ontology model, alignment matchers, mapping application."""

from semlift.align.apply import ApplyResult, Justification, apply_mappings
from semlift.align.facts import FactsSpec, extract_identifier_facts
from semlift.align.loader import load_ontology, ontology_from_graph
from semlift.align.matchers import AlignmentSide, MatcherConfig, suggest_alignments
from semlift.align.model import (
    ClassDecl,
    EntityFacts,
    IdentifierFacts,
    MappingRule,
    Ontology,
    PropDecl,
    RuleKind,
)
from semlift.align.rules_io import parse_rules, rules_to_graph, write_rules

__all__ = [
    "AlignmentSide",
    "ApplyResult",
    "ClassDecl",
    "EntityFacts",
    "FactsSpec",
    "IdentifierFacts",
    "Justification",
    "MappingRule",
    "MatcherConfig",
    "Ontology",
    "PropDecl",
    "RuleKind",
    "apply_mappings",
    "extract_identifier_facts",
    "load_ontology",
    "ontology_from_graph",
    "parse_rules",
    "rules_to_graph",
    "suggest_alignments",
    "write_rules",
]
