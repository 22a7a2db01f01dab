"""Extraction of identifier evidence (names, formulas, external ids) from a graph.

Compound alignment leans on exactly this evidence: the descriptive
properties are near-identical across vocabularies even when the class
hierarchies differ. Which predicates carry the evidence is configurable;
the defaults cover the standard label predicates plus the dbxref convention
("CAS:7732-18-5", split on the first colon, scheme lowercased, value verbatim).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift import vocab
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal
from semlift.align.model import IdentifierFacts

DEFAULT_NAME_PREDICATES = (vocab.RDFS_LABEL, vocab.SKOS_PREF_LABEL, vocab.SKOS_ALT_LABEL)
DEFAULT_FORMULA_PREDICATES = (vocab.CHEBI_FORMULA, vocab.SEMLIFT_FORMULA)
DEFAULT_DBXREF_PREDICATES = (vocab.OBO_DBXREF,)


@dataclass
class FactsSpec:
    name_predicates: tuple[Iri, ...] = DEFAULT_NAME_PREDICATES
    formula_predicates: tuple[Iri, ...] = DEFAULT_FORMULA_PREDICATES
    # predicate -> fixed scheme; the whole literal is the id value
    id_predicates: dict[Iri, str] = field(default_factory=dict)
    # predicates whose literals look like "SCHEME:value"
    dbxref_predicates: tuple[Iri, ...] = DEFAULT_DBXREF_PREDICATES


def extract_identifier_facts(g: Graph, spec: FactsSpec | None = None) -> IdentifierFacts:
    spec = spec or FactsSpec()
    facts = IdentifierFacts()

    def literal_triples(predicate: Iri):
        for t in g.match(predicate=predicate):
            if isinstance(t.subject, Iri) and isinstance(t.object, Literal):
                yield t.subject, t.object

    for p in spec.name_predicates:
        for subject, lit in literal_triples(p):
            facts.add(subject, names=[(lit.lexical, lit.language)])
    for p in spec.formula_predicates:
        for subject, lit in literal_triples(p):
            facts.add(subject, formulas=[lit.lexical])
    for p, scheme in sorted(spec.id_predicates.items(), key=lambda kv: kv[0].value):
        for subject, lit in literal_triples(p):
            facts.add(subject, external_ids=[(scheme, lit.lexical)])
    for p in spec.dbxref_predicates:
        for subject, lit in literal_triples(p):
            scheme, sep, value = lit.lexical.partition(":")
            if sep and scheme:
                facts.add(subject, external_ids=[(scheme.lower(), value)])
    return facts
