"""Application of mapping rules to a graph, with a bounded entailment closure.

For every rule at or above the threshold the corresponding axiom triple is
asserted (owl:equivalentClass / rdfs:subClassOf / owl:equivalentProperty /
owl:sameAs) plus one provenance triple tying the axiom subject to the matcher
id. The closure is then materialized to fixpoint, limited to exactly three
rule shapes:

  E1  (x rdf:type C)  + rule C->D (SubClassOf, or EquivalentClass either
      direction)                          =>  (x rdf:type D)
  E2  (x p o) + SameIndividual(x,y)       =>  (y p o)    and symmetrically
      (s p x) + SameIndividual(x,y)       =>  (s p y)    for any predicate;
      predicates themselves are never rewritten
  E3  (s p o) + EquivalentProperty(p,q)   =>  (s q o)    either direction

A rule whose source and target are both unknown (absent from the graph and
from every supplied ontology) is skipped with a warning entry, not an error.
Every derived triple carries one justification: the rule plus the
pre-existing triple it came from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from semlift import vocab
from semlift.errors import ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal, Triple
from semlift.align.model import MappingRule, Ontology, RuleKind

AXIOM_PREDICATE = {
    RuleKind.EQUIVALENT_CLASS: vocab.OWL_EQUIVALENT_CLASS,
    RuleKind.SUB_CLASS_OF: vocab.RDFS_SUBCLASSOF,
    RuleKind.EQUIVALENT_PROPERTY: vocab.OWL_EQUIVALENT_PROPERTY,
    RuleKind.SAME_INDIVIDUAL: vocab.OWL_SAME_AS,
}


@dataclass(frozen=True)
class Justification:
    derived: Triple
    rule: MappingRule
    via: str  # "axiom" | "provenance" | "E1" | "E2" | "E3"
    source: Triple | None = None


@dataclass
class ApplyResult:
    graph: Graph
    justifications: list[Justification] = field(default_factory=list)
    skipped: list[tuple[MappingRule, str]] = field(default_factory=list)


def apply_mappings(
    g: Graph,
    rules: list[MappingRule],
    threshold: float,
    ontologies: tuple[Ontology, ...] = (),
) -> ApplyResult:
    if not 0.0 <= threshold <= 1.0:
        raise ValidationError(f"threshold out of [0,1]: {threshold}")

    known: set[Iri] = set()
    for t in g.triple_set():
        for term in (t.subject, t.predicate, t.object):
            if isinstance(term, Iri):
                known.add(term)
    for onto in ontologies:
        known.update(onto.classes)
        known.update(onto.properties)
        for sub, sup in onto.subclass_axioms | onto.subproperty_axioms:
            known.update((sub, sup))

    result = ApplyResult(graph=g.copy())
    out = result.graph

    active: list[MappingRule] = []
    for rule in rules:
        if rule.confidence < threshold:
            continue
        if rule.source not in known and rule.target not in known:
            result.skipped.append((rule, "source and target both unknown"))
            continue
        active.append(rule)

    # closure tables, each edge remembering the rule that created it
    type_up: dict[Iri, list[tuple[Iri, MappingRule]]] = {}
    same: dict[Iri, list[tuple[Iri, MappingRule]]] = {}
    prop_copy: dict[Iri, list[tuple[Iri, MappingRule]]] = {}
    for rule in active:
        if rule.kind == RuleKind.SUB_CLASS_OF:
            type_up.setdefault(rule.source, []).append((rule.target, rule))
        elif rule.kind == RuleKind.EQUIVALENT_CLASS:
            type_up.setdefault(rule.source, []).append((rule.target, rule))
            type_up.setdefault(rule.target, []).append((rule.source, rule))
        elif rule.kind == RuleKind.SAME_INDIVIDUAL:
            same.setdefault(rule.source, []).append((rule.target, rule))
            same.setdefault(rule.target, []).append((rule.source, rule))
        elif rule.kind == RuleKind.EQUIVALENT_PROPERTY:
            prop_copy.setdefault(rule.source, []).append((rule.target, rule))
            prop_copy.setdefault(rule.target, []).append((rule.source, rule))

    queue: deque[Triple] = deque()

    def add(t: Triple, rule: MappingRule, via: str, source: Triple | None):
        if out.insert(t):
            result.justifications.append(Justification(t, rule, via, source))
            queue.append(t)

    for rule in active:
        axiom = Triple(rule.source, AXIOM_PREDICATE[rule.kind], rule.target)
        add(axiom, rule, "axiom", None)
        provenance = Triple(rule.source, vocab.SEMLIFT_PROVENANCE, Literal(rule.provenance))
        add(provenance, rule, "provenance", None)

    queue.extend(sorted(g.triple_set(), key=lambda t: t.nt()))

    while queue:
        t = queue.popleft()
        # E1: type propagation along SubClassOf / EquivalentClass
        if t.predicate == vocab.RDF_TYPE and isinstance(t.object, Iri):
            for target, rule in type_up.get(t.object, ()):
                add(Triple(t.subject, vocab.RDF_TYPE, target), rule, "E1", t)
        # E2: assertion copying across SameIndividual, subject and object position
        if isinstance(t.subject, Iri):
            for alias, rule in same.get(t.subject, ()):
                add(Triple(alias, t.predicate, t.object), rule, "E2", t)
        if isinstance(t.object, Iri):
            for alias, rule in same.get(t.object, ()):
                add(Triple(t.subject, t.predicate, alias), rule, "E2", t)
        # E3: assertion copying across EquivalentProperty
        for alias, rule in prop_copy.get(t.predicate, ()):
            add(Triple(t.subject, alias, t.object), rule, "E3", t)

    return result
