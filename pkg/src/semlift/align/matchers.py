"""Alignment-candidate generation between two ontologies with identifier facts.

Matchers, in priority order, with their default confidences:
  M1 "external-id"  same scheme, exact value                      1.0
  M2 "formula"      exact formula after stripping all whitespace  0.9
  M3 "label"        exact normalized label, same language or
                    at least one side untagged                    0.8
  M4 "label-lang"   shared normalized label across two different
                    language tags                                 0.6

Per (source, target) pair only the best candidate survives. Class pairs
yield EquivalentClass, property pairs EquivalentProperty, individual pairs
SameIndividual; pairs of mixed kind are never proposed. Output is sorted by
confidence descending, then source IRI, then target IRI.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift.rdf.terms import Iri
from semlift.textnorm import normalize_text
from semlift.align.model import EntityFacts, IdentifierFacts, Label, MappingRule, Ontology, RuleKind

MATCHER_EXTERNAL_ID = "external-id"
MATCHER_FORMULA = "formula"
MATCHER_LABEL = "label"
MATCHER_LABEL_LANG = "label-lang"


@dataclass
class MatcherConfig:
    external_id_confidence: float = 1.0
    formula_confidence: float = 0.9
    label_confidence: float = 0.8
    cross_language_confidence: float = 0.6


@dataclass
class AlignmentSide:
    ontology: Ontology
    facts: IdentifierFacts = field(default_factory=IdentifierFacts)

    def entities(self) -> dict[Iri, tuple[str, tuple[Label, ...], EntityFacts]]:
        """iri -> (kind, labels+names, facts); facts-only IRIs are individuals."""
        out: dict[Iri, tuple[str, tuple[Label, ...], EntityFacts]] = {}
        for iri, decl in self.ontology.classes.items():
            f = self.facts.facts_for(iri)
            out[iri] = ("class", decl.labels + f.names, f)
        for iri, decl in self.ontology.properties.items():
            f = self.facts.facts_for(iri)
            out[iri] = ("property", decl.labels + f.names, f)
        for iri, f in self.facts.entries.items():
            if iri not in out:
                out[iri] = ("individual", f.names, f)
        return out


_RULE_KIND_FOR_ENTITY_KIND = {
    "class": RuleKind.EQUIVALENT_CLASS,
    "property": RuleKind.EQUIVALENT_PROPERTY,
    "individual": RuleKind.SAME_INDIVIDUAL,
}


def suggest_alignments(
    a: AlignmentSide, b: AlignmentSide, config: MatcherConfig | None = None
) -> list[MappingRule]:
    config = config or MatcherConfig()
    ents_a = a.entities()
    ents_b = b.entities()

    # candidate pool: (source, target) -> (confidence, provenance); matchers run
    # in priority order and only raise the confidence of a pair, never lower it
    best: dict[tuple[Iri, Iri], tuple[float, str, str]] = {}

    def offer(src: Iri, tgt: Iri, kind: str, confidence: float, provenance: str):
        if src == tgt:
            return
        key = (src, tgt)
        if key not in best or best[key][0] < confidence:
            best[key] = (confidence, provenance, kind)

    def index_by(entries, key_fn):
        idx: dict[object, list] = {}
        for iri, (kind, labels, facts) in entries.items():
            for key, payload in key_fn(kind, labels, facts):
                idx.setdefault(key, []).append((iri, kind, payload))
        return idx

    # M1: external ids
    ids_a = index_by(ents_a, lambda k, l, f: [((s, v), None) for s, v in f.external_ids])
    ids_b = index_by(ents_b, lambda k, l, f: [((s, v), None) for s, v in f.external_ids])
    for key in ids_a.keys() & ids_b.keys():
        for src, kind_a, _ in ids_a[key]:
            for tgt, kind_b, _ in ids_b[key]:
                if kind_a == kind_b:
                    offer(src, tgt, kind_a, config.external_id_confidence, MATCHER_EXTERNAL_ID)

    # M2: formulas, whitespace-stripped
    def formula_keys(kind, labels, facts):
        return [("".join(f.split()), None) for f in facts.formulas if "".join(f.split())]

    f_a = index_by(ents_a, formula_keys)
    f_b = index_by(ents_b, formula_keys)
    for key in f_a.keys() & f_b.keys():
        for src, kind_a, _ in f_a[key]:
            for tgt, kind_b, _ in f_b[key]:
                if kind_a == kind_b:
                    offer(src, tgt, kind_a, config.formula_confidence, MATCHER_FORMULA)

    # M3/M4: normalized labels; the language relation picks the matcher
    def label_keys(kind, labels, facts):
        out = []
        for text, lang in labels:
            norm = normalize_text(text)
            if norm:
                out.append((norm, lang))
        return out

    l_a = index_by(ents_a, label_keys)
    l_b = index_by(ents_b, label_keys)
    for key in l_a.keys() & l_b.keys():
        for src, kind_a, lang_a in l_a[key]:
            for tgt, kind_b, lang_b in l_b[key]:
                if kind_a != kind_b:
                    continue
                if lang_a == lang_b or lang_a is None or lang_b is None:
                    offer(src, tgt, kind_a, config.label_confidence, MATCHER_LABEL)
                else:
                    offer(src, tgt, kind_a, config.cross_language_confidence, MATCHER_LABEL_LANG)

    rules = [
        MappingRule(_RULE_KIND_FOR_ENTITY_KIND[kind], src, tgt, confidence, provenance)
        for (src, tgt), (confidence, provenance, kind) in best.items()
    ]
    rules.sort(key=lambda r: (-r.confidence, r.source.value, r.target.value))
    return rules
