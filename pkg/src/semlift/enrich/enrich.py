"""Merging external descriptions into the local graph.

For each target entity and each source, the entity is resolved either
directly or through one of its owl:sameAs aliases, its description document
is fetched, and only triples whose predicate is on the source's enabled list
are kept. Triples about the fetched entity are re-subjected to the local
IRI; triples about other subjects (category hierarchy links, typically) are
inserted as-is. A missing entity is a skip, never an error.

Deterministic by construction: sources in list order, targets in sorted IRI
order, aliases tried in sorted order after the target itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift import vocab
from semlift.errors import ParseError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal, Triple
from semlift.enrich.sources import EnrichmentSource


@dataclass
class EntityEnrichment:
    target: Iri
    source_id: str
    triples_added: int
    languages: set[str] = field(default_factory=set)


@dataclass
class SkippedEntity:
    target: Iri
    source_id: str
    reason: str


@dataclass
class EnrichmentReport:
    entries: list[EntityEnrichment] = field(default_factory=list)
    skipped: list[SkippedEntity] = field(default_factory=list)

    def total_added(self) -> int:
        return sum(e.triples_added for e in self.entries)


def _aliases(g: Graph, target: Iri) -> list[Iri]:
    out = set()
    for t in g.match(subject=target, predicate=vocab.OWL_SAME_AS):
        if isinstance(t.object, Iri):
            out.add(t.object)
    for t in g.match(predicate=vocab.OWL_SAME_AS, object=target):
        if isinstance(t.subject, Iri):
            out.add(t.subject)
    return sorted(out, key=lambda i: i.value)


def enrich(
    g: Graph, targets: set[Iri], sources: list[EnrichmentSource]
) -> tuple[Graph, EnrichmentReport]:
    out = g.copy()
    report = EnrichmentReport()
    for source in sources:
        source.check_usable()
        enabled = set(source.enabled_predicates)
        for target in sorted(targets, key=lambda i: i.value):
            known_locally = bool(g.match(subject=target)) or bool(_aliases(g, target))
            if not known_locally:
                report.skipped.append(SkippedEntity(target, source.id, "target not in graph"))
                continue
            description: Graph | None = None
            resolved: Iri | None = None
            for candidate in [target] + _aliases(out, target):
                try:
                    description = source.fetch_description(candidate)
                except ParseError as e:
                    report.skipped.append(
                        SkippedEntity(target, source.id, f"malformed document: {e}")
                    )
                    description = None
                    resolved = candidate
                    break
                if description is not None:
                    resolved = candidate
                    break
            if description is None:
                if resolved is None:
                    report.skipped.append(SkippedEntity(target, source.id, "not found"))
                continue

            added = 0
            languages: set[str] = set()
            for t in description:
                if t.predicate not in enabled:
                    continue
                subject = target if t.subject == resolved else t.subject
                if out.insert(Triple(subject, t.predicate, t.object)):
                    added += 1
                    if isinstance(t.object, Literal) and t.object.language:
                        languages.add(t.object.language)
            report.entries.append(EntityEnrichment(target, source.id, added, languages))
    return out, report
