"""Linked-data enrichment: external descriptions, multilingual labels, SKOS categories."""

from semlift.enrich.categories import ancestors, broader_map, categorize
from semlift.enrich.enrich import EnrichmentReport, EntityEnrichment, SkippedEntity, enrich
from semlift.enrich.sources import KIND_DEREFERENCE, KIND_FIXTURE, EnrichmentSource

__all__ = [
    "EnrichmentReport",
    "EnrichmentSource",
    "EntityEnrichment",
    "KIND_DEREFERENCE",
    "KIND_FIXTURE",
    "SkippedEntity",
    "ancestors",
    "broader_map",
    "categorize",
    "enrich",
]
