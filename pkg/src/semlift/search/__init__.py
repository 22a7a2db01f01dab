"""Synonym-aware autocomplete and ontology-driven faceted search."""

from semlift.search.autocomplete import AutocompleteIndex, Completion, LexicalEntry, build_index
from semlift.search.facets import (
    FacetDefinition,
    FacetEngine,
    FacetState,
    FacetSuggestion,
    FilterSelection,
    KIND_CATEGORY,
    KIND_CLASS,
    KIND_PROPERTY,
    ORIGIN_DIRECT,
    ORIGIN_EXPANDED,
    wire_value,
)

__all__ = [
    "AutocompleteIndex",
    "Completion",
    "FacetDefinition",
    "FacetEngine",
    "FacetState",
    "FacetSuggestion",
    "FilterSelection",
    "KIND_CATEGORY",
    "KIND_CLASS",
    "KIND_PROPERTY",
    "LexicalEntry",
    "ORIGIN_DIRECT",
    "ORIGIN_EXPANDED",
    "build_index",
    "wire_value",
]
