"""Ontology-driven faceted search: iterative narrowing with live counts.

Selections and suggestions carry facet values in wire form: the IRI string
for class/category facets, and for property-value facets the object's IRI
string or literal lexical form. Each FilterSelection in a state is one
AND-conjunct; the values inside one selection combine by OR. Combining
same-facet selections by OR instead would let an added filter widen the
result set, which must never happen.

Suggestions are recomputed per step: every value attested in the current
result set is offered with its exact matching count, and for class and
category facets the one-hop hierarchy relatives (parent, siblings under the
class hierarchy; skos:broader parent for categories) are offered too, even
though nothing the user typed matches them. Zero-count suggestions are never
emitted, and values already selected in the same facet are not re-suggested.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from semlift import vocab
from semlift.errors import QueryError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal, Term
from semlift.align.model import Ontology
from semlift.enrich.categories import ancestors, broader_map, categorize

KIND_CLASS = "class-hierarchy"
KIND_PROPERTY = "property-value"
KIND_CATEGORY = "category"

ORIGIN_DIRECT = "direct"
ORIGIN_EXPANDED = "hierarchy-expanded"


def wire_value(term: Term) -> str:
    if isinstance(term, Iri):
        return term.value
    if isinstance(term, Literal):
        return term.lexical
    return term.nt()


@dataclass(frozen=True)
class FacetDefinition:
    id: str
    kind: str
    anchor: Iri
    label: str

    def __post_init__(self):
        if self.kind not in (KIND_CLASS, KIND_PROPERTY, KIND_CATEGORY):
            raise ValidationError(f"unknown facet kind {self.kind!r}")


@dataclass(frozen=True)
class FilterSelection:
    facet_id: str
    values: frozenset[str]


@dataclass(frozen=True)
class FacetSuggestion:
    facet_id: str
    value: str
    count: int
    origin: str
    hop: str | None = None  # "parent" | "sibling" | "broader" for expanded ones


@dataclass
class FacetState:
    selections: tuple[FilterSelection, ...]
    results: frozenset[Iri]
    step: int = 0


class FacetEngine:
    """Facet evaluation over one immutable graph + ontology snapshot."""

    def __init__(self, graph: Graph, ontology: Ontology, facets: list[FacetDefinition]):
        self.graph = graph
        self.ontology = ontology
        self.facets = {f.id: f for f in facets}
        if len(self.facets) != len(facets):
            raise ValidationError("duplicate facet ids")
        self.facet_order = [f.id for f in facets]
        self._categories = categorize(graph)
        self._broader = broader_map(graph)
        self._universe = frozenset(
            s for s in graph.subjects(predicate=vocab.RDF_TYPE) if isinstance(s, Iri)
        )
        self._descendants_cache: dict[Iri, set[Iri]] = {}

    # -- matching ---------------------------------------------------------

    def _descendants(self, cls: Iri) -> set[Iri]:
        if cls not in self._descendants_cache:
            self._descendants_cache[cls] = self.ontology.subclass_descendants(cls)
        return self._descendants_cache[cls]

    def _entity_types(self, entity: Iri) -> set[Iri]:
        return {
            t.object for t in self.graph.match(subject=entity, predicate=vocab.RDF_TYPE)
            if isinstance(t.object, Iri)
        }

    def categories_of(self, entity: Iri) -> set[Iri]:
        return self._categories.get(entity, set())

    def matches(self, entity: Iri, facet: FacetDefinition, value: str) -> bool:
        if facet.kind == KIND_CLASS:
            try:
                cls = Iri(value)
            except ValidationError:
                return False
            return bool(self._entity_types(entity) & self._descendants(cls))
        if facet.kind == KIND_PROPERTY:
            return any(
                wire_value(t.object) == value
                for t in self.graph.match(subject=entity, predicate=facet.anchor)
            )
        try:
            category = Iri(value)
        except ValidationError:
            return False
        return category in self._categories.get(entity, set())

    # -- evaluation -------------------------------------------------------

    def evaluate(self, selections: tuple[FilterSelection, ...] | list[FilterSelection]) -> frozenset[Iri]:
        result = set(self._universe)
        for selection in selections:
            facet = self.facets.get(selection.facet_id)
            if facet is None:
                raise QueryError(f"unknown facet id {selection.facet_id!r}")
            result = {
                e for e in result if any(self.matches(e, facet, v) for v in selection.values)
            }
        return frozenset(result)

    def state(self, selections: tuple[FilterSelection, ...] = (), step: int = 0) -> FacetState:
        selections = tuple(selections)
        return FacetState(selections, self.evaluate(selections), step)

    def add_selection(self, state: FacetState, facet_id: str, values: frozenset[str]) -> FacetState:
        selections = state.selections + (FilterSelection(facet_id, frozenset(values)),)
        return FacetState(selections, self.evaluate(selections), state.step + 1)

    # -- suggestions ------------------------------------------------------

    def suggest(self, state: FacetState) -> list[FacetSuggestion]:
        out: list[FacetSuggestion] = []
        for facet_id in self.facet_order:
            facet = self.facets[facet_id]
            selected = {
                v for sel in state.selections if sel.facet_id == facet_id for v in sel.values
            }
            if facet.kind == KIND_CLASS:
                out.extend(self._suggest_class(facet, state, selected))
            elif facet.kind == KIND_PROPERTY:
                out.extend(self._suggest_property(facet, state, selected))
            else:
                out.extend(self._suggest_category(facet, state, selected))
        out.sort(key=lambda s: (-s.count, s.facet_id, s.value))
        return out

    def _count(self, facet: FacetDefinition, value: str, results: frozenset[Iri]) -> int:
        return sum(1 for e in results if self.matches(e, facet, value))

    def _emit(
        self, facet, value: str, results, selected, origin: str, hop: str | None = None
    ) -> FacetSuggestion | None:
        if value in selected:
            return None
        count = self._count(facet, value, results)
        if count < 1:
            return None
        return FacetSuggestion(facet.id, value, count, origin, hop)

    def _suggest_class(self, facet, state, selected):
        in_scope = self._descendants(facet.anchor)
        attested: set[Iri] = set()
        for e in state.results:
            attested |= self._entity_types(e) & in_scope
        # the anchor means "no filter"; suggesting it would never narrow
        attested.discard(facet.anchor)
        suggestions = {}
        for cls in attested:
            s = self._emit(facet, cls.value, state.results, selected, ORIGIN_DIRECT)
            if s:
                suggestions[cls] = s
        # one-hop hierarchy expansion: parents first, then siblings
        expanded: dict[Iri, str] = {}
        for cls in attested:
            for parent in self.ontology.superclasses_of(cls):
                if parent in in_scope and parent != facet.anchor and parent not in attested:
                    expanded.setdefault(parent, "parent")
        for cls in attested:
            for parent in self.ontology.superclasses_of(cls):
                for sibling, sup in self.ontology.subclass_axioms:
                    if (
                        sup == parent
                        and sibling not in attested
                        and sibling in in_scope
                        and sibling != facet.anchor
                    ):
                        expanded.setdefault(sibling, "sibling")
        for cls, hop in expanded.items():
            s = self._emit(facet, cls.value, state.results, selected, ORIGIN_EXPANDED, hop)
            if s:
                suggestions[cls] = s
        return suggestions.values()

    def _suggest_property(self, facet, state, selected):
        values: set[str] = set()
        for e in state.results:
            for t in self.graph.match(subject=e, predicate=facet.anchor):
                values.add(wire_value(t.object))
        out = []
        for v in values:
            s = self._emit(facet, v, state.results, selected, ORIGIN_DIRECT)
            if s:
                out.append(s)
        return out

    def _suggest_category(self, facet, state, selected):
        in_scope = {
            c
            for c in set(self._broader) | {x for ups in self._broader.values() for x in ups}
            if facet.anchor in ancestors(c, self._broader)
        }
        in_scope.add(facet.anchor)
        direct: set[Iri] = set()
        for e in state.results:
            for t in self.graph.match(subject=e, predicate=vocab.DCT_SUBJECT):
                if isinstance(t.object, Iri) and t.object in in_scope:
                    direct.add(t.object)
        direct.discard(facet.anchor)
        suggestions = {}
        for cat in direct:
            s = self._emit(facet, cat.value, state.results, selected, ORIGIN_DIRECT)
            if s:
                suggestions[cat] = s
        for cat in direct:
            for parent in self._broader.get(cat, ()):
                if parent not in direct and parent in in_scope and parent != facet.anchor:
                    s = self._emit(
                        facet, parent.value, state.results, selected, ORIGIN_EXPANDED, "broader"
                    )
                    if s:
                        suggestions.setdefault(parent, s)
        return suggestions.values()
