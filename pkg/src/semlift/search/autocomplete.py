"""Synonym-aware multilingual autocomplete over a graph snapshot.

The index is a prefix tree over normalized surface forms, with one extra
twist: once a prefix matches any surface of a concept, every surface of
that concept becomes eligible. Typing "was" therefore proposes both
"Wasser" (the prefix hit) and "water" (another name of the same concept),
so a user reaching a concept through one language sees its names in the
others and never has to finish, or correctly spell, the keyword.

Ranking: shorter normalized form first, then surface, then concept IRI.
Identical (surface, concept) pairs are deduplicated. The score is
len(normalized query) / len(normalized form), capped at 1.0 for synonym
surfaces shorter than the query: highest for exact hits, decreasing with
completion length, consistent with the rank order.

Known limitation: only literals of the explicitly listed label/synonym
predicates are indexed; surface forms implied by other relations between
vocabulary terms are not.
"""

from __future__ import annotations

from dataclasses import dataclass

from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal
from semlift.textnorm import normalize_text


@dataclass(frozen=True)
class LexicalEntry:
    surface: str
    normalized: str
    language: str | None
    concept: Iri
    predicate: Iri  # which label/synonym predicate the entry came from


@dataclass(frozen=True)
class Completion:
    surface: str
    language: str | None
    concept: Iri
    score: float


class _Node:
    __slots__ = ("children", "entries")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.entries: list[LexicalEntry] = []


class AutocompleteIndex:
    def __init__(self):
        self._root = _Node()
        self._size = 0
        self._by_concept: dict[Iri, list[LexicalEntry]] = {}

    def __len__(self) -> int:
        return self._size

    def add(self, entry: LexicalEntry):
        node = self._root
        for ch in entry.normalized:
            node = node.children.setdefault(ch, _Node())
        node.entries.append(entry)
        self._by_concept.setdefault(entry.concept, []).append(entry)
        self._size += 1

    def _subtree_entries(self, node: _Node) -> list[LexicalEntry]:
        out = list(node.entries)
        stack = list(node.children.values())
        while stack:
            n = stack.pop()
            out.extend(n.entries)
            stack.extend(n.children.values())
        return out

    def entries(self) -> list[LexicalEntry]:
        return self._subtree_entries(self._root)

    def complete(self, query: str, limit: int) -> list[Completion]:
        if limit < 1:
            raise ValueError("limit must be >= 1")
        normalized = normalize_text(query)
        if not normalized:
            return []
        node = self._root
        for ch in normalized:
            node = node.children.get(ch)
            if node is None:
                return []
        matched = self._subtree_entries(node)
        # concept-level synonymy: every surface of a matched concept is eligible
        eligible: dict[tuple[str, str | None, Iri], LexicalEntry] = {}
        for e in matched:
            for synonym in self._by_concept[e.concept]:
                eligible.setdefault((synonym.surface, synonym.language, synonym.concept), synonym)
        ranked = sorted(
            eligible.values(), key=lambda e: (len(e.normalized), e.surface, e.concept.value)
        )
        out: list[Completion] = []
        seen: set[tuple[str, Iri]] = set()
        for e in ranked:
            key = (e.surface, e.concept)
            if key in seen:
                continue
            seen.add(key)
            score = min(1.0, len(normalized) / len(e.normalized))
            out.append(Completion(e.surface, e.language, e.concept, score))
            if len(out) == limit:
                break
        return out


def build_index(g: Graph, label_predicates: list[Iri]) -> AutocompleteIndex:
    """One entry per (IRI subject, listed predicate, literal object) triple.

    Labels that normalize to the empty string are unreachable under the
    empty-query rule and are therefore not indexed.
    """
    idx = AutocompleteIndex()
    for predicate in label_predicates:
        for t in g.match(predicate=predicate):
            if not isinstance(t.subject, Iri) or not isinstance(t.object, Literal):
                continue
            normalized = normalize_text(t.object.lexical)
            if not normalized:
                continue
            idx.add(
                LexicalEntry(
                    surface=t.object.lexical,
                    normalized=normalized,
                    language=t.object.language,
                    concept=t.subject,
                    predicate=predicate,
                )
            )
    return idx
