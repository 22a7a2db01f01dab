"""An in-memory RDF graph with set semantics and three lookup indexes.

Construction is single-writer; once filled, a Graph is treated as immutable
and can be shared freely across threads for reads. All query results come
back in a deterministic order (lexicographic by N-Triples rendering), so
serialized output and golden files are byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from semlift.errors import ValidationError
from semlift.rdf.terms import Iri, Literal, Term, Triple


def triple_sort_key(t: Triple) -> str:
    return t.nt()


class Graph:
    __slots__ = ("_triples", "_by_subject", "_by_predicate", "_by_object", "prefixes")

    def __init__(self, triples: Iterable[Triple] = (), prefixes: dict[str, str] | None = None):
        self._triples: set[Triple] = set()
        self._by_subject: dict[Term, set[Triple]] = {}
        self._by_predicate: dict[Iri, set[Triple]] = {}
        self._by_object: dict[Term, set[Triple]] = {}
        self.prefixes: dict[str, str] = dict(prefixes or {})
        for t in triples:
            self.insert(t)

    def insert(self, t: Triple) -> bool:
        """Add a triple. Returns True if the graph grew (set semantics)."""
        if not isinstance(t, Triple):
            raise ValidationError(f"not a triple: {t!r}")
        if t in self._triples:
            return False
        self._triples.add(t)
        self._by_subject.setdefault(t.subject, set()).add(t)
        self._by_predicate.setdefault(t.predicate, set()).add(t)
        self._by_object.setdefault(t.object, set()).add(t)
        return True

    def insert_all(self, triples: Iterable[Triple]) -> int:
        return sum(1 for t in triples if self.insert(t))

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples, key=triple_sort_key))

    def match(
        self,
        subject: Term | None = None,
        predicate: Iri | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """All triples matching the bound positions; None is a wildcard.

        Result order is lexicographic by N-Triples rendering.
        """
        candidates: set[Triple] | None = None
        if subject is not None:
            candidates = self._by_subject.get(subject, set())
        if predicate is not None:
            by_p = self._by_predicate.get(predicate, set())
            candidates = by_p if candidates is None else candidates & by_p
        if object is not None:
            by_o = self._by_object.get(object, set())
            candidates = by_o if candidates is None else candidates & by_o
        if candidates is None:
            candidates = self._triples
        return sorted(candidates, key=triple_sort_key)

    def objects(self, subject: Term, predicate: Iri) -> list[Term]:
        return [t.object for t in self.match(subject, predicate, None)]

    def subjects(self, predicate: Iri | None = None, object: Term | None = None) -> list[Term]:
        """Distinct subjects of matching triples, deterministically ordered."""
        seen = {t.subject for t in self.match(None, predicate, object)}
        return sorted(seen, key=lambda s: s.nt())

    def literals(self, subject: Term, predicate: Iri) -> list[Literal]:
        return [o for o in self.objects(subject, predicate) if isinstance(o, Literal)]

    def copy(self) -> Graph:
        g = Graph(prefixes=self.prefixes)
        g._triples = set(self._triples)
        g._by_subject = {k: set(v) for k, v in self._by_subject.items()}
        g._by_predicate = {k: set(v) for k, v in self._by_predicate.items()}
        g._by_object = {k: set(v) for k, v in self._by_object.items()}
        return g

    def triple_set(self) -> frozenset[Triple]:
        return frozenset(self._triples)
