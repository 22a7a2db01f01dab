"""Category closure over SKOS-style subject/broader triples.

Each entity maps to its directly attached categories plus every broader
ancestor. Broader cycles are tolerated: the walk keeps a visited set and
simply stops expanding.
"""

from __future__ import annotations

from semlift import vocab
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri


def broader_map(g: Graph, broader_predicate: Iri = vocab.SKOS_BROADER) -> dict[Iri, set[Iri]]:
    out: dict[Iri, set[Iri]] = {}
    for t in g.match(predicate=broader_predicate):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            out.setdefault(t.subject, set()).add(t.object)
    return out


def ancestors(category: Iri, broader: dict[Iri, set[Iri]]) -> set[Iri]:
    """category itself plus everything reachable over broader links."""
    seen = {category}
    frontier = [category]
    while frontier:
        node = frontier.pop()
        for up in broader.get(node, ()):
            if up not in seen:
                seen.add(up)
                frontier.append(up)
    return seen


def categorize(
    g: Graph,
    subject_predicate: Iri = vocab.DCT_SUBJECT,
    broader_predicate: Iri = vocab.SKOS_BROADER,
) -> dict[Iri, set[Iri]]:
    """Entity -> its category closure. Entities with no subject triple are
    absent from the map (read as the empty set)."""
    broader = broader_map(g, broader_predicate)
    out: dict[Iri, set[Iri]] = {}
    for t in g.match(predicate=subject_predicate):
        if not isinstance(t.subject, Iri) or not isinstance(t.object, Iri):
            continue
        out.setdefault(t.subject, set()).update(ancestors(t.object, broader))
    return out
