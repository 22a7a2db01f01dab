import random

from semlift.rdf import Graph, Iri, Literal, Triple

from rdfgen import random_graph, random_iri, random_term, random_triple

A = Iri("http://x/a")
B = Iri("http://x/b")
C = Iri("http://x/c")
D = Iri("http://x/d")
P = Iri("http://x/p")


def scan_match(triples, s, p, o):
    """Naive list-scan oracle for Graph.match."""
    hits = [
        t
        for t in triples
        if (s is None or t.subject == s)
        and (p is None or t.predicate == p)
        and (o is None or t.object == o)
    ]
    return sorted(hits, key=lambda t: t.nt())


class TestInsert:
    def test_insert_into_empty_graph(self):
        g = Graph()
        assert g.insert(Triple(A, P, B)) is True
        assert len(g) == 1

    def test_duplicate_insert_is_noop(self):
        g = Graph([Triple(A, P, B)])
        assert g.insert(Triple(A, P, B)) is False
        assert len(g) == 1

    def test_thousand_distinct_triples(self):
        rng = random.Random(41)
        triples = set()
        while len(triples) < 1000:
            triples.add(random_triple(rng))
        g = Graph()
        for t in triples:
            g.insert(t)
        assert len(g) == 1000
        # lookup by any subject returns exactly its triples (vs list-scan oracle)
        for s in {t.subject for t in triples}:
            assert g.match(subject=s) == scan_match(triples, s, None, None)


class TestMatch:
    def test_empty_graph(self):
        assert Graph().match() == []

    def test_bound_subject(self):
        g = Graph([Triple(A, P, B), Triple(C, P, D)])
        assert g.match(subject=A) == [Triple(A, P, B)]

    def test_all_unbound_returns_everything(self):
        rng = random.Random(7)
        g = random_graph(rng)
        assert len(g.match()) == len(g)

    def test_random_patterns_equal_scan_oracle(self):
        rng = random.Random(1234)
        g = Graph()
        while len(g) < 200:
            g.insert(random_triple(rng))
        triples = g.triple_set()
        pool_s = sorted({t.subject for t in triples}, key=lambda x: x.nt())
        pool_p = sorted({t.predicate for t in triples}, key=lambda x: x.nt())
        pool_o = sorted({t.object for t in triples}, key=lambda x: x.nt())
        for _ in range(50):
            s = rng.choice(pool_s) if rng.random() < 0.5 else None
            p = rng.choice(pool_p) if rng.random() < 0.5 else None
            o = rng.choice(pool_o) if rng.random() < 0.5 else None
            if rng.random() < 0.2:
                # also probe terms that may not occur at all
                s = random_term(rng, allow_literal=False)
            assert g.match(s, p, o) == scan_match(triples, s, p, o)


class TestIndexes:
    def test_index_agreement(self):
        rng = random.Random(99)
        g = random_graph(rng, max_triples=80)
        for t in g.triple_set():
            assert t in g.match(subject=t.subject)
            assert t in g.match(predicate=t.predicate)
            assert t in g.match(object=t.object)

    def test_inserted_triple_found_by_full_pattern(self):
        rng = random.Random(5)
        g = Graph()
        for _ in range(100):
            t = random_triple(rng)
            g.insert(t)
            assert g.match(t.subject, t.predicate, t.object) == [t]

    def test_iteration_is_sorted(self):
        rng = random.Random(17)
        g = random_graph(rng)
        rendered = [t.nt() for t in g]
        assert rendered == sorted(rendered)

    def test_copy_is_independent(self):
        g = Graph([Triple(A, P, B)])
        h = g.copy()
        h.insert(Triple(C, P, D))
        assert len(g) == 1 and len(h) == 2
        assert g.match(subject=C) == []


class TestHelpers:
    def test_objects_and_literals(self):
        g = Graph([Triple(A, P, Literal("x")), Triple(A, P, B)])
        assert g.objects(A, P) == [Literal("x"), B]
        assert g.literals(A, P) == [Literal("x")]

    def test_subjects_distinct_sorted(self):
        g = Graph([Triple(C, P, B), Triple(A, P, B), Triple(A, P, D)])
        assert g.subjects(predicate=P) == [A, C]
