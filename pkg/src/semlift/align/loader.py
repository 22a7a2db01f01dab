"""Loading modular ontology documents from Turtle, with local import resolution.

Imports resolve against a local directory only (never the network): the file
for an imported ontology id is `<import_dir>/<percent-encoded-id>.ttl`.
Import cycles are rejected with the cycle spelled out.
"""

from __future__ import annotations

from pathlib import Path
from urllib.parse import quote

from semlift import vocab
from semlift.errors import OntologyError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri
from semlift.rdf.turtle import parse_turtle
from semlift.align.model import ClassDecl, Label, Ontology, PropDecl


def _labels_for(g: Graph, iri: Iri) -> tuple[Label, ...]:
    labels = []
    for lit in g.literals(iri, vocab.RDFS_LABEL):
        labels.append((lit.lexical, lit.language))
    return tuple(labels)


def ontology_from_graph(g: Graph) -> Ontology:
    ids = [s for s in g.subjects(vocab.RDF_TYPE, vocab.OWL_ONTOLOGY) if isinstance(s, Iri)]
    onto_id = ids[0] if ids else None

    onto = Ontology(id=onto_id)
    class_subjects = set(g.subjects(vocab.RDF_TYPE, vocab.OWL_CLASS)) | set(
        g.subjects(vocab.RDF_TYPE, vocab.RDFS_CLASS)
    )
    for s in class_subjects:
        if isinstance(s, Iri):
            onto.classes[s] = ClassDecl(s, _labels_for(g, s))
    for kind, marker in (("datatype", vocab.OWL_DATATYPE_PROPERTY), ("object", vocab.OWL_OBJECT_PROPERTY)):
        for s in g.subjects(vocab.RDF_TYPE, marker):
            if isinstance(s, Iri):
                onto.properties[s] = PropDecl(s, kind, _labels_for(g, s))
    for t in g.match(predicate=vocab.RDFS_SUBCLASSOF):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            onto.subclass_axioms.add((t.subject, t.object))
    for t in g.match(predicate=vocab.RDFS_SUBPROPERTYOF):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            onto.subproperty_axioms.add((t.subject, t.object))
    if onto_id is not None:
        onto.imports = tuple(
            o for o in g.objects(onto_id, vocab.OWL_IMPORTS) if isinstance(o, Iri)
        )
    return onto


def import_file_for(import_dir: Path, ontology_id: Iri) -> Path:
    return import_dir / (quote(ontology_id.value, safe="") + ".ttl")


def load_ontology(
    paths: list[str | Path], import_dir: str | Path | None = None
) -> tuple[Ontology, Graph]:
    """Load and merge ontology documents, resolving owl:imports locally.

    Returns the merged Ontology plus the merged RDF graph it was read from
    (the graph keeps label/axiom triples for downstream consumers).
    """
    merged = Ontology()
    merged_graph = Graph()
    loaded: set[Iri] = set()

    def load_graph(g: Graph, in_progress: list[Iri]):
        part = ontology_from_graph(g)
        if part.id is not None:
            if part.id in loaded:
                return
            loaded.add(part.id)
        merged.merge(part)
        merged_graph.insert_all(g.triple_set())
        for prefix, ns in g.prefixes.items():
            merged_graph.prefixes.setdefault(prefix, ns)
        chain = in_progress + [part.id] if part.id is not None else in_progress
        for imported in part.imports:
            if imported in chain:
                cycle = chain + [imported]
                raise OntologyError("import cycle: " + " -> ".join(i.value for i in cycle))
            if imported in loaded:
                continue
            if import_dir is None:
                raise OntologyError(
                    f"missing import {imported.value} (no import directory configured)"
                )
            path = import_file_for(Path(import_dir), imported)
            if not path.exists():
                raise OntologyError(f"missing import {imported.value} (expected {path})")
            load_graph(parse_turtle(path.read_text(encoding="utf-8")), chain)

    for p in paths:
        text = Path(p).read_text(encoding="utf-8")
        load_graph(parse_turtle(text), [])

    merged.validate()
    return merged, merged_graph
