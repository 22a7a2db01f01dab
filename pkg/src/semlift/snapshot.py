"""Immutable query snapshots: graph + ontology + indexes + content hash.

The hash covers exactly what answers queries (canonical graph bytes,
canonical ontology bytes, facet definitions, label predicates) and excludes
the build timestamp, so two builds from the same inputs hash identically.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from semlift.errors import ConfigError
from semlift.rdf.graph import Graph
from semlift.rdf.ntriples import parse_ntriples, write_ntriples
from semlift.rdf.terms import Iri
from semlift.align.loader import ontology_from_graph
from semlift.align.model import Ontology
from semlift.search.autocomplete import AutocompleteIndex, build_index
from semlift.search.facets import FacetDefinition, FacetEngine


def canonical_json(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")).encode(
        "utf-8"
    )


@dataclass
class Snapshot:
    graph: Graph
    ontology: Ontology
    ontology_graph: Graph
    index: AutocompleteIndex
    engine: FacetEngine
    facets: list[FacetDefinition]
    label_predicates: list[Iri]
    built_at: str
    content_hash: str


def facet_dicts(facets: list[FacetDefinition]) -> list[dict]:
    return [{"id": f.id, "kind": f.kind, "anchor": f.anchor.value, "label": f.label} for f in facets]


def compute_hash(
    graph: Graph,
    ontology_graph: Graph,
    facets: list[FacetDefinition],
    label_predicates: list[Iri],
) -> str:
    h = hashlib.sha256()
    h.update(b"graph\n")
    h.update(write_ntriples(graph).encode("utf-8"))
    h.update(b"ontology\n")
    h.update(write_ntriples(ontology_graph).encode("utf-8"))
    h.update(b"facets\n")
    h.update(canonical_json(facet_dicts(facets)))
    h.update(b"labels\n")
    h.update(canonical_json([p.value for p in label_predicates]))
    return h.hexdigest()


def build_snapshot(
    graph: Graph,
    ontology_graph: Graph,
    facets: list[FacetDefinition],
    label_predicates: list[Iri],
) -> Snapshot:
    ontology = ontology_from_graph(ontology_graph)
    return Snapshot(
        graph=graph,
        ontology=ontology,
        ontology_graph=ontology_graph,
        index=build_index(graph, label_predicates),
        engine=FacetEngine(graph, ontology, facets),
        facets=list(facets),
        label_predicates=list(label_predicates),
        built_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        content_hash=compute_hash(graph, ontology_graph, facets, label_predicates),
    )


def write_snapshot(snapshot: Snapshot, directory: str | Path):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "graph.nt").write_text(write_ntriples(snapshot.graph), encoding="utf-8")
    (directory / "ontology.nt").write_text(
        write_ntriples(snapshot.ontology_graph), encoding="utf-8"
    )
    manifest = {
        "content_hash": snapshot.content_hash,
        "built_at": snapshot.built_at,
        "triples": len(snapshot.graph),
        "ontology_triples": len(snapshot.ontology_graph),
        "index_entries": len(snapshot.index),
        "facets": facet_dicts(snapshot.facets),
        "label_predicates": [p.value for p in snapshot.label_predicates],
    }
    (directory / "manifest.json").write_bytes(canonical_json(manifest) + b"\n")


def load_snapshot(directory: str | Path) -> Snapshot:
    directory = Path(directory)
    manifest_path = directory / "manifest.json"
    if not manifest_path.is_file():
        raise ConfigError(f"no snapshot at {directory} (run the index step first)")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    graph = parse_ntriples((directory / "graph.nt").read_text(encoding="utf-8"))
    ontology_graph = parse_ntriples((directory / "ontology.nt").read_text(encoding="utf-8"))
    facets = [
        FacetDefinition(f["id"], f["kind"], Iri(f["anchor"]), f["label"])
        for f in manifest["facets"]
    ]
    label_predicates = [Iri(p) for p in manifest["label_predicates"]]
    snapshot = build_snapshot(graph, ontology_graph, facets, label_predicates)
    if snapshot.content_hash != manifest["content_hash"]:
        raise ConfigError(
            f"snapshot at {directory} is stale: stored hash {manifest['content_hash']} "
            f"!= recomputed {snapshot.content_hash}"
        )
    return snapshot
