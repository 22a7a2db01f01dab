"""HTTP service publishing the integrated graph as linked data.

Endpoints:
  GET  /health                    -> {"snapshot": <hash>, "status": "ok"}
  GET  /autocomplete?q=&limit=    -> ranked completions
  GET  /facets                    -> facet definitions, config order
  POST /search                    -> {total, entities, suggestions}
  GET  /entity/<pct-encoded-iri>  -> Turtle (Accept: text/turtle) or JSON
  POST /admin/reload              -> rebuild + atomic snapshot swap (opt-in)
  GET  /ui/...                    -> static frontend assets (opt-in)

All handlers read one immutable Snapshot grabbed at request start; a reload
swaps the holder's reference atomically, so in-flight requests finish on the
snapshot they started with. JSON bodies are canonical (sorted keys, compact
separators, UTF-8), so identical requests against the same snapshot hash
produce byte-identical responses.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Callable
from urllib.parse import parse_qs, unquote, urlparse

from semlift import vocab
from semlift.errors import QueryError, SemliftError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri, Literal
from semlift.rdf.turtle import write_turtle
from semlift.snapshot import Snapshot, canonical_json, facet_dicts
from semlift.search.facets import FilterSelection

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".ico": "image/x-icon",
}


class SnapshotHolder:
    """Mutable cell holding the current immutable snapshot."""

    def __init__(self, snapshot: Snapshot, rebuild: Callable[[], Snapshot] | None = None):
        self._snapshot = snapshot
        self._rebuild = rebuild
        self._lock = threading.Lock()

    @property
    def current(self) -> Snapshot:
        return self._snapshot

    def reload(self) -> Snapshot:
        if self._rebuild is None:
            raise SemliftError("reload is not configured")
        fresh = self._rebuild()
        with self._lock:
            self._snapshot = fresh
        return fresh


def preferred_label(snapshot: Snapshot, entity: Iri) -> str | None:
    candidates = []
    for predicate in snapshot.label_predicates:
        for lit in snapshot.graph.literals(entity, predicate):
            candidates.append((lit.language or "", lit.lexical))
    if not candidates:
        return None
    return min(candidates)[1]


def entity_json(snapshot: Snapshot, entity: Iri) -> dict:
    triples = snapshot.graph.match(subject=entity)
    properties: dict[str, list[dict]] = {}
    for t in triples:
        if isinstance(t.object, Literal):
            value = {
                "type": "literal",
                "value": t.object.lexical,
                "language": t.object.language,
                "datatype": t.object.datatype.value,
            }
        else:
            value = {"type": "iri", "value": str(t.object)}
        properties.setdefault(t.predicate.value, []).append(value)
    for values in properties.values():
        values.sort(key=lambda v: (v["value"], v.get("language") or ""))
    types = sorted(
        t.object.value
        for t in snapshot.graph.match(subject=entity, predicate=vocab.RDF_TYPE)
        if isinstance(t.object, Iri)
    )
    categories = sorted(c.value for c in snapshot.engine.categories_of(entity))
    return {
        "iri": entity.value,
        "label": preferred_label(snapshot, entity),
        "types": types,
        "categories": categories,
        "properties": properties,
    }


def run_search(snapshot: Snapshot, body: dict) -> dict:
    if not isinstance(body, dict):
        raise QueryError("request body must be a JSON object")
    raw_selections = body.get("selections", [])
    if not isinstance(raw_selections, list):
        raise QueryError("selections must be a list")
    selections = []
    for i, sel in enumerate(raw_selections):
        if not isinstance(sel, dict) or "facet" not in sel or "values" not in sel:
            raise QueryError(f"selections[{i}] must have 'facet' and 'values'")
        values = sel["values"]
        if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
            raise QueryError(f"selections[{i}].values must be a list of strings")
        selections.append(FilterSelection(str(sel["facet"]), frozenset(values)))
    offset = body.get("offset", 0)
    limit = body.get("limit", 50)
    if not isinstance(offset, int) or not isinstance(limit, int) or offset < 0 or limit < 0:
        raise QueryError("offset and limit must be nonnegative integers")

    engine = snapshot.engine
    state = engine.state(tuple(selections))
    entities = sorted(state.results, key=lambda e: e.value)
    page = entities[offset : offset + limit]
    return {
        "total": len(entities),
        "entities": [
            {
                "iri": e.value,
                "label": preferred_label(snapshot, e),
                "types": sorted(
                    t.object.value
                    for t in snapshot.graph.match(subject=e, predicate=vocab.RDF_TYPE)
                    if isinstance(t.object, Iri)
                ),
            }
            for e in page
        ],
        "suggestions": [
            {
                "facet": s.facet_id,
                "value": s.value,
                "count": s.count,
                "origin": s.origin,
                "hop": s.hop,
            }
            for s in engine.suggest(state)
        ],
    }


def make_handler(holder: SnapshotHolder, ui_dir: Path | None, allow_reload: bool):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default; tests hate chatter
            pass

        # -- plumbing ------------------------------------------------------

        def _send(self, status: int, content_type: str, body: bytes):
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _json(self, status: int, payload):
            self._send(status, "application/json; charset=utf-8", canonical_json(payload))

        def _error(self, status: int, message: str):
            self._json(status, {"error": message})

        def _read_body(self) -> bytes:
            length = int(self.headers.get("Content-Length", 0))
            return self.rfile.read(length) if length else b""

        # -- routing -------------------------------------------------------

        def do_GET(self):
            try:
                url = urlparse(self.path)
                if url.path == "/health":
                    snapshot = holder.current
                    return self._json(200, {"snapshot": snapshot.content_hash, "status": "ok"})
                if url.path == "/autocomplete":
                    return self._autocomplete(url)
                if url.path == "/facets":
                    return self._json(200, facet_dicts(holder.current.facets))
                if url.path.startswith("/entity/"):
                    return self._entity(url)
                if ui_dir is not None and (url.path == "/ui" or url.path.startswith("/ui/")):
                    return self._static(url.path)
                return self._error(404, f"no such resource: {url.path}")
            except SemliftError as e:
                return self._error(400, str(e))

        def do_POST(self):
            try:
                url = urlparse(self.path)
                if url.path == "/search":
                    try:
                        body = json.loads(self._read_body() or b"{}")
                    except json.JSONDecodeError as e:
                        return self._error(400, f"bad JSON body: {e}")
                    try:
                        return self._json(200, run_search(holder.current, body))
                    except QueryError as e:
                        return self._error(400, str(e))
                if url.path == "/admin/reload":
                    if not allow_reload:
                        return self._error(404, "reload is disabled")
                    fresh = holder.reload()
                    return self._json(200, {"snapshot": fresh.content_hash, "status": "reloaded"})
                return self._error(404, f"no such resource: {url.path}")
            except SemliftError as e:
                return self._error(400, str(e))

        # -- endpoints -----------------------------------------------------

        def _autocomplete(self, url):
            params = parse_qs(url.query)
            query = params.get("q", [""])[0]
            try:
                limit = int(params.get("limit", ["10"])[0])
            except ValueError:
                return self._error(400, "limit must be an integer")
            if limit < 1:
                return self._error(400, "limit must be >= 1")
            hits = holder.current.index.complete(query, limit)
            return self._json(
                200,
                [
                    {
                        "surface": h.surface,
                        "language": h.language,
                        "concept": h.concept.value,
                        "score": h.score,
                    }
                    for h in hits
                ],
            )

        def _entity(self, url):
            snapshot = holder.current
            raw = unquote(url.path[len("/entity/") :])
            try:
                entity = Iri(raw)
            except ValidationError:
                return self._error(400, f"not an IRI: {raw}")
            triples = snapshot.graph.match(subject=entity)
            if not triples:
                return self._error(404, f"unknown entity: {entity.value}")
            accept = self.headers.get("Accept", "")
            ranges = [part.split(";")[0].strip().lower() for part in accept.split(",") if part]
            wants_turtle = "text/turtle" in ranges
            wants_json = (
                not ranges
                or "application/json" in ranges
                or "*/*" in ranges
                or "application/*" in ranges
                or "text/*" in ranges
            )
            if wants_turtle:
                sub = Graph(triples, prefixes=snapshot.graph.prefixes)
                body = write_turtle(sub).encode("utf-8")
                return self._send(200, "text/turtle; charset=utf-8", body)
            if wants_json:
                return self._json(200, entity_json(snapshot, entity))
            return self._error(406, f"unsupported accept type: {accept}")

        def _static(self, path: str):
            relative = path[len("/ui") :].lstrip("/") or "index.html"
            target = (ui_dir / relative).resolve()
            if not str(target).startswith(str(ui_dir.resolve())) or not target.is_file():
                return self._error(404, f"no such file: {path}")
            content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
            self._send(200, content_type, target.read_bytes())

    return Handler


def make_server(
    holder: SnapshotHolder,
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: Path | None = None,
    allow_reload: bool = False,
) -> ThreadingHTTPServer:
    handler = make_handler(holder, ui_dir, allow_reload)
    return ThreadingHTTPServer((host, port), handler)
