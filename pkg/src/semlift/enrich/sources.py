"""External linked-data sources for enrichment.

The default is a fixture directory: one Turtle file per entity, filename =
percent-encoded entity IRI + ".ttl". A live dereference mode (HTTP GET with
`Accept: text/turtle`) exists behind the source kind but is never used by
the test suite; the public endpoints it would talk to are not reproducible
desk-side.
"""

from __future__ import annotations

import urllib.request
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import quote

from semlift.errors import EnrichmentError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import Iri
from semlift.rdf.turtle import parse_turtle

KIND_FIXTURE = "fixture-directory"
KIND_DEREFERENCE = "dereference-endpoint"


@dataclass(frozen=True)
class EnrichmentSource:
    id: str
    kind: str
    location: str  # directory path or base URL
    enabled_predicates: tuple[Iri, ...]

    def __post_init__(self):
        if self.kind not in (KIND_FIXTURE, KIND_DEREFERENCE):
            raise ValidationError(f"unknown source kind {self.kind!r}")
        if not self.enabled_predicates:
            raise ValidationError(f"source {self.id!r} has an empty predicate list")

    def check_usable(self):
        if self.kind == KIND_FIXTURE and not Path(self.location).is_dir():
            raise EnrichmentError(
                f"source {self.id!r}: fixture directory does not exist: {self.location}"
            )

    def fetch_description(self, iri: Iri) -> Graph | None:
        """The entity's description document, or None if the source has none."""
        if self.kind == KIND_FIXTURE:
            path = Path(self.location) / (quote(iri.value, safe="") + ".ttl")
            if not path.exists():
                return None
            return parse_turtle(path.read_text(encoding="utf-8"))
        request = urllib.request.Request(
            self.location.rstrip("/") + "/" + quote(iri.value, safe=""),
            headers={"Accept": "text/turtle"},
        )
        try:
            with urllib.request.urlopen(request, timeout=30) as response:
                return parse_turtle(response.read())
        except urllib.error.HTTPError as e:
            if e.code == 404:
                return None
            raise EnrichmentError(f"source {self.id!r}: HTTP {e.code} for {iri.value}") from None
