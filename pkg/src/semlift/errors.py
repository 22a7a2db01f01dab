"""Exception hierarchy for the toolkit.

Every error raised by semlift derives from SemliftError so the CLI can turn
any failure into a single machine-parseable line and a nonzero exit code.
"""

from __future__ import annotations


class SemliftError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(SemliftError):
    """A domain object violates one of its invariants."""


class ParseError(SemliftError):
    """Syntax error in an input document. Fail-fast: no partial result."""

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.line = line
        self.token = token
        parts = [message]
        if line is not None:
            parts.append(f"line {line}")
        if token is not None:
            parts.append(f"near {token!r}")
        super().__init__(": ".join(parts))


class UnsupportedFeatureError(ParseError):
    """Input uses a construct outside the supported subset."""

    def __init__(self, construct: str, line: int | None = None, *, kind: str = "Turtle feature"):
        self.construct = construct
        super().__init__(f"unsupported {kind}: {construct}", line=line)


class SchemaError(SemliftError):
    """An XML schema model violates the supported subset or its invariants."""


class ConversionError(SemliftError):
    """An XML instance document cannot be converted under its schema."""


class OntologyError(SemliftError):
    """Ontology loading or merging failed (missing import, cycle, bad axiom)."""


class EnrichmentError(SemliftError):
    """A whole enrichment source is unusable (per-entity problems are skips)."""


class QueryError(SemliftError):
    """A search or facet request references something undefined."""


class ConfigError(SemliftError):
    """The pipeline configuration file is missing, malformed, or inconsistent."""
