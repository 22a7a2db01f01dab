"""RDF terms: IRIs, blank nodes, literals, triples.

Terms are immutable value objects; equality is exact (codepoint equality for
IRIs, no normalization at compare time). Every term knows its own N-Triples
rendering via ``nt()``, which doubles as the canonical sort key everywhere a
deterministic order is required.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from semlift.errors import ValidationError

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
RDF_LANG_STRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
# Characters that may never appear raw in an IRI (RFC 3987 excludes them; they
# are also exactly what would break the <...> serialization).
_IRI_FORBIDDEN = set(' <>"\\^`{|}') | {chr(c) for c in range(0x21)} | {"\x7f"}
_BLANK_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
_LANG_TAG_RE = re.compile(r"^[a-z]{1,8}(-[a-z0-9]{1,8})*$")

_LITERAL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def escape_literal(text: str) -> str:
    """Escape a literal's lexical form for N-Triples / Turtle output."""
    out = []
    for ch in text:
        if ch in _LITERAL_ESCAPES:
            out.append(_LITERAL_ESCAPES[ch])
        elif ord(ch) < 0x20 or ch == "\x7f":
            out.append("\\u%04X" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class Iri:
    """An absolute IRI. Validated once at construction, compared verbatim."""

    value: str

    def __post_init__(self):
        if not _SCHEME_RE.match(self.value):
            raise ValidationError(f"not an absolute IRI (missing scheme): {self.value!r}")
        bad = [ch for ch in self.value if ch in _IRI_FORBIDDEN]
        if bad:
            raise ValidationError(f"illegal character {bad[0]!r} in IRI {self.value!r}")

    def nt(self) -> str:
        return f"<{self.value}>"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not _BLANK_LABEL_RE.match(self.label):
            raise ValidationError(f"invalid blank node label: {self.label!r}")

    def nt(self) -> str:
        return f"_:{self.label}"

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True)
class Literal:
    """A literal with lexical form, datatype, and optional language tag.

    A language tag forces the datatype to rdf:langString; without one the
    datatype defaults to xsd:string. Tags are lowercased on construction.
    """

    lexical: str
    datatype: Iri = field(default=None)  # type: ignore[assignment]
    language: str | None = None

    def __post_init__(self):
        if self.language is not None:
            lang = self.language.lower()
            if not _LANG_TAG_RE.match(lang):
                raise ValidationError(f"invalid language tag: {self.language!r}")
            object.__setattr__(self, "language", lang)
            if self.datatype is not None and self.datatype.value != RDF_LANG_STRING:
                raise ValidationError(
                    f"language-tagged literal must use rdf:langString, got {self.datatype}"
                )
            object.__setattr__(self, "datatype", Iri(RDF_LANG_STRING))
        elif self.datatype is None:
            object.__setattr__(self, "datatype", Iri(XSD_STRING))
        elif self.datatype.value == RDF_LANG_STRING:
            raise ValidationError("rdf:langString literal requires a language tag")

    def nt(self) -> str:
        body = f'"{escape_literal(self.lexical)}"'
        if self.language is not None:
            return f"{body}@{self.language}"
        if self.datatype.value == XSD_STRING:
            return body
        return f"{body}^^{self.datatype.nt()}"

    def __str__(self) -> str:
        return self.nt()


Term = Union[Iri, BlankNode, Literal]
Subject = Union[Iri, BlankNode]


@dataclass(frozen=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValidationError("literal in subject position")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise ValidationError(f"bad subject: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise ValidationError(f"predicate must be an IRI, got: {self.predicate!r}")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise ValidationError(f"bad object: {self.object!r}")

    def nt(self) -> str:
        return f"{self.subject.nt()} {self.predicate.nt()} {self.object.nt()} ."

    def __str__(self) -> str:
        return self.nt()
