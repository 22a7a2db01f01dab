"""N-Triples reading and writing.

The writer emits one triple per line, `.`-terminated, lines sorted
lexicographically, so output is canonical and byte-stable. The parser is
fail-fast: the first syntax error aborts with its line number and offending
token, and no partial graph is returned. parse(write(g)) reproduces g's
triple set exactly.
"""

from __future__ import annotations

import re

from semlift.errors import ParseError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import BlankNode, Iri, Literal, Term, Triple

_ECHARS = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LANGTAG_RE = re.compile(r"@([A-Za-z]{1,8}(?:-[A-Za-z0-9]{1,8})*)")
_BLANK_RE = re.compile(r"_:([A-Za-z0-9_]+)")


def write_ntriples(g: Graph) -> str:
    lines = sorted(t.nt() for t in g.triple_set())
    return "".join(line + "\n" for line in lines)


def parse_ntriples(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e}") from None
    g = Graph()
    for lineno, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        g.insert(_parse_line(line, lineno))
    return g


class _LineScanner:
    """Single-line cursor with token-level error reporting."""

    def __init__(self, line: str, lineno: int):
        self.line = line
        self.lineno = lineno
        self.pos = 0

    def error(self, message: str, at: int | None = None) -> ParseError:
        start = self.pos if at is None else at
        token = self.line[start : start + 20] or "end of line"
        return ParseError(message, line=self.lineno, token=token)

    def skip_ws(self):
        while self.pos < len(self.line) and self.line[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.line)

    def peek(self) -> str:
        return self.line[self.pos] if self.pos < len(self.line) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def read_iri(self) -> Iri:
        start = self.pos
        self.expect("<")
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated IRI", at=start)
            ch = self.line[self.pos]
            if ch == ">":
                self.pos += 1
                break
            if ch == "\\":
                out.append(self._read_unicode_escape(allow_echar=False))
            else:
                out.append(ch)
                self.pos += 1
        try:
            return Iri("".join(out))
        except ValidationError as e:
            raise self.error(str(e), at=start) from None

    def read_blank(self) -> BlankNode:
        m = _BLANK_RE.match(self.line, self.pos)
        if not m:
            raise self.error("invalid blank node label")
        self.pos = m.end()
        return BlankNode(m.group(1))

    def read_literal(self) -> Literal:
        start = self.pos
        self.expect('"')
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated string literal", at=start)
            ch = self.line[self.pos]
            if ch == '"':
                self.pos += 1
                break
            if ch == "\\":
                out.append(self._read_unicode_escape(allow_echar=True))
            else:
                out.append(ch)
                self.pos += 1
        lexical = "".join(out)
        if self.peek() == "@":
            m = _LANGTAG_RE.match(self.line, self.pos)
            if not m:
                raise self.error("invalid language tag")
            self.pos = m.end()
            return Literal(lexical, language=m.group(1))
        if self.line.startswith("^^", self.pos):
            self.pos += 2
            dt = self.read_iri()
            return Literal(lexical, datatype=dt)
        return Literal(lexical)

    def _read_unicode_escape(self, allow_echar: bool) -> str:
        # positioned at the backslash
        start = self.pos
        self.pos += 1
        if self.at_end():
            raise self.error("dangling escape", at=start)
        kind = self.line[self.pos]
        self.pos += 1
        if kind == "u" or kind == "U":
            width = 4 if kind == "u" else 8
            hexdigits = self.line[self.pos : self.pos + width]
            if len(hexdigits) != width or not re.fullmatch(r"[0-9A-Fa-f]+", hexdigits):
                raise self.error("bad \\u escape", at=start)
            self.pos += width
            cp = int(hexdigits, 16)
            if cp > 0x10FFFF:
                raise self.error("codepoint out of range", at=start)
            return chr(cp)
        if allow_echar and kind in _ECHARS:
            return _ECHARS[kind]
        raise self.error(f"invalid escape \\{kind}", at=start)


def _parse_line(line: str, lineno: int) -> Triple:
    sc = _LineScanner(line, lineno)
    sc.skip_ws()
    ch = sc.peek()
    if ch == "<":
        subject: Term = sc.read_iri()
    elif ch == "_":
        subject = sc.read_blank()
    else:
        raise sc.error("expected subject (IRI or blank node)")
    sc.skip_ws()
    if sc.peek() != "<":
        raise sc.error("expected predicate IRI")
    predicate = sc.read_iri()
    sc.skip_ws()
    ch = sc.peek()
    if ch == "<":
        obj: Term = sc.read_iri()
    elif ch == "_":
        obj = sc.read_blank()
    elif ch == '"':
        obj = sc.read_literal()
    else:
        raise sc.error("expected object (IRI, blank node, or literal)")
    sc.skip_ws()
    sc.expect(".")
    sc.skip_ws()
    if not sc.at_end() and sc.peek() != "#":
        raise sc.error("trailing content after '.'")
    try:
        return Triple(subject, predicate, obj)
    except ValidationError as e:
        raise ParseError(str(e), line=lineno) from None
