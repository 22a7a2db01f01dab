"""Turtle subset reading and writing.

Supported: @prefix directives, prefixed names, the `a` keyword, object lists
(`,`), predicate lists (`;`), language tags, typed literals, blank node
labels, comments. Everything else (collections, blank node property lists,
quoted triples, multi-line strings, bare numeric/boolean literals, @base)
raises an "unsupported Turtle feature" error naming the construct.

The writer groups triples by subject, sorts everything by N-Triples
rendering, and compacts IRIs against the prefix map, so its output is
byte-stable; parse(write(g)) reproduces g's triple set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from semlift import vocab
from semlift.errors import ParseError, UnsupportedFeatureError, ValidationError
from semlift.rdf.graph import Graph
from semlift.rdf.terms import (
    RDF_LANG_STRING,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
    escape_literal,
)

_PNAME_RE = re.compile(r"(?:[A-Za-z_][A-Za-z0-9_\-]*)?:(?:[A-Za-z0-9_][A-Za-z0-9_\-]*)?")
_LOCAL_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_\-]*")
_BLANK_RE = re.compile(r"_:([A-Za-z0-9_]+)")
_AT_WORD_RE = re.compile(r"@([A-Za-z]+(?:-[A-Za-z0-9]+)*)")
_WORD_RE = re.compile(r"[A-Za-z]+")
_ECHARS = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


@dataclass
class _Token:
    kind: str  # IRIREF PNAME BLANK STRING ATWORD DTYPE DOT SEMI COMMA A EOF
    value: object
    line: int
    text: str


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1

    def _error(self, msg: str, token: str | None = None) -> ParseError:
        return ParseError(msg, line=self.line, token=token)

    def _unsupported(self, construct: str) -> UnsupportedFeatureError:
        return UnsupportedFeatureError(construct, line=self.line)

    def _advance(self, n: int):
        self.line += self.text.count("\n", self.pos, self.pos + n)
        self.pos += n

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            tok = self._next()
            out.append(tok)
            if tok.kind == "EOF":
                return out

    def _next(self) -> _Token:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch in " \t\r\n":
                self._advance(1)
            elif ch == "#":
                nl = text.find("\n", self.pos)
                self._advance((nl if nl != -1 else len(text)) - self.pos)
            else:
                break
        if self.pos >= len(self.text):
            return _Token("EOF", None, self.line, "end of input")
        start, line = self.pos, self.line
        ch = text[self.pos]

        if ch == "<":
            if text.startswith("<<", self.pos):
                raise self._unsupported("quoted triple")
            return self._iriref(line)
        if ch == '"':
            if text.startswith('"""', self.pos):
                raise self._unsupported("triple-quoted string")
            return self._string(line)
        if ch == "'":
            raise self._unsupported("single-quoted string")
        if ch == "[" or ch == "]":
            raise self._unsupported("blank node property list")
        if ch == "(" or ch == ")":
            raise self._unsupported("collection")
        if ch == "{" or ch == "}":
            raise self._unsupported("graph block")
        if ch == "@":
            m = _AT_WORD_RE.match(text, self.pos)
            if not m:
                raise self._error("bad @ token", text[start : start + 10])
            self._advance(m.end() - start)
            word = m.group(1)
            if word.lower() == "base":
                raise self._unsupported("@base directive")
            return _Token("ATWORD", word, line, m.group(0))
        if ch == "_":
            m = _BLANK_RE.match(text, self.pos)
            if not m:
                raise self._error("invalid blank node label", text[start : start + 10])
            self._advance(m.end() - start)
            return _Token("BLANK", m.group(1), line, m.group(0))
        if text.startswith("^^", self.pos):
            self._advance(2)
            return _Token("DTYPE", None, line, "^^")
        if ch == ";":
            self._advance(1)
            return _Token("SEMI", None, line, ";")
        if ch == ",":
            self._advance(1)
            return _Token("COMMA", None, line, ",")
        if ch == ".":
            if self.pos + 1 < len(text) and text[self.pos + 1].isdigit():
                raise self._unsupported("numeric literal")
            self._advance(1)
            return _Token("DOT", None, line, ".")
        if ch.isdigit() or ch in "+-":
            raise self._unsupported("numeric literal")

        m = _PNAME_RE.match(text, self.pos)
        if m:
            prefix, _, local = m.group(0).partition(":")
            self._advance(m.end() - start)
            return _Token("PNAME", (prefix, local), line, m.group(0))
        m = _WORD_RE.match(text, self.pos)
        if m:
            word = m.group(0)
            self._advance(len(word))
            if word == "a":
                return _Token("A", None, line, "a")
            if word in ("true", "false"):
                raise self._unsupported("boolean literal")
            if word.upper() in ("PREFIX", "BASE"):
                raise self._unsupported("SPARQL-style directive")
            raise self._error("unexpected token", word)
        raise self._error("unexpected character", ch)

    def _iriref(self, line: int) -> _Token:
        text = self.text
        start = self.pos
        self._advance(1)
        out = []
        while True:
            if self.pos >= len(text) or text[self.pos] == "\n":
                raise ParseError("unterminated IRI", line=line, token=text[start : start + 20])
            ch = text[self.pos]
            if ch == ">":
                self._advance(1)
                break
            if ch == "\\":
                out.append(self._escape(line, allow_echar=False))
            else:
                out.append(ch)
                self._advance(1)
        return _Token("IRIREF", "".join(out), line, text[start : self.pos])

    def _string(self, line: int) -> _Token:
        text = self.text
        start = self.pos
        self._advance(1)
        out = []
        while True:
            if self.pos >= len(text) or text[self.pos] == "\n":
                raise ParseError(
                    "unterminated string literal", line=line, token=text[start : start + 20]
                )
            ch = text[self.pos]
            if ch == '"':
                self._advance(1)
                break
            if ch == "\\":
                out.append(self._escape(line, allow_echar=True))
            else:
                out.append(ch)
                self._advance(1)
        return _Token("STRING", "".join(out), line, text[start : self.pos])

    def _escape(self, line: int, allow_echar: bool) -> str:
        text = self.text
        start = self.pos
        self._advance(1)
        if self.pos >= len(text):
            raise ParseError("dangling escape", line=line)
        kind = text[self.pos]
        self._advance(1)
        if kind in ("u", "U"):
            width = 4 if kind == "u" else 8
            hexdigits = text[self.pos : self.pos + width]
            if len(hexdigits) != width or not re.fullmatch(r"[0-9A-Fa-f]+", hexdigits):
                raise ParseError("bad \\u escape", line=line, token=text[start : start + 10])
            self._advance(width)
            cp = int(hexdigits, 16)
            if cp > 0x10FFFF:
                raise ParseError("codepoint out of range", line=line)
            return chr(cp)
        if allow_echar and kind in _ECHARS:
            return _ECHARS[kind]
        raise ParseError(f"invalid escape \\{kind}", line=line)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0
        self.graph = Graph()

    def _peek(self) -> _Token:
        return self.tokens[self.i]

    def _take(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        tok = self._take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}", line=tok.line, token=tok.text)
        return tok

    def parse(self) -> Graph:
        while True:
            tok = self._peek()
            if tok.kind == "EOF":
                return self.graph
            if tok.kind == "ATWORD":
                self._directive()
            else:
                self._triples()

    def _directive(self):
        tok = self._take()
        if tok.value != "prefix":
            raise ParseError("unknown directive", line=tok.line, token=tok.text)
        name = self._expect("PNAME")
        prefix, local = name.value
        if local:
            raise ParseError("bad prefix declaration", line=name.line, token=name.text)
        ns = self._expect("IRIREF")
        self._expect("DOT")
        self.graph.prefixes[prefix] = ns.value

    def _triples(self):
        subject = self._subject()
        while True:
            predicate = self._verb()
            while True:
                obj = self._object()
                try:
                    self.graph.insert(Triple(subject, predicate, obj))
                except ValidationError as e:
                    raise ParseError(str(e), line=self._peek().line) from None
                if self._peek().kind == "COMMA":
                    self._take()
                    continue
                break
            if self._peek().kind == "SEMI":
                while self._peek().kind == "SEMI":
                    self._take()
                if self._peek().kind == "DOT":
                    break
                continue
            break
        self._expect("DOT")

    def _subject(self) -> Term:
        tok = self._take()
        if tok.kind == "IRIREF":
            return self._iri(tok.value, tok)
        if tok.kind == "PNAME":
            return self._expand(tok)
        if tok.kind == "BLANK":
            return BlankNode(tok.value)
        raise ParseError("expected subject", line=tok.line, token=tok.text)

    def _verb(self) -> Iri:
        tok = self._take()
        if tok.kind == "A":
            return vocab.RDF_TYPE
        if tok.kind == "IRIREF":
            return self._iri(tok.value, tok)
        if tok.kind == "PNAME":
            return self._expand(tok)
        raise ParseError("expected predicate", line=tok.line, token=tok.text)

    def _object(self) -> Term:
        tok = self._take()
        if tok.kind == "IRIREF":
            return self._iri(tok.value, tok)
        if tok.kind == "PNAME":
            return self._expand(tok)
        if tok.kind == "BLANK":
            return BlankNode(tok.value)
        if tok.kind == "STRING":
            return self._literal(tok)
        raise ParseError("expected object", line=tok.line, token=tok.text)

    def _literal(self, tok: _Token) -> Literal:
        nxt = self._peek()
        if nxt.kind == "ATWORD":
            self._take()
            try:
                return Literal(tok.value, language=nxt.value)
            except ValidationError as e:
                raise ParseError(str(e), line=nxt.line, token=nxt.text) from None
        if nxt.kind == "DTYPE":
            self._take()
            dt_tok = self._take()
            if dt_tok.kind == "IRIREF":
                dt = self._iri(dt_tok.value, dt_tok)
            elif dt_tok.kind == "PNAME":
                dt = self._expand(dt_tok)
            else:
                raise ParseError("expected datatype IRI", line=dt_tok.line, token=dt_tok.text)
            try:
                if dt.value == RDF_LANG_STRING:
                    raise ValidationError("rdf:langString literal requires a language tag")
                return Literal(tok.value, datatype=dt)
            except ValidationError as e:
                raise ParseError(str(e), line=dt_tok.line, token=dt_tok.text) from None
        return Literal(tok.value)

    def _iri(self, value: str, tok: _Token) -> Iri:
        try:
            return Iri(value)
        except ValidationError as e:
            raise ParseError(str(e), line=tok.line, token=tok.text) from None

    def _expand(self, tok: _Token) -> Iri:
        prefix, local = tok.value
        ns = self.graph.prefixes.get(prefix)
        if ns is None:
            raise ParseError(f"undeclared prefix {prefix!r}", line=tok.line, token=tok.text)
        return self._iri(ns + local, tok)


def parse_turtle(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e}") from None
    return _Parser(_Tokenizer(text).tokens()).parse()


def write_turtle(g: Graph, prefixes: dict[str, str] | None = None) -> str:
    """Serialize a graph as Turtle. Only prefixes actually used are declared."""
    pmap = dict(g.prefixes if prefixes is None else prefixes)
    candidates = sorted(pmap.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    used: set[str] = set()

    def render_iri(iri: Iri) -> str:
        for prefix, ns in candidates:
            if iri.value.startswith(ns):
                local = iri.value[len(ns) :]
                if local == "" or _LOCAL_RE.fullmatch(local):
                    used.add(prefix)
                    return f"{prefix}:{local}"
        return iri.nt()

    def render_term(term: Term) -> str:
        if isinstance(term, Iri):
            return render_iri(term)
        if isinstance(term, BlankNode):
            return term.nt()
        body = f'"{escape_literal(term.lexical)}"'
        if term.language is not None:
            return f"{body}@{term.language}"
        if term.datatype.value == XSD_STRING:
            return body
        return f"{body}^^{render_iri(term.datatype)}"

    by_subject: dict[str, tuple[Term, list[Triple]]] = {}
    for t in g.triple_set():
        by_subject.setdefault(t.subject.nt(), (t.subject, []))[1].append(t)

    blocks = []
    for _, (subject, triples) in sorted(by_subject.items()):
        by_pred: dict[str, tuple[Iri, list[Term]]] = {}
        for t in triples:
            by_pred.setdefault(t.predicate.nt(), (t.predicate, []))[1].append(t.object)
        pred_keys = sorted(by_pred, key=lambda k: (k != vocab.RDF_TYPE.nt(), k))
        parts = []
        for key in pred_keys:
            predicate, objects = by_pred[key]
            verb = "a" if predicate == vocab.RDF_TYPE else render_iri(predicate)
            rendered = [render_term(o) for o in sorted(objects, key=lambda o: o.nt())]
            parts.append(f"{verb} {', '.join(rendered)}")
        blocks.append(f"{render_term(subject)} " + " ;\n    ".join(parts) + " .")

    header = "".join(
        f"@prefix {p}: <{pmap[p]}> .\n" for p in sorted(used)
    )
    body = "\n\n".join(blocks)
    if header and body:
        return header + "\n" + body + "\n"
    if body:
        return body + "\n"
    return header
