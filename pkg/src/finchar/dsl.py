"""The ``.fch`` model-specification format.

One declaration per line, ``#`` starts a comment::

    universe A = 2
    product P = A x A
    bottom Ab = A
    subset E of A = { 0, 1 }
    listpred T over A = { [], [1], [1 0] }
    alignpred N over P = align R
    downclose D over A = { [0 1], [1] }
    chaingrammar G over A = { [], [0], [1], [0 1] }
    relation R over A x A = { (0,1), (1,0) }
    order O on A = { (0,1) }

Element literals are indices; over a product universe they are ``(i,j)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from ._config import FincharError
from .gdc import Relation
from .model_core import (
    AlignmentOf,
    DownwardClosureOf,
    Explicit,
    ListPredicate,
    RawList,
    Subset,
    Universe,
)
from .zorn import ChainGrammar, OrderedModel

__all__ = ["ModelSpec", "ParseError", "parse", "serialize", "load"]

Declared = Union[Universe, Subset, ListPredicate, OrderedModel, Relation, ChainGrammar]


class ParseError(FincharError, ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class ModelSpec:
    """Named declarations in source order."""

    declarations: dict[str, Declared] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Declared:
        return self.declarations[name]

    def __contains__(self, name: object) -> bool:
        return name in self.declarations

    def get(self, name: str, kind: type | tuple[type, ...]) -> Declared:
        """Look up ``name`` and check its type; ``KeyError``/``TypeError`` otherwise."""
        if name not in self.declarations:
            raise KeyError(f"no declaration named {name!r}")
        obj = self.declarations[name]
        if not isinstance(obj, kind):
            raise TypeError(f"{name!r} is a {type(obj).__name__}")
        return obj

    def add(self, name: str, obj: Declared) -> None:
        if name in self.declarations:
            raise ValueError(f"duplicate name {name!r}")
        self.declarations[name] = obj


# ------------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[{}\[\](),=])|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(line: str, lineno: int) -> list[_Tok]:
    code = line.split("#", 1)[0]
    toks = []
    pos = 0
    while pos < len(code):
        m = _TOKEN.match(code, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        text = m.group(kind)
        col = m.start(kind) + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {text!r}", lineno, col)
        toks.append(_Tok(kind, text, col))
        pos = m.end()
    return toks


class _Line:
    def __init__(self, spec: ModelSpec, toks: list[_Tok], lineno: int, eol_col: int) -> None:
        self.spec = spec
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.eol_col = eol_col

    def error(self, message: str, tok: _Tok | None = None) -> ParseError:
        col = tok.col if tok is not None else self.eol_col
        return ParseError(message, self.lineno, col)

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, what: str) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise self.error(f"expected {what}, found end of line")
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.next(repr(text))
        if tok.text != text:
            raise self.error(f"expected {text!r}, found {tok.text!r}", tok)
        return tok

    def ident(self, what: str = "a name") -> _Tok:
        tok = self.next(what)
        if tok.kind != "ident":
            raise self.error(f"expected {what}, found {tok.text!r}", tok)
        return tok

    def integer(self) -> tuple[int, _Tok]:
        tok = self.next("an integer")
        if tok.kind != "int":
            raise self.error(f"expected an integer, found {tok.text!r}", tok)
        return int(tok.text), tok

    def end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise self.error(f"unexpected {tok.text!r} after declaration", tok)

    def ref(self, kind: type, what: str) -> object:
        tok = self.ident(what)
        if tok.text not in self.spec:
            raise self.error(f"unknown reference {tok.text!r}", tok)
        obj = self.spec[tok.text]
        if not isinstance(obj, kind):
            raise self.error(f"{tok.text!r} is not a {what}", tok)
        return obj

    def universe_ref(self) -> Universe:
        return self.ref(Universe, "universe")  # type: ignore[return-value]

    def element(self, universe: Universe) -> int:
        tok = self.peek()
        if universe.is_product:
            a, b = self.pair(universe.left, universe.right)
            return universe.pair(a, b)
        if tok is not None and tok.text == "(":
            raise self.error(f"pair literal used over non-product universe {universe.name}", tok)
        value, tv = self.integer()
        if value >= universe.size:
            raise self.error(f"index {value} out of range for {universe.name} (size {universe.size})", tv)
        return value

    def pair(self, left: Universe, right: Universe) -> tuple[int, int]:
        self.expect("(")
        a, ta = self.integer()
        self.expect(",")
        b, tb = self.integer()
        self.expect(")")
        if a >= left.size:
            raise self.error(f"index {a} out of range for {left.name} (size {left.size})", ta)
        if b >= right.size:
            raise self.error(f"index {b} out of range for {right.name} (size {right.size})", tb)
        return a, b

    def braced(self, item):
        """``{ item, item, ... }`` with optional trailing comma."""
        self.expect("{")
        out = []
        while True:
            tok = self.peek()
            if tok is None:
                raise self.error("unterminated '{'")
            if tok.text == "}":
                self.i += 1
                return out
            out.append(item())
            tok = self.peek()
            if tok is None:
                raise self.error("unterminated '{'")
            if tok.text == ",":
                self.i += 1
            elif tok.text != "}":
                raise self.error("expected ',' or '}'", tok)

    def list_literal(self, universe: Universe) -> tuple[int, ...]:
        self.expect("[")
        items = []
        while True:
            tok = self.peek()
            if tok is None:
                raise self.error("unterminated '['")
            if tok.text == "]":
                self.i += 1
                return tuple(items)
            if tok.text == ",":
                self.i += 1
                continue
            items.append(self.element(universe))

    def product_clause(self) -> tuple[Universe, Universe]:
        """``A x B``."""
        left = self.universe_ref()
        tok = self.ident("'x'")
        if tok.text != "x":
            raise self.error(f"expected 'x', found {tok.text!r}", tok)
        right = self.universe_ref()
        return left, right


def _glued_product(p: _Line) -> Universe | None:
    """Read an undeclared ``LxR`` token as the product of two declared universes."""
    tok = p.peek()
    if tok is None or tok.kind != "ident" or tok.text in p.spec:
        return None
    splits = []
    for i, ch in enumerate(tok.text):
        if ch == "x":
            left, right = p.spec.declarations.get(tok.text[:i]), p.spec.declarations.get(tok.text[i + 1:])
            if isinstance(left, Universe) and isinstance(right, Universe):
                splits.append((left, right))
    if len(splits) != 1:
        return None
    p.i += 1
    return Universe.product(*splits[0])


def _parse_decl(p: _Line) -> tuple[_Tok, Declared]:
    kw = p.ident("a declaration keyword")
    name = p.ident("a declaration name")
    if name.text in p.spec:
        raise p.error(f"duplicate name {name.text!r}", name)
    word = kw.text
    if word == "universe":
        p.expect("=")
        size, _ = p.integer()
        obj: Declared = Universe.atomic(name.text, size)
    elif word == "product":
        p.expect("=")
        left, right = p.product_clause()
        obj = Universe.product(left, right, name.text)
    elif word == "bottom":
        p.expect("=")
        obj = Universe.bottom(p.universe_ref(), name.text)
    elif word == "subset":
        p.expect("of")
        U = p.universe_ref()
        p.expect("=")
        obj = Subset.of(U, p.braced(lambda: p.element(U)))
    elif word in ("listpred", "downclose", "chaingrammar"):
        p.expect("over")
        U = p.universe_ref()
        p.expect("=")
        lists = p.braced(lambda: p.list_literal(U))
        if word == "listpred":
            obj = Explicit(U, frozenset(RawList(U, u) for u in lists))
        elif word == "downclose":
            obj = DownwardClosureOf(U, frozenset(RawList(U, u) for u in lists))
        else:
            obj = ChainGrammar(U, frozenset(RawList(U, u) for u in lists))
    elif word == "alignpred":
        p.expect("over")
        first = p.peek()
        U = _glued_product(p) or p.universe_ref()
        tok = p.peek()
        if tok is not None and tok.text == "x":
            p.i += 1
            U = Universe.product(U, p.universe_ref())
        elif not U.is_product:
            raise p.error(f"{U.name!r} is not a product universe", first)
        p.expect("=")
        p.expect("align")
        rel_tok = p.peek()
        R = p.ref(Relation, "relation")
        if (R.left, R.right) != U.parts:  # type: ignore[attr-defined]
            raise p.error(f"relation {rel_tok.text!r} is not over {U.left.name} x {U.right.name}", rel_tok)
        obj = AlignmentOf(R, U)  # type: ignore[arg-type]
    elif word == "relation":
        p.expect("over")
        left, right = p.product_clause()
        p.expect("=")
        obj = Relation(left, right, frozenset(p.braced(lambda: p.pair(left, right))))
    elif word == "order":
        p.expect("on")
        U = p.universe_ref()
        p.expect("=")
        start = p.peek()
        pairs = p.braced(lambda: p.pair(U, U))
        try:
            obj = OrderedModel(U, frozenset(pairs))
        except FincharError as exc:
            raise p.error(str(exc), start) from None
    else:
        raise p.error(f"unknown declaration keyword {word!r}", kw)
    p.end()
    return name, obj


def parse(text: str) -> ModelSpec:
    """Parse ``.fch`` text; the first error raises ``ParseError`` with its position."""
    spec = ModelSpec()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        toks = _tokenize(line, lineno)
        if not toks:
            continue
        p = _Line(spec, toks, lineno, len(line.split("#", 1)[0].rstrip()) + 1)
        name, obj = _parse_decl(p)
        spec.add(name.text, obj)
    return spec


def load(path: str) -> ModelSpec:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse(fh.read())


# ------------------------------------------------------------- serializing


def _braces(items: list[str]) -> str:
    return "{ " + ", ".join(items) + " }" if items else "{}"


def _list_text(universe: Universe, items: tuple[int, ...]) -> str:
    return "[" + " ".join(universe.render(i) for i in items) + "]"


def _universe_text(spec: ModelSpec, U: Universe) -> str:
    if spec.declarations.get(U.name) == U:
        return U.name
    if U.is_product:
        return f"{U.left.name} x {U.right.name}"
    return U.name


def _decl_text(spec: ModelSpec, name: str, obj: Declared) -> str:
    if isinstance(obj, Universe):
        if obj.kind == "product":
            return f"product {name} = {obj.left.name} x {obj.right.name}"
        if obj.kind == "bottom":
            return f"bottom {name} = {obj.base.name}"
        return f"universe {name} = {obj.size}"
    if isinstance(obj, Subset):
        return f"subset {name} of {obj.universe.name} = " + _braces([obj.universe.render(m) for m in obj])
    if isinstance(obj, AlignmentOf):
        rel = next((k for k, v in spec.declarations.items() if v == obj.relation), None)
        if rel is None:
            raise ValueError(f"alignment {name!r} refers to an undeclared relation")
        return f"alignpred {name} over {_universe_text(spec, obj.universe)} = align {rel}"
    if isinstance(obj, (DownwardClosureOf, ChainGrammar)):
        word = "downclose" if isinstance(obj, DownwardClosureOf) else "chaingrammar"
        lists = obj.lists if isinstance(obj, DownwardClosureOf) else obj.core
        rendered = [_list_text(obj.universe, u.items) for u in sorted(lists, key=lambda u: u.items)]
        return f"{word} {name} over {obj.universe.name} = " + _braces(rendered)
    if isinstance(obj, ListPredicate):
        # any other representation is written out by extension
        members = [u.items for u in obj.members()]
        return f"listpred {name} over {obj.universe.name} = " + _braces([_list_text(obj.universe, u) for u in members])
    if isinstance(obj, Relation):
        pairs = [f"({a},{b})" for a, b in sorted(obj.pairs)]
        return f"relation {name} over {obj.left.name} x {obj.right.name} = " + _braces(pairs)
    if isinstance(obj, OrderedModel):
        if obj.carrier != Subset.full(obj.universe):
            raise ValueError(f"order {name!r} has a restricted carrier; declare it as a separate subset")
        pairs = [f"({a},{b})" for a, b in sorted(obj.lt)]
        return f"order {name} on {obj.universe.name} = " + _braces(pairs)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize(spec: ModelSpec) -> str:
    """Canonical text: one declaration per line, sorted literals, LF endings."""
    return "".join(_decl_text(spec, name, obj) + "\n" for name, obj in spec.declarations.items())
