"""Recursive-descent parsers for set expressions and measure expressions.

Set expressions::

    union   := inter ('|' inter)*
    inter   := unary ('&' unary)*
    unary   := '~' unary | primary
    primary := 'empty' | 'all' | ATOM | '(' union ')'

Measure expressions::

    expr := NAME | 'zero' | 'infinity'
          | ('meet' | 'join') '(' expr (',' expr)* ')'
          | ('meet_jordan' | 'join_jordan' | 'add') '(' expr ',' expr ')'
          | 'scale' '(' RATIONAL ',' expr ')'

Errors carry a 1-based line and column into the source text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import MeasureLatticeError, UndefinedDifference
from .lattice import (
    join2,
    join_family,
    join_via_jordan,
    meet2,
    meet_family,
    meet_via_jordan,
)
from .measurable_space import MeasurableSet, MeasurableSpace
from .measures import Measure, add_measures, infinity_measure, scale, zero_measure

__all__ = [
    "ExpressionError",
    "ParseError",
    "SemanticError",
    "parse_set",
    "eval_set",
    "parse_measure",
    "eval_measure_expr",
]


class ExpressionError(MeasureLatticeError):
    def __init__(self, message: str, line: int = 1, column: int = 1, source: str = ""):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def __str__(self):
        where = f"{self.source}:" if self.source else ""
        return f"{where}{self.line}:{self.column}: {self.message}"


class ParseError(ExpressionError):
    """Malformed input (exit code 2 at the command line)."""


class SemanticError(ExpressionError):
    """Well-formed input that refers to unknown names or mismatched spaces (exit code 3)."""


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[()&|~,]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "eof"
    text: str
    pos: int  # 0-based offset into the source


def _position(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text: str, source: str = "") -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", *_position(text, pos), source)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source
        self.tokens = tokenize(text, source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, *_position(self.text, tok.pos), self.source)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def finish(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r} after end of expression")


# -- set expressions -------------------------------------------------------

@dataclass(frozen=True)
class SetNode:
    op: str  # "empty", "all", "atom", "~", "&", "|"
    args: tuple = ()
    name: str = ""
    pos: int = 0


class _SetParser(_Parser):
    def parse(self) -> SetNode:
        node = self.union()
        self.finish()
        return node

    def union(self) -> SetNode:
        node = self.inter()
        while self.tok.text == "|":
            t = self.advance()
            node = SetNode("|", (node, self.inter()), pos=t.pos)
        return node

    def inter(self) -> SetNode:
        node = self.unary()
        while self.tok.text == "&":
            t = self.advance()
            node = SetNode("&", (node, self.unary()), pos=t.pos)
        return node

    def unary(self) -> SetNode:
        if self.tok.text == "~":
            t = self.advance()
            return SetNode("~", (self.unary(),), pos=t.pos)
        return self.primary()

    def primary(self) -> SetNode:
        t = self.tok
        if t.text == "(" and t.kind == "op":
            self.advance()
            node = self.union()
            self.expect(")")
            return node
        if t.kind == "name":
            self.advance()
            if t.text in ("empty", "all"):
                return SetNode(t.text, pos=t.pos)
            return SetNode("atom", name=t.text, pos=t.pos)
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise self.error(f"expected a set (atom name, 'empty', 'all', '~' or '('), found {found}")


def parse_set(text: str, source: str = "") -> SetNode:
    return _SetParser(text, source).parse()


def eval_set(text: str, space: MeasurableSpace, source: str = "") -> MeasurableSet:
    """Parse *text* and evaluate it as a measurable set of *space*."""
    node = parse_set(text, source)

    def ev(n: SetNode) -> MeasurableSet:
        if n.op == "empty":
            return space.empty()
        if n.op == "all":
            return space.whole()
        if n.op == "atom":
            if n.name not in space.atom_names:
                raise SemanticError(f"unknown atom {n.name!r}", *_position(text, n.pos), source)
            return space.atom(n.name)
        if n.op == "~":
            return ~ev(n.args[0])
        left, right = ev(n.args[0]), ev(n.args[1])
        return left & right if n.op == "&" else left | right

    return ev(node)


# -- measure expressions ---------------------------------------------------

@dataclass(frozen=True)
class MeasureNode:
    op: str  # "name", "zero", "infinity", or a function name
    args: tuple = ()
    name: str = ""
    scalar: Fraction | None = None
    pos: int = 0


_VARIADIC = {"meet", "join"}
_BINARY = {"meet_jordan", "join_jordan", "add"}
_FUNCTIONS = _VARIADIC | _BINARY | {"scale"}


class _MeasureParser(_Parser):
    def parse(self) -> MeasureNode:
        node = self.expr()
        self.finish()
        return node

    def expr(self) -> MeasureNode:
        t = self.tok
        if t.kind != "name":
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise self.error(f"expected a measure expression, found {found}")
        self.advance()
        if self.tok.text == "(" and self.tok.kind == "op":
            if t.text not in _FUNCTIONS:
                raise self.error(f"unknown function {t.text!r}", t)
            return self.call(t)
        if t.text in _FUNCTIONS:
            raise self.error(f"{t.text!r} needs an argument list", self.tok)
        if t.text in ("zero", "infinity"):
            return MeasureNode(t.text, pos=t.pos)
        return MeasureNode("name", name=t.text, pos=t.pos)

    def call(self, fn: Token) -> MeasureNode:
        self.expect("(")
        scalar = None
        if fn.text == "scale":
            q = self.tok
            if q.kind != "num":
                raise self.error("scale expects a nonnegative rational as its first argument")
            self.advance()
            num, _, den = q.text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", q)
            scalar = Fraction(int(num), int(den or 1))
            self.expect(",")
            args = [self.expr()]
        else:
            args = [self.expr()]
            while self.tok.text == ",":
                self.advance()
                args.append(self.expr())
        self.expect(")")
        if fn.text in _BINARY and len(args) != 2:
            raise self.error(f"{fn.text} takes exactly 2 arguments, got {len(args)}", fn)
        return MeasureNode(fn.text, tuple(args), scalar=scalar, pos=fn.pos)


def parse_measure(text: str, source: str = "") -> MeasureNode:
    return _MeasureParser(text, source).parse()


def eval_measure_expr(
    text: str,
    space: MeasurableSpace,
    measures: Mapping[str, Measure],
    signed: Mapping[str, object] = (),
    source: str = "",
) -> Measure:
    """Parse *text* and evaluate it against named measures on *space*."""
    node = parse_measure(text, source)

    def fail(message: str, n: MeasureNode):
        return SemanticError(message, *_position(text, n.pos), source)

    def ev(n: MeasureNode) -> Measure:
        if n.op == "zero":
            return zero_measure(space)
        if n.op == "infinity":
            return infinity_measure(space)
        if n.op == "name":
            if n.name in measures:
                return measures[n.name]
            if n.name in signed:
                raise fail(f"{n.name!r} is a signed measure; only measures can be combined", n)
            raise fail(f"unknown measure {n.name!r}", n)
        args = [ev(a) for a in n.args]
        if n.op == "scale":
            return scale(n.scalar, args[0])
        if n.op == "add":
            return add_measures(*args)
        if n.op in ("meet_jordan", "join_jordan"):
            fn: Callable = meet_via_jordan if n.op == "meet_jordan" else join_via_jordan
            try:
                return fn(*args)
            except UndefinedDifference as exc:
                raise fail(f"{n.op} is undefined here: {exc}", n) from None
        if len(args) == 1:
            return args[0]
        if len(args) == 2:
            return meet2(*args) if n.op == "meet" else join2(*args)
        return meet_family(args) if n.op == "meet" else join_family(args)

    return ev(node)
