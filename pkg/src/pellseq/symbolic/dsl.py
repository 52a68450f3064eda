"""A small identity language over the families T, L, B, C, E.

Grammar (whitespace is insignificant, adjacency means product)::

    identity   := expr ("==" expr)+
    expr       := term (("+" | "-") term)*
    term       := factor (("*" factor) | factor)*
    factor     := "-" factor | atom ("^" nat)? ("/" rational)?
    atom       := rational | familyterm | "(" expr ")"
    familyterm := ("T" | "L" | "B" | "C" | "E") "(" index ")"
    index      := ["-"] [nat] "n" (("+" | "-") nat)? | ["-"] nat
    rational   := nat ("/" nat)?

Unary minus binds looser than ``^`` so ``-T(n)^2`` is ``-(T(n)^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..sequences import family_term
from .expoly import ExpPoly, from_family

FAMILY_NAMES = ("T", "L", "B", "C", "E")


class IdentityParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()) -> None:
        self.message = message
        self.offset = offset
        self.expected = expected
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {' or '.join(expected)})"
        super().__init__(detail)


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class FamilyTerm:
    family: str
    a: int
    b: int


@dataclass(frozen=True)
class Neg:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str  # one of "+", "-", "*"
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow:
    base: Node
    exponent: int


@dataclass(frozen=True)
class Div:
    numerator: Node
    divisor: Fraction


Node = Union[Num, FamilyTerm, Neg, BinOp, Pow, Div]


@dataclass(frozen=True)
class Identity:
    sides: tuple[Node, ...]
    text: str = ""


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z]+)|(?P<op>==|[-+*/^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", "op", "eof"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    data = text.encode("utf-8")
    src = data.decode("latin-1")  # one char per byte keeps offsets in bytes
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            pos = len(src)
            break
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise IdentityParseError(f"unexpected character {src[start]!r}", start)
        kind = m.lastgroup
        assert kind is not None
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("eof", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _is(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def _advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def _fail(self, message: str, *expected: str) -> IdentityParseError:
        got = self.tok.text or "end of input"
        return IdentityParseError(f"{message}, got {got!r}", self.tok.offset, expected)

    def _expect_op(self, text: str) -> None:
        if not self._is(text):
            raise self._fail("syntax error", repr(text))
        self._advance()

    def _nat(self) -> int:
        if self.tok.kind != "num":
            raise self._fail("syntax error", "integer")
        return int(self._advance().text)

    def identity(self) -> tuple[Node, ...]:
        sides = [self.expr()]
        while self._is("=="):
            self._advance()
            sides.append(self.expr())
        if len(sides) < 2:
            raise self._fail("syntax error", "'=='")
        if self.tok.kind != "eof":
            raise self._fail("syntax error", "'=='", "end of input")
        return tuple(sides)

    def expr(self) -> Node:
        node = self.term()
        while self._is("+") or self._is("-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def _starts_atom(self) -> bool:
        return self.tok.kind in ("num", "name") or self._is("(")

    def term(self) -> Node:
        node = self.factor()
        while True:
            if self._is("*"):
                self._advance()
            elif not self._starts_atom():
                return node
            node = BinOp("*", node, self.factor())

    def factor(self) -> Node:
        if self._is("-"):
            self._advance()
            return Neg(self.factor())
        node = self.atom()
        if self._is("^"):
            self._advance()
            node = Pow(node, self._nat())
        if self._is("/"):
            self._advance()
            offset = self.tok.offset
            divisor = self.rational()
            if divisor == 0:
                raise IdentityParseError("division by zero", offset)
            node = Div(node, divisor)
        return node

    def rational(self) -> Fraction:
        if self.tok.kind != "num":
            raise self._fail("division is only allowed by a rational literal", "integer")
        num = int(self._advance().text)
        if self._is("/") and self.tokens[self.i + 1].kind == "num":
            self._advance()
            den_offset = self.tok.offset
            den = self._nat()
            if den == 0:
                raise IdentityParseError("zero denominator", den_offset)
            return Fraction(num, den)
        return Fraction(num)

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "num":
            return Num(self.rational())
        if tok.kind == "name":
            if tok.text not in FAMILY_NAMES:
                raise IdentityParseError(f"unknown family {tok.text!r}", tok.offset,
                                         FAMILY_NAMES)
            self._advance()
            self._expect_op("(")
            a, b = self.index()
            self._expect_op(")")
            return FamilyTerm(tok.text, a, b)
        if self._is("("):
            self._advance()
            node = self.expr()
            self._expect_op(")")
            return node
        raise self._fail("syntax error", "number", "family term", "'('")

    def index(self) -> tuple[int, int]:
        sign = 1
        if self._is("-"):
            self._advance()
            sign = -1
        coeff = None
        if self.tok.kind == "num":
            coeff = int(self._advance().text)
            if self._is("/"):
                raise self._fail("index coefficients must be integers", "'n'", "')'")
        if self.tok.kind == "name" and self.tok.text == "n":
            self._advance()
            a = sign * (1 if coeff is None else coeff)
            b = 0
            if self._is("+") or self._is("-"):
                op = self._advance().text
                b = self._nat() * (1 if op == "+" else -1)
            return a, b
        if coeff is None:
            raise self._fail("syntax error", "index such as 2n+1")
        return 0, sign * coeff


def parse_identity(text: str) -> Identity:
    """Parse ``lhs == rhs [== ...]``; raises :class:`IdentityParseError`."""
    return Identity(_Parser(text).identity(), text)


def parse_expr(text: str) -> Node:
    parser = _Parser(text)
    node = parser.expr()
    if parser.tok.kind != "eof":
        raise parser._fail("syntax error", "end of input")
    return node


def compile_expr(node: Node) -> ExpPoly:
    """Translate an expression tree into its canonical exponential polynomial."""
    if isinstance(node, Num):
        return ExpPoly.constant(node.value)
    if isinstance(node, FamilyTerm):
        return from_family(node.family, node.a, node.b)
    if isinstance(node, Neg):
        return -compile_expr(node.operand)
    if isinstance(node, BinOp):
        left, right = compile_expr(node.left), compile_expr(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, Pow):
        return compile_expr(node.base) ** node.exponent
    if isinstance(node, Div):
        return compile_expr(node.numerator).scale(1 / node.divisor)
    raise TypeError(f"unknown node {node!r}")


def evaluate(node: Node, n: int) -> Fraction:
    """Evaluate an expression at ``n`` from the integer recurrences directly."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, FamilyTerm):
        return Fraction(family_term(node.family, node.a * n + node.b))
    if isinstance(node, Neg):
        return -evaluate(node.operand, n)
    if isinstance(node, BinOp):
        left, right = evaluate(node.left, n), evaluate(node.right, n)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, Pow):
        return evaluate(node.base, n) ** node.exponent
    if isinstance(node, Div):
        return evaluate(node.numerator, n) / node.divisor
    raise TypeError(f"unknown node {node!r}")
