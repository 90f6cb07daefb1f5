"""Text front end for algebra elements.

Grammar (whitespace is ignored)::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" sint)?
    atom   := generator | constant | rational | "(" expr ")"
    generator := "X0" | "Xp" | "Xm" | "C" | "C2p"
    constant  := "q" | "lambda"
    sint      := ["-"] digits
    rational  := digits ["/" digits]

Products keep the order of generator-bearing factors; scalar factors commute.
Negative exponents are only allowed on scalar subexpressions (``q^-1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import GENERATORS, AlgebraElement, format_element, multiply
from .cyclotomic import CycNumber, RootOrder


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownSymbolError(ParseError):
    pass


class NegativeExponentError(ParseError):
    pass


CONSTANTS = ("q", "lambda")


# AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Rational:
    value: Fraction


@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class Constant:
    name: str


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Node"], ...]  # (sign, term)


Node = Union[Rational, Generator, Constant, Power, Product, Sum]


def has_generator(node: Node) -> bool:
    if isinstance(node, Generator):
        return True
    if isinstance(node, Power):
        return has_generator(node.base)
    if isinstance(node, Product):
        return any(has_generator(f) for f in node.factors)
    if isinstance(node, Sum):
        return any(has_generator(t) for _, t in node.terms)
    return False


# lexer ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "name", "op", "end"
    text: str
    line: int
    col: int


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        start = m.start(kind)
        line, col = _position(text, start)
        toks.append(_Tok(kind, m.group(kind), line, col))
        pos = m.end()
    line, col = _position(text, len(text))
    toks.append(_Tok("end", "", line, col))
    return toks


# parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        t = self.peek()
        if t.kind == "op" and t.text == op:
            self.i += 1
            return True
        return False

    def error(self, msg: str, tok: _Tok | None = None, cls=ParseError):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return cls(f"{msg}, found {found}", tok.line, tok.col)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != "end":
            raise self.error("expected an operator or end of input")
        return node

    def expr(self) -> Node:
        terms = []
        sign = -1 if self.accept("-") else 1
        terms.append((sign, self.term()))
        while True:
            if self.accept("+"):
                terms.append((1, self.term()))
            elif self.accept("-"):
                terms.append((-1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        start = self.peek()
        base = self.atom()
        if self.accept("^"):
            neg = self.accept("-")
            tok = self.next()
            if tok.kind != "num":
                raise self.error("expected an integer exponent", tok)
            k = -int(tok.text) if neg else int(tok.text)
            if k < 0 and has_generator(base):
                raise NegativeExponentError(
                    "negative exponent on a generator expression", start.line, start.col
                )
            return Power(base, k)
        return base

    def atom(self) -> Node:
        tok = self.next()
        if tok.kind == "num":
            value = Fraction(int(tok.text))
            if self.accept("/"):
                den = self.next()
                if den.kind != "num":
                    raise self.error("expected a denominator", den)
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.line, den.col)
                value /= int(den.text)
            return Rational(value)
        if tok.kind == "name":
            if tok.text in GENERATORS:
                return Generator(tok.text)
            if tok.text in CONSTANTS:
                return Constant(tok.text)
            raise UnknownSymbolError(f"unknown symbol {tok.text!r}", tok.line, tok.col)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return node
        raise self.error("expected a generator, constant, number or '('", tok)


def parse(text: str, order: RootOrder | None = None) -> Node:
    """Parse ``text`` into an AST.  ``order`` is accepted for symmetry; unused."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    return _Parser(text).parse()


# evaluation -------------------------------------------------------------


def _scalar(node: Node, order: RootOrder) -> CycNumber:
    if isinstance(node, Rational):
        return order.scalar(node.value)
    if isinstance(node, Constant):
        return order.q if node.name == "q" else order.lam
    if isinstance(node, Power):
        base = _scalar(node.base, order)
        if node.exponent < 0 and base.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return base ** node.exponent
    if isinstance(node, Product):
        acc = order.one()
        for f in node.factors:
            acc = acc * _scalar(f, order)
        return acc
    if isinstance(node, Sum):
        acc = order.zero()
        for sign, t in node.terms:
            v = _scalar(t, order)
            acc = acc + v if sign > 0 else acc - v
        return acc
    raise TypeError(f"not a scalar node: {node!r}")


def evaluate(node: Node, order: RootOrder) -> AlgebraElement:
    """Expand an AST into the basis of B."""
    if not has_generator(node):
        return AlgebraElement.scalar(_scalar(node, order), order)
    if isinstance(node, Generator):
        return AlgebraElement.generator(node.name, order)
    if isinstance(node, Power):
        return evaluate(node.base, order) ** node.exponent
    if isinstance(node, Product):
        scalar = order.one()
        acc = AlgebraElement.scalar(1, order)
        for f in node.factors:
            if has_generator(f):
                acc = multiply(acc, evaluate(f, order), order)
            else:
                scalar = scalar * _scalar(f, order)
        return acc.scale(scalar)
    if isinstance(node, Sum):
        acc = AlgebraElement.zero(order)
        for sign, t in node.terms:
            v = evaluate(t, order)
            acc = acc + v if sign > 0 else acc - v
        return acc
    raise TypeError(f"unexpected node {node!r}")


def parse_element(text: str, order: RootOrder) -> AlgebraElement:
    return evaluate(parse(text, order), order)


def print_canonical(e: AlgebraElement) -> str:
    """Deterministic text form; :func:`parse_element` maps it back to ``e``."""
    return format_element(e)
