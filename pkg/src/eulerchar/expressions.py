"""A small arithmetic language for series, e.g. "1/(1+x)" or "(1-x)^2".

Precedence, tightest first: integer power, unary minus, * and /, + and -.
Binary operators of equal precedence associate left.  Powers take a
nonnegative integer literal exponent.  Parsing is by recursive descent,
which keeps error positions exact without any parser dependency.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .fps import Series


class ExprSyntaxError(ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Expr = Union[Lit, Var, Neg, BinOp, Pow, Group]

_TOKEN = re.compile(r"\d+|[A-Za-z_]\w*|[()+\-*/^]")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
            self.tokens.append((m.group(), pos))
            pos = m.end()
        self.index = 0

    def peek(self) -> str | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def position(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    def advance(self) -> str:
        tok = self.tokens[self.index][0]
        self.index += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            raise ExprSyntaxError(f"expected {tok!r}", self.position())
        self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.index < len(self.tokens):
            raise ExprSyntaxError(
                f"unexpected trailing input {self.peek()!r}", self.position()
            )
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.peek() in ("+", "-"):
            op = self.advance()
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.peek() in ("*", "/"):
            op = self.advance()
            left = BinOp(op, left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.peek() == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        while self.peek() == "^":
            self.advance()
            tok = self.peek()
            if tok is None or not tok.isdigit():
                raise ExprSyntaxError(
                    "exponent must be a nonnegative integer literal",
                    self.position(),
                )
            self.advance()
            base = Pow(base, int(tok))
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        pos = self.position()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", pos)
        if tok.isdigit():
            self.advance()
            return Lit(Fraction(int(tok)))
        if tok == "x":
            self.advance()
            return Var()
        if tok == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        if tok.isidentifier():
            raise ExprSyntaxError(f"unknown identifier {tok!r}", pos)
        raise ExprSyntaxError(f"unexpected token {tok!r}", pos)


def parse(text: str) -> Expr:
    """Parse expression text to a syntax tree."""
    return _Parser(text).parse()


def evaluate(expr: Expr, precision: int) -> Series:
    """Evaluate a syntax tree to an exact series at the given precision.

    Division by a series with zero constant term surfaces as the usual
    non-invertibility error from the series layer.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if isinstance(expr, Lit):
        return Series.constant(expr.value, precision)
    if isinstance(expr, Var):
        return Series.x(precision)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, precision)
    if isinstance(expr, Group):
        return evaluate(expr.inner, precision)
    if isinstance(expr, Pow):
        return evaluate(expr.base, precision) ** expr.exponent
    if isinstance(expr, BinOp):
        left = evaluate(expr.left, precision)
        right = evaluate(expr.right, precision)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "/":
            return left / right
    raise TypeError(f"not an expression node: {expr!r}")


def eval_text(text: str, precision: int) -> Series:
    """Parse and evaluate in one step."""
    return evaluate(parse(text), precision)


def series_to_text(s: Series) -> str:
    """Render a series as polynomial text that parses back to the same
    coefficients (at the same precision)."""
    parts: list[str] = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
