"""Ordinary and exponential Riordan arrays (g, f) / [g, f].

Arrays are stored as their generating series.  Matrices are only built
when asked for, to a requested number of rows.  The exponential kind shares
the ordinary group law on series and applies the n!/k! scaling at
materialization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Optional

from .errors import InsufficientPrecision, KindMismatch, NotInvertible, ParseError, UsageError
from .series import (
    PowerSeries,
    _min_prec,
    exp_series,
    ps_compose,
    ps_div,
    ps_mul,
    ps_revert,
    rational,
)


class Kind(str, Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True, eq=False)
class RiordanArray:
    g: PowerSeries
    f: PowerSeries
    kind: Kind = Kind.ORDINARY

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.g[0] != 1:
            raise NotInvertible("g(0) must be 1")
        if self.f[0] != 0 or (self.f.precision is not None and self.f.precision < 1) or self.f[1] != 1:
            raise NotInvertible("f must satisfy f(0) = 0 and f'(0) = 1")

    @property
    def precision(self) -> Optional[int]:
        return _min_prec(self.g.precision, self.f.precision)

    def entries(self, N: int) -> list:
        return riordan_entries(self, N)

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        return riordan_multiply(self, other)

    def __eq__(self, other):
        # Coefficient agreement of g and f through P is the same as entrywise
        # agreement of the materialized (P+1)-row matrices.
        if not isinstance(other, RiordanArray):
            return NotImplemented
        if self.kind != other.kind:
            return False
        p = _min_prec(self.precision, other.precision)
        if p is None:
            return self.g == other.g and self.f == other.f
        return all(self.g[i] == other.g[i] and self.f[i] == other.f[i] for i in range(p + 1))

    __hash__ = None


def riordan_entries(r: RiordanArray, N: int) -> list:
    """Rows 0..N.  Ordinary: [x^n] g f^k.  Exponential: n!/k! [x^n] g f^k."""
    p = r.precision
    if p is not None and p < N:
        raise InsufficientPrecision(f"series known through x^{p}, {N + 1} rows requested")
    M = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    column = r.g.truncate(N)
    f = r.f.truncate(N)
    for k in range(N + 1):
        for n in range(k, N + 1):
            c = column[n]
            if r.kind is Kind.EXPONENTIAL:
                c = c * factorial(n) / factorial(k)
            M[n][k] = c
        column = ps_mul(column, f)
    return M


def riordan_multiply(a: RiordanArray, b: RiordanArray) -> RiordanArray:
    """(g, f) * (h, l) = (g * (h o f), l o f)."""
    if a.kind != b.kind:
        raise KindMismatch(f"cannot multiply {a.kind.value} by {b.kind.value} arrays")
    return RiordanArray(ps_mul(a.g, ps_compose(b.g, a.f)), ps_compose(b.f, a.f), a.kind)


def riordan_inverse(r: RiordanArray, order: Optional[int] = None) -> RiordanArray:
    """(g, f)^(-1) = (1 / (g o fbar), fbar).  Exact inputs need ``order``."""
    p = _min_prec(r.precision, order)
    if p is None:
        if len(r.f.coeffs) == 2 and len(r.g.coeffs) == 1:
            return r
        raise InsufficientPrecision("inverting exact series needs an explicit order")
    fbar = ps_revert(r.f, order=p)
    g_inv = ps_div(PowerSeries.exact([1]), ps_compose(r.g, fbar), order=p)
    return RiordanArray(g_inv, fbar, r.kind)


def identity(kind=Kind.ORDINARY) -> RiordanArray:
    return RiordanArray(PowerSeries.exact([1]), PowerSeries.x(), kind)


# stock series from the worked examples


def one_over_one_minus_x(order):
    return rational([1], [1, -1], order)


def one_over_one_plus_x(order):
    return rational([1], [1, 1], order)


def x_over_one_minus_x(order):
    return rational([0, 1], [1, -1], order)


def x_over_one_plus_x(order):
    return rational([0, 1], [1, 1], order)


def x_over_one_plus_x_squared(order):
    return rational([0, 1], [1, 2, 1], order)


def one_minus_x_over_one_plus_x(order):
    return rational([1, -1], [1, 1], order)


def one_over_one_plus_2x(order):
    return rational([1], [1, 2], order)


def x_over_one_plus_3x_plus_2x2(order):
    return rational([0, 1], [1, 3, 2], order)


def exponential(order):
    return exp_series(order)


def exponential_reciprocal(order):
    return exp_series(order, sign=-1)


def pascal(order, kind=Kind.ORDINARY) -> RiordanArray:
    """The binomial matrix, (1/(1-x), x/(1-x)) or [e^x, x]."""
    if Kind(kind) is Kind.EXPONENTIAL:
        return RiordanArray(exponential(order), PowerSeries.x(), Kind.EXPONENTIAL)
    return RiordanArray(one_over_one_minus_x(order), x_over_one_minus_x(order))


# series expressions:
#   expr   := term (('+' | '-') term)*
#   term   := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
#   unary  := ('+' | '-') unary | power
#   power  := atom ('^' ['-'] INT)?
#   atom   := INT | 'x' | 'E' | '(' expr ')'
# E is exp(x); a negative exponent means the reciprocal.

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None and not m.group(2).isspace():
            ch = m.group(2)
            if ch not in "+-*/^()xE":
                raise ParseError(f"unexpected character {ch!r} in series expression {text!r}")
            tokens.append(("op", ch))
    return tokens


class _SeriesParser:
    def __init__(self, text, order):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.order = order

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'a token'} in series expression {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> PowerSeries:
        if not self.tokens:
            raise ParseError("empty series expression")
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input in series expression {self.text!r}")
        return out.truncate(self.order)

    def expr(self):
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _starts_atom(self):
        kind, val = self.peek()
        return kind == "int" or val in ("x", "E", "(")

    def term(self):
        acc = self.unary()
        while True:
            val = self.peek()[1]
            if val == "*":
                self.take()
                acc = acc * self.unary()
            elif val == "/":
                self.take()
                acc = self.divide(acc, self.unary())
            elif self._starts_atom():
                acc = acc * self.power()
            else:
                return acc

    def divide(self, a, b):
        try:
            return ps_div(a, b, order=self.order)
        except UsageError as exc:
            raise ParseError(f"{exc} in series expression {self.text!r}") from None

    def unary(self):
        val = self.peek()[1]
        if val in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            negative = False
            if self.peek()[1] == "-":
                self.take()
                negative = True
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = base**val
            if negative:
                base = self.divide(PowerSeries.exact([1]), base)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return PowerSeries.exact([val])
        if val == "x":
            return PowerSeries.x()
        if val == "E":
            return exponential(self.order)
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {val!r} in series expression {self.text!r}")


def parse_series(text: str, order: int) -> PowerSeries:
    """Parse a series expression such as ``(1-x)/(1+x)``, ``x/(1+x)^2`` or ``E/(1+x)``."""
    return _SeriesParser(text, order).parse()
