"""Exact sequences and truncated formal power series over the rationals.

A :class:`PowerSeries` either is *exact* (``precision is None``: every
coefficient past the stored ones is zero) or carries a finite ``precision``
P, meaning c_0..c_P are known and everything beyond is unknown.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Optional, Union

from .errors import (
    DivisorNotUnit,
    InnerNotNilpotent,
    InsufficientPrecision,
    NotInvertible,
    ParseError,
)

Rational = Union[int, Fraction]

TO_EGF = "to_egf"
TO_OGF = "to_ogf"


def frac(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not sequence terms")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def binom(n: int, k: int) -> int:
    """C(n, k) for integers, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(token: str) -> Fraction:
    m = _RATIONAL_RE.match(token.strip())
    if not m:
        raise ParseError(f"not an exact rational term: {token!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class Sequence:
    """A non-empty finite prefix t_0..t_N of exact rational terms."""

    terms: tuple

    def __post_init__(self):
        terms = tuple(frac(t) for t in self.terms)
        if not terms:
            raise ValueError("a sequence needs at least one term")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, values: Iterable) -> "Sequence":
        if isinstance(values, Sequence):
            return values
        return cls(tuple(values))

    @property
    def N(self) -> int:
        return len(self.terms) - 1

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Sequence(self.terms[idx])
        return self.terms[idx]

    def __str__(self):
        return ", ".join(str(t) for t in self.terms)


def as_sequence(values) -> Sequence:
    return Sequence.of(values)


def parse_terms(text: str) -> Sequence:
    """Parse the plain-text sequence format.

    Terms are separated by whitespace and/or commas; a term is ``p`` or
    ``p/q`` with ``q > 0``.  Lines whose first non-blank character is ``#``
    are comments.
    """
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for token in re.split(r"[\s,]+", line.strip()):
            if not token:
                continue
            try:
                terms.append(parse_rational(token))
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno) from None
    if not terms:
        raise ParseError("no terms found")
    return Sequence(tuple(terms))


def binomial_transform(s, sign: int = 1) -> Sequence:
    """b_n = sum_k C(n,k) sign^(n-k) s_k, for sign in {+1, -1}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    t = as_sequence(s).terms
    out = []
    for n in range(len(t)):
        out.append(sum((comb(n, k) * sign ** (n - k) * t[k] for k in range(n + 1)), Fraction(0)))
    return Sequence(tuple(out))


def ogf_egf_convert(s, direction: str) -> Sequence:
    """``to_egf`` divides term n by n!; ``to_ogf`` multiplies by n!."""
    t = as_sequence(s).terms
    if direction == TO_EGF:
        return Sequence(tuple(v / factorial(n) for n, v in enumerate(t)))
    if direction == TO_OGF:
        return Sequence(tuple(v * factorial(n) for n, v in enumerate(t)))
    raise ValueError(f"direction must be {TO_EGF!r} or {TO_OGF!r}")


def _min_prec(*precs):
    finite = [p for p in precs if p is not None]
    return min(finite) if finite else None


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple = ()
    precision: Optional[int] = None

    def __post_init__(self):
        c = [frac(v) for v in self.coeffs]
        p = self.precision
        if p is None:
            while c and c[-1] == 0:
                c.pop()
        else:
            if p < 0:
                raise ValueError("precision must be >= 0")
            c = c[: p + 1] + [Fraction(0)] * (p + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def exact(cls, coeffs: Iterable) -> "PowerSeries":
        return cls(tuple(coeffs), None)

    @classmethod
    def x(cls) -> "PowerSeries":
        return cls((0, 1))

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        if self.precision is not None and n > self.precision:
            raise InsufficientPrecision(f"coefficient {n} is beyond precision {self.precision}")
        return self.coeffs[n] if n < len(self.coeffs) else Fraction(0)

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero known coefficient, or None if none is known."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, order: Optional[int]) -> "PowerSeries":
        p = _min_prec(self.precision, order)
        if p is None:
            return self
        return PowerSeries(self.coeffs, p)

    def terms(self, count: int) -> list:
        return [self[i] for i in range(count)]

    def __add__(self, other):
        return ps_add(self, _promote(other))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other):
        return ps_add(self, -_promote(other))

    def __rsub__(self, other):
        return ps_add(_promote(other), -self)

    def __mul__(self, other):
        return ps_mul(self, _promote(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ps_div(self, _promote(other))

    def __rtruediv__(self, other):
        return ps_div(_promote(other), self)

    def __pow__(self, k: int):
        if k < 0:
            return ps_div(PowerSeries.exact([1]), self ** (-k))
        out = PowerSeries.exact([1])
        for _ in range(k):
            out = ps_mul(out, self)
        return out

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return ps_compose(self, inner)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        body = " + ".join(parts) if parts else "0"
        if self.precision is not None:
            body += f" + O(x^{self.precision + 1})"
        return body.replace("+ -", "- ")


def _promote(v) -> PowerSeries:
    if isinstance(v, PowerSeries):
        return v
    return PowerSeries.exact([frac(v)])


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    p = _min_prec(a.precision, b.precision)
    n = max(len(a.coeffs), len(b.coeffs)) if p is None else p + 1
    return PowerSeries(tuple(a[i] + b[i] for i in range(n)), p)


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product; precision is the smaller operand precision."""
    p = _min_prec(a.precision, b.precision)
    ac, bc = a.coeffs, b.coeffs
    size = len(ac) + len(bc) - 1 if p is None else p + 1
    if size <= 0:
        return PowerSeries((), p)
    out = [Fraction(0)] * size
    for i, x in enumerate(ac):
        if x == 0 or i >= size:
            continue
        for j, y in enumerate(bc[: size - i]):
            out[i + j] += x * y
    return PowerSeries(tuple(out), p)


def ps_div(a: PowerSeries, b: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """Quotient a/b.  Dividing by a non-constant exact series needs ``order``."""
    b0 = b.coeffs[0] if b.coeffs else Fraction(0)
    if b0 == 0:
        raise DivisorNotUnit("divisor has zero constant term")
    p = _min_prec(a.precision, b.precision, order)
    if p is None:
        if len(b.coeffs) == 1:
            return PowerSeries(tuple(c / b0 for c in a.coeffs))
        raise InsufficientPrecision("division of exact series needs an explicit order")
    q = []
    for n in range(p + 1):
        acc = a[n]
        for k in range(1, min(n, len(b.coeffs) - 1) + 1):
            acc -= b.coeffs[k] * q[n - k]
        q.append(acc / b0)
    return PowerSeries(tuple(q), p)


def ps_compose(outer: PowerSeries, inner: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """outer(inner(x)) for inner(0) = 0.

    With inner valuation v, the result is known through
    min(P_outer * v, P_inner), further capped by ``order``.
    """
    if inner[0] != 0:
        raise InnerNotNilpotent("inner series must have zero constant term")
    v = inner.valuation()
    if v is None:
        if inner.precision is None:
            # inner is exactly zero
            p = _min_prec(0 if outer.precision is not None else None, order)
            const = outer.coeffs[0] if outer.coeffs else 0
            return PowerSeries((const,), p) if p is not None else PowerSeries.exact([const])
        v = inner.precision + 1
    p_outer = None if outer.precision is None else outer.precision * v
    p = _min_prec(p_outer, inner.precision, order)
    inner_t = inner.truncate(p)
    acc = PowerSeries((), p)
    for c in reversed(outer.coeffs):
        acc = ps_mul(acc, inner_t)
        acc = ps_add(acc, PowerSeries((c,), p))
    return acc


def ps_revert(f: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """Compositional inverse of f with f(0) = 0, f'(0) = 1, by Lagrange inversion.

    [x^n] f_bar = (1/n) [x^(n-1)] (x / f(x))^n.
    """
    if f[0] != 0 or (f.precision is not None and f.precision < 1) or f[1] != 1:
        raise NotInvertible("reversion needs f(0) = 0 and f'(0) = 1")
    p = _min_prec(f.precision, order)
    if p is None:
        if len(f.coeffs) == 2:
            return f
        raise InsufficientPrecision("reversion of an exact series needs an explicit order")
    if p == 1:
        return PowerSeries((0, 1), 1)
    shifted = PowerSeries(f.coeffs[1:], p - 1)  # f(x)/x
    h = ps_div(PowerSeries.exact([1]), shifted)  # x/f(x), known through p-1
    out = [Fraction(0)]
    power = PowerSeries.exact([1]).truncate(p - 1)
    for n in range(1, p + 1):
        power = ps_mul(power, h)
        out.append(power[n - 1] / n)
    return PowerSeries(tuple(out), p)


def rational(num: Iterable, den: Iterable, order: int) -> PowerSeries:
    """Series of num(x)/den(x) from coefficient lists, known through ``order``."""
    return ps_div(PowerSeries.exact(num), PowerSeries.exact(den), order=order)


def exp_series(order: int, sign: int = 1) -> PowerSeries:
    """exp(sign * x) through ``order``."""
    return PowerSeries(tuple(Fraction(sign**n, factorial(n)) for n in range(order + 1)), order)
