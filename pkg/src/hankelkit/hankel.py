"""Hankel matrices, exact determinants, the Hankel transform and H = L D L^T."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import InsufficientTerms, SingularMinor
from .series import Sequence, as_sequence


@dataclass(frozen=True)
class HankelMatrix:
    rows: tuple

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def as_lists(self) -> list:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class LDLDecomposition:
    L: tuple  # unit lower triangular, square
    d: tuple

    @property
    def order(self) -> int:
        return len(self.d)

    def reconstruct(self) -> list:
        """L * diag(d) * L^T as a list of rows."""
        n = len(self.d)
        L, d = self.L, self.d
        return [
            [sum((L[i][k] * d[k] * L[j][k] for k in range(min(i, j) + 1)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]


@dataclass(frozen=True)
class RegularityReport:
    checked_through: int  # largest n whose h_n could be computed
    regular_through: int  # largest n with h_0..h_n all nonzero; -1 if h_0 = 0
    first_zero: Optional[int]

    @property
    def regular(self) -> bool:
        return self.first_zero is None


def _require_terms(s: Sequence, n: int):
    if n < 0:
        raise ValueError("order index must be >= 0")
    if len(s) < 2 * n + 1:
        raise InsufficientTerms(f"order {n} needs {2 * n + 1} terms, got {len(s)}")


def hankel_matrix(s, n: int) -> HankelMatrix:
    s = as_sequence(s)
    _require_terms(s, n)
    t = s.terms
    return HankelMatrix(tuple(tuple(t[i + j] for j in range(n + 1)) for i in range(n + 1)))


def bareiss_determinant(matrix) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination with row pivoting.

    Rational input is scaled to integers first (one common denominator per
    row) and the scale is divided back out at the end.
    """
    rows = [[Fraction(v) for v in r] for r in matrix]
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    scale = 1
    m = []
    for r in rows:
        den = lcm(*(v.denominator for v in r))
        scale *= den
        m.append([int(v * den) for v in r])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], scale)


def hankel_determinant(s, n: int) -> Fraction:
    return bareiss_determinant(hankel_matrix(s, n).rows)


def hankel_transform(s) -> list:
    """[h_0, ..., h_N] for N = (len(s) - 1) // 2, each minor computed on its own."""
    s = as_sequence(s)
    return [hankel_determinant(s, n) for n in range((len(s) - 1) // 2 + 1)]


def ldl_decompose(s, n: int) -> LDLDecomposition:
    """Symmetric elimination of the order-n Hankel matrix over the rationals.

    d_k = h_k / h_(k-1) with h_(-1) = 1.  Raises SingularMinor(k) at the
    first vanishing pivot.
    """
    H = hankel_matrix(s, n).rows
    size = n + 1
    L = [[Fraction(0)] * size for _ in range(size)]
    d = []
    for j in range(size):
        dj = H[j][j] - sum((L[j][k] ** 2 * d[k] for k in range(j)), Fraction(0))
        if dj == 0:
            raise SingularMinor(j)
        d.append(dj)
        L[j][j] = Fraction(1)
        for i in range(j + 1, size):
            acc = H[i][j] - sum((L[i][k] * L[j][k] * d[k] for k in range(j)), Fraction(0))
            L[i][j] = acc / dj
    return LDLDecomposition(tuple(tuple(r) for r in L), tuple(d))


def is_regular(s) -> RegularityReport:
    h = hankel_transform(s)
    first_zero = next((k for k, v in enumerate(h) if v == 0), None)
    regular_through = len(h) - 1 if first_zero is None else first_zero - 1
    return RegularityReport(len(h) - 1, regular_through, first_zero)
