"""Monic orthogonal polynomials attached to a moment sequence.

Coefficient arrays are produced three ways (three-term recurrence, moment
determinants, inverse of the LDL^T factor) so that each can check the
others.  The moment functional L(x^n) = mu_n drives the squared-norm
formula and the Hankel product built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientDepth, InsufficientTerms, SingularMinor
from .hankel import bareiss_determinant, ldl_decompose
from .jfraction import JFraction, extract_jfraction
from .series import as_sequence, frac


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()  # c_0..c_m; the zero polynomial is ()

    def __post_init__(self):
        c = [frac(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def scale(self, c) -> "Polynomial":
        c = frac(c)
        return Polynomial(tuple(c * v for v in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class CoefficientArray:
    """Row n holds a_{n,0}..a_{n,n}, the coefficients of P_n(x)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(frac(v) for v in r) for r in self.rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries")
            if r[n] != 1:
                raise ValueError(f"row {n} is not monic")
        object.__setattr__(self, "rows", rows)

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def poly(self, n: int) -> Polynomial:
        return Polynomial(self.rows[n])

    def as_matrix(self) -> list:
        size = len(self.rows)
        return [list(r) + [Fraction(0)] * (size - len(r)) for r in self.rows]

    def inverse(self) -> list:
        return invert_unit_lower(self.as_matrix())


def invert_unit_lower(M) -> list:
    """Inverse of a unit lower-triangular matrix by forward substitution."""
    n = len(M)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1)
        for i in range(j + 1, n):
            inv[i][j] = -sum((M[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
    return inv


def polys_from_recurrence(j: JFraction, N: int) -> CoefficientArray:
    """P_(n+1) = (x - alpha_n) P_n - lambda_n P_(n-1), with P_(-1) = 0, P_0 = 1."""
    if len(j.alpha) < N or len(j.lambdas) < max(N - 1, 0):
        raise InsufficientDepth(f"rows 0..{N} need {N} alphas and {max(N - 1, 0)} lambdas")
    rows = [(Fraction(1),)]
    prev: tuple = ()
    for n in range(N):
        cur = rows[-1]
        nxt = [Fraction(0)] * (n + 2)
        for k, c in enumerate(cur):
            nxt[k + 1] += c
            nxt[k] -= j.alpha[n] * c
        if n > 0:
            lam = j.lam(n)
            for k, c in enumerate(prev):
                nxt[k] -= lam * c
        prev = cur
        rows.append(tuple(nxt))
    return CoefficientArray(tuple(rows))


def polys_from_determinants(s, N: int) -> CoefficientArray:
    """P_n(x) = D_n(x) / D_(n-1), expanding D_n(x) along its row (1, x, ..., x^n).

    D_n(x) stacks the moment rows (mu_i, ..., mu_(i+n)) for i < n above the
    power row; D_(n-1) = h_(n-1) and D_(-1) = 1.
    """
    s = as_sequence(s)
    if N > 0 and len(s) < 2 * N:
        raise InsufficientTerms(f"rows 0..{N} need {2 * N} terms, got {len(s)}")
    mu = s.terms
    rows = [(Fraction(1),)]
    for n in range(1, N + 1):
        moment_rows = [[mu[i + c] for c in range(n + 1)] for i in range(n)]
        denom = bareiss_determinant([r[:n] for r in moment_rows])
        if denom == 0:
            raise SingularMinor(n - 1)
        row = []
        for col in range(n + 1):
            minor = bareiss_determinant([r[:col] + r[col + 1:] for r in moment_rows])
            row.append((-1) ** (n + col) * minor / denom)
        rows.append(tuple(row))
    return CoefficientArray(tuple(rows))


def polys_from_ldl(s, N: int) -> CoefficientArray:
    """Rows of L^(-1) where H = L D L^T; needs 2N+1 terms and h_0..h_N nonzero."""
    L = ldl_decompose(s, N).L
    inv = invert_unit_lower(L)
    return CoefficientArray(tuple(tuple(inv[n][: n + 1]) for n in range(N + 1)))


def apply_functional(s, p) -> Fraction:
    """L(sum c_j x^j) = sum c_j mu_j."""
    s = as_sequence(s)
    coeffs = p.coeffs if isinstance(p, Polynomial) else Polynomial(tuple(p)).coeffs
    if len(coeffs) > len(s):
        raise InsufficientTerms(f"degree {len(coeffs) - 1} polynomial needs {len(coeffs)} moments")
    return sum((c * m for c, m in zip(coeffs, s.terms)), Fraction(0))


def functional_P_squared(s, A: CoefficientArray, k: int) -> Fraction:
    """L(P_k^2) = sum_{i=0}^{2k} (sum_{j=0}^{i} a_{k,j} a_{k,i-j}) mu_i."""
    s = as_sequence(s)
    if len(s) < 2 * k + 1:
        raise InsufficientTerms(f"L(P_{k}^2) needs {2 * k + 1} moments, got {len(s)}")
    a = A.row(k)
    conv = [Fraction(0)] * (2 * k + 1)
    for i in range(2 * k + 1):
        for j in range(max(0, i - k), min(i, k) + 1):
            conv[i] += a[j] * a[i - j]
    return sum((c * s[i] for i, c in enumerate(conv)), Fraction(0))


def hankel_via_coefficients(s, A: CoefficientArray, N: int) -> list:
    """h_n = prod_{k=0}^{n} L(P_k^2) for n = 0..N."""
    s = as_sequence(s)
    if len(s) < 2 * N + 1:
        raise InsufficientTerms(f"h_0..h_{N} need {2 * N + 1} terms, got {len(s)}")
    out = []
    h = Fraction(1)
    for k in range(N + 1):
        h *= functional_P_squared(s, A, k)
        out.append(h)
    return out


def orthogonality_check(s, A: CoefficientArray, m: int, n: int) -> Fraction:
    """L(P_m P_n) by explicit polynomial product."""
    s = as_sequence(s)
    if m + n >= len(s):
        raise InsufficientTerms(f"L(P_{m} P_{n}) needs {m + n + 1} moments, got {len(s)}")
    return apply_functional(s, A.poly(m) * A.poly(n))


def coefficient_rows(A: CoefficientArray) -> list:
    return [list(r) for r in A.rows]


def first_column_of_inverse(A: CoefficientArray) -> list:
    return [r[0] for r in A.inverse()]


def route_arrays(s, N: int) -> dict:
    """The coefficient array by every route, keyed 'rec', 'det', 'ldl'."""
    s = as_sequence(s)
    return {
        "rec": polys_from_recurrence(extract_jfraction(s[: 2 * N + 1]), N),
        "det": polys_from_determinants(s, N),
        "ldl": polys_from_ldl(s, N),
    }
