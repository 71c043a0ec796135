"""The five worked sequences: generators, closed forms, and identity checks.

Identity verifiers evaluate each displayed multiple sum term by term.
They never go through the orthogonal-polynomial machinery, so they act as
an independent check on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .errors import IndexOutOfRange, UnknownName
from .jfraction import JFraction
from .riordan import (
    Kind,
    RiordanArray,
    one_minus_x_over_one_plus_x,
    one_over_one_plus_2x,
    one_over_one_plus_x,
    pascal,
    riordan_multiply,
    x_over_one_plus_3x_plus_2x2,
    x_over_one_plus_x,
    x_over_one_plus_x_squared,
)
from .series import Sequence, binom


@dataclass(frozen=True)
class NamedSequence:
    name: str
    oeis_id: str
    example: int
    title: str


CATALOG = {
    "catalan": NamedSequence("catalan", "A000108", 1, "Catalan numbers"),
    "central_binomial": NamedSequence("central_binomial", "A000984", 2, "central binomial coefficients"),
    "schroeder": NamedSequence("schroeder", "A006318", 3, "large Schroeder numbers"),
    "factorial": NamedSequence("factorial", "A000142", 4, "factorial numbers"),
    "derangement": NamedSequence("derangement", "A000166", 5, "derangement numbers"),
}

BY_EXAMPLE = {entry.example: name for name, entry in CATALOG.items()}


def zero_pow(n: int) -> int:
    """0^n with 0^0 = 1."""
    return 1 if n == 0 else 0


def _lookup(name: str) -> NamedSequence:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown sequence {name!r}; choose from {', '.join(CATALOG)}") from None


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def schroeder_number(n: int) -> int:
    return sum(comb(n + k, 2 * k) * catalan_number(k) for k in range(n + 1))


def generate(name: str, N: int) -> Sequence:
    """Terms 0..N of a named sequence."""
    _lookup(name)
    if N < 0:
        raise ValueError("N must be >= 0")
    if name == "catalan":
        terms = [1]
        for n in range(N):
            terms.append(terms[-1] * 2 * (2 * n + 1) // (n + 2))
    elif name == "central_binomial":
        terms = [comb(2 * n, n) for n in range(N + 1)]
    elif name == "schroeder":
        terms = [schroeder_number(n) for n in range(N + 1)]
    elif name == "factorial":
        terms = [factorial(n) for n in range(N + 1)]
    else:
        # d_n = n d_(n-1) + (-1)^n
        terms = [1]
        for n in range(1, N + 1):
            terms.append(n * terms[-1] + (-1) ** n)
    return Sequence(tuple(terms))


def closed_hankel(name: str, n: int) -> Fraction:
    _lookup(name)
    if name == "catalan":
        return Fraction(1)
    if name == "central_binomial":
        return Fraction(2**n)
    if name == "schroeder":
        return Fraction(2 ** comb(n + 1, 2))
    out = 1
    for i in range(n + 1):
        out *= factorial(i) ** 2
    return Fraction(out)


def closed_coeff(name: str, n: int, k: int) -> Fraction:
    """Closed-form entry a_{n,k} of the orthogonal-polynomial coefficient array."""
    _lookup(name)
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    sign = (-1) ** (n - k)
    if name == "catalan":
        return Fraction(sign * comb(n + k, 2 * k))
    if name == "central_binomial":
        z = zero_pow(n + k)
        return Fraction(comb(n + k, 2 * k) * (2 * n + z), n + k + z) * sign
    if name == "schroeder":
        return Fraction(sign * sum(binom(n - j, k) * binom(n + k, j) for j in range(n + 1)))
    if name == "factorial":
        return Fraction(comb(n, k) * factorial(n), factorial(k)) * sign
    # P_n(x+1) of the factorial family: sum_j a^fact_{n,j} C(j,k)
    return sum(
        (Fraction(comb(n, j) * factorial(n), factorial(j)) * (-1) ** (n - j) * comb(j, k) for j in range(k, n + 1)),
        Fraction(0),
    )


def derangement_coeff_printed(n: int, k: int) -> Fraction:
    """sum_j C(n,j) C(j,k) j!/k! (-1)^(j-k): entries of [e^x, x] * [1/(1+x), x/(1+x)].

    This is the binomial matrix applied on the left of the factorial array.
    The derangement polynomials are P_n(x+1) for the factorial family, which
    needs the binomial matrix on the right; the two agree only for n <= 1.
    """
    return sum(
        (Fraction(comb(n, j) * binom(j, k) * factorial(j), factorial(k)) * (-1) ** (j - k) for j in range(k, n + 1)),
        Fraction(0),
    )


def central_binomial_coeff_alt(n: int, k: int) -> Fraction:
    """The other printed form: (C(n+k, n-k) + C(n+k-1, n-k-1)) (-1)^(n-k)."""
    return Fraction((binom(n + k, n - k) + binom(n + k - 1, n - k - 1)) * (-1) ** (n - k))


def jfraction_for(name: str, depth: int) -> JFraction:
    """The displayed continued fraction, cut to ``depth`` alphas and lambdas."""
    _lookup(name)
    r = range(depth)
    if name == "catalan":
        alpha = [1 if n == 0 else 2 for n in r]
        lam = [1 for _ in r]
    elif name == "central_binomial":
        alpha = [2 for _ in r]
        lam = [2 if k == 0 else 1 for k in r]
    elif name == "schroeder":
        alpha = [2 if n == 0 else 3 for n in r]
        lam = [2 for _ in r]
    elif name == "factorial":
        alpha = [2 * n + 1 for n in r]
        lam = [(k + 1) ** 2 for k in r]
    else:
        alpha = [2 * n for n in r]
        lam = [(k + 1) ** 2 for k in r]
    return JFraction(tuple(alpha), tuple(lam), 1)


def riordan_for(name: str, order: int) -> RiordanArray:
    """The Riordan array named as the coefficient array of the example."""
    _lookup(name)
    if name == "catalan":
        return RiordanArray(one_over_one_plus_x(order), x_over_one_plus_x_squared(order))
    if name == "central_binomial":
        return RiordanArray(one_minus_x_over_one_plus_x(order), x_over_one_plus_x_squared(order))
    if name == "schroeder":
        return RiordanArray(one_over_one_plus_2x(order), x_over_one_plus_3x_plus_2x2(order))
    if name == "factorial":
        return RiordanArray(one_over_one_plus_x(order), x_over_one_plus_x(order), Kind.EXPONENTIAL)
    # factorial array times [e^x, x]: [e^(x/(1+x)) / (1+x), x/(1+x)]
    return riordan_multiply(riordan_for("factorial", order), pascal(order, Kind.EXPONENTIAL))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    k: int
    lhs: Fraction
    expected: Fraction
    passed: bool
    note: str = ""
    alternate_lhs: Optional[Fraction] = None  # value under the other reading, where the print is ambiguous


def _catalan_identity(k):
    total = 0
    for i in range(2 * k + 1):
        c_i = catalan_number(i)
        for j in range(i + 1):
            total += (-1) ** i * binom(k + j, 2 * j) * binom(k + i - j, 2 * (i - j)) * c_i
    return Fraction(total)


def _central_binomial_identity(k, symmetric=True):
    total = Fraction(0)
    for i in range(2 * k + 1):
        c = comb(2 * i, i)
        for j in range(i + 1):
            z1 = zero_pow(k + j)
            z2 = zero_pow(k + i - j)
            first = Fraction(2 * k + z1, k + j + z1)
            den2 = (k + i - j + z2) if symmetric else (k + j + z2)
            second = Fraction(2 * k + z2, den2)
            total += (-1) ** i * binom(k + j, 2 * j) * binom(k + i - j, 2 * (i - j)) * first * second * c
    return total


def _schroeder_identity(k, signed=True):
    total = 0
    for i in range(2 * k + 1):
        s_i = schroeder_number(i)
        sign = (-1) ** i if signed else 1
        for j in range(i + 1):
            left = sum(binom(k - l, j) * binom(k + j, l) for l in range(k + 1))
            right = sum(binom(k - m, i - j) * binom(k + i - j, m) for m in range(k + 1))
            total += sign * left * right * s_i
    return Fraction(total)


def _factorial_identity(k):
    total = Fraction(0)
    kf2 = factorial(k) ** 2
    for i in range(2 * k + 1):
        inner = sum(
            (Fraction((-1) ** i * comb(k, j) * binom(k, i - j) * kf2, factorial(j) * factorial(i - j)) for j in range(i + 1)),
            Fraction(0),
        )
        total += inner * factorial(i)
    return total


def _factorial_normalized_identity(k):
    return Fraction(sum(example4_triangle_row(k)))


def _derangement_identity(k, coeff_fn=None):
    coeff_fn = coeff_fn or (lambda n, j: closed_coeff("derangement", n, j))
    a = [coeff_fn(k, j) for j in range(k + 1)]

    def coeff(j):
        return a[j] if 0 <= j <= k else 0

    total = Fraction(0)
    for i in range(2 * k + 1):
        conv = sum((coeff(j) * coeff(i - j) for j in range(i + 1)), Fraction(0))
        d_i = sum(comb(i, l) * (-1) ** (i - l) * factorial(l) for l in range(i + 1))
        total += conv * d_i
    return total


def verify_identity(name: str, k: int) -> IdentityCheck:
    """Evaluate the example's displayed identity at k and compare with its closed form."""
    _lookup(name)
    if k < 0:
        raise ValueError("k must be >= 0")
    if name == "catalan":
        lhs, expected = _catalan_identity(k), Fraction(1)
        return IdentityCheck(name, k, lhs, expected, lhs == expected)
    if name == "central_binomial":
        lhs = _central_binomial_identity(k, symmetric=True)
        alt = _central_binomial_identity(k, symmetric=False)
        expected = Fraction(2 - zero_pow(k))
        note = "symmetric reading k+i-j+0^(k+i-j)"
        if alt == expected:
            note += "; printed reading k+j+0^(k+i-j) also matches"
        else:
            note += "; printed reading k+j+0^(k+i-j) does not match"
        return IdentityCheck(name, k, lhs, expected, lhs == expected, note, alt)
    if name == "schroeder":
        lhs = _schroeder_identity(k, signed=True)
        alt = _schroeder_identity(k, signed=False)
        expected = Fraction(2**k)
        note = "with the (-1)^i sign carried by a_{k,j} a_{k,i-j}"
        if alt != expected:
            note += "; unsigned print does not match"
        return IdentityCheck(name, k, lhs, expected, lhs == expected, note, alt)
    if name == "factorial":
        lhs = _factorial_identity(k)
        expected = Fraction(factorial(k) ** 2)
        normalized = _factorial_normalized_identity(k)
        ok = lhs == expected and normalized == 1
        return IdentityCheck(name, k, lhs, expected, ok, f"normalized row sum = {normalized}")
    lhs = _derangement_identity(k)
    alt = _derangement_identity(k, derangement_coeff_printed)
    expected = Fraction(factorial(k) ** 2)
    note = "a_{k,j} of P_k(x+1) (factorial array times binomial matrix)"
    if alt != expected:
        note += "; binomial-matrix-on-the-left coefficients do not match"
    return IdentityCheck(name, k, lhs, expected, lhs == expected, note, alt)


def example4_triangle_row(k: int) -> list:
    """entry(k, i) = sum_j (-1)^i C(k,j) C(k,i-j) C(i,j) for 0 <= i <= 2k."""
    return [
        sum((-1) ** i * binom(k, j) * binom(k, i - j) * comb(i, j) for j in range(i + 1))
        for i in range(2 * k + 1)
    ]


def example4_triangle(K: int) -> list:
    return [example4_triangle_row(k) for k in range(K + 1)]
