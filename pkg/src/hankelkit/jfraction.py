"""Jacobi continued fractions: (alpha, lambda) <-> moments, and the lambda-product Hankel formula.

Depth bookkeeping: 2m+1 moments mu_0..mu_2m determine exactly m alphas
(alpha_0..alpha_(m-1)) and m lambdas (lambda_1..lambda_m).  Conversely
mu_0..mu_N need ceil(N/2) alphas and floor(N/2) lambdas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientDepth
from .hankel import ldl_decompose
from .series import PowerSeries, Sequence, as_sequence, frac, ps_div, ps_mul, ps_add


@dataclass(frozen=True)
class JFraction:
    """mu0 / (1 - alpha_0 x - lambda_1 x^2 / (1 - alpha_1 x - lambda_2 x^2 / ...))."""

    alpha: tuple = ()
    lambdas: tuple = ()  # lambdas[k-1] is lambda_k
    mu0: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(frac(a) for a in self.alpha))
        object.__setattr__(self, "lambdas", tuple(frac(v) for v in self.lambdas))
        object.__setattr__(self, "mu0", frac(self.mu0))
        if self.mu0 == 0:
            raise ValueError("mu0 must be nonzero")
        if any(v == 0 for v in self.lambdas):
            raise ValueError("every lambda_k must be nonzero")

    def lam(self, k: int) -> Fraction:
        """lambda_k, 1-based as in the recurrence."""
        return self.lambdas[k - 1]


def _needed_depth(N: int):
    return (N + 1) // 2, N // 2


def _check_depth(j: JFraction, N: int):
    if N < 0:
        raise ValueError("N must be >= 0")
    n_alpha, n_lambda = _needed_depth(N)
    if len(j.alpha) < n_alpha or len(j.lambdas) < n_lambda:
        raise InsufficientDepth(
            f"{N + 1} moments need {n_alpha} alphas and {n_lambda} lambdas; "
            f"have {len(j.alpha)} and {len(j.lambdas)}"
        )


def extract_jfraction(s) -> JFraction:
    """Read (alpha, lambda) off the L D L^T factorization of the Hankel matrix.

    lambda_k = d_k / d_(k-1) and alpha_n = L[n+1][n] - L[n][n-1].
    """
    s = as_sequence(s)
    m = (len(s) - 1) // 2
    ldl = ldl_decompose(s, m)
    L, d = ldl.L, ldl.d
    lambdas = tuple(d[k] / d[k - 1] for k in range(1, m + 1))
    alpha = tuple(L[n + 1][n] - (L[n][n - 1] if n > 0 else 0) for n in range(m))
    return JFraction(alpha, lambdas, s[0])


def moments_from_jfraction(j: JFraction, N: int) -> Sequence:
    """mu_0..mu_N as mu0 * (J^n)[0][0] for the tridiagonal Jacobi operator.

    The row vector e_0 J^n is advanced one step at a time (weighted Motzkin
    paths: up-steps weight 1, level steps alpha_h, down-steps lambda_h); only
    heights that can still return to 0 by step N are kept.
    """
    _check_depth(j, N)
    row = [Fraction(1)]
    mu = [j.mu0]
    for n in range(1, N + 1):
        top = min(n, N - n)
        nxt = []
        for h in range(top + 1):
            acc = row[h - 1] if 0 < h <= len(row) else Fraction(0)
            if h < len(row):
                acc += j.alpha[h] * row[h]
            if h + 1 < len(row):
                acc += j.lam(h + 1) * row[h + 1]
            nxt.append(acc)
        row = nxt
        mu.append(j.mu0 * row[0])
    return Sequence(tuple(mu))


def hankel_from_lambdas(j: JFraction, N: int) -> list:
    """h_n = mu0^(n+1) * prod_{k=1}^n lambda_k^(n+1-k) for n = 0..N."""
    if len(j.lambdas) < N:
        raise InsufficientDepth(f"need {N} lambdas, have {len(j.lambdas)}")
    out = []
    # h_n = h_(n-1) * mu0 * lambda_1 ... lambda_n
    h = Fraction(1)
    partial = j.mu0
    for n in range(N + 1):
        if n > 0:
            partial *= j.lam(n)
        h *= partial
        out.append(h)
    return out


def cf_series(j: JFraction, N: int) -> PowerSeries:
    """Bottom-up evaluation of the continued fraction through x^N."""
    _check_depth(j, N)
    depth = (N + 1) // 2
    one = PowerSeries.exact([1])
    g = one
    for k in range(depth - 1, -1, -1):
        den = PowerSeries.exact([1, -j.alpha[k]])
        # lambda_(k+1) enters the top-level series at x^(2k+2)
        if 2 * (k + 1) <= N:
            den = ps_add(den, ps_mul(PowerSeries.exact([0, 0, -j.lam(k + 1)]), g))
        g = ps_div(one, den, order=N)
    return ps_mul(PowerSeries.exact([j.mu0]), g.truncate(N))
