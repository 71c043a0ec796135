"""Acceptance criteria, one test per criterion, all exact.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible with
``pytest tests/test_acceptance.py -s`` and in the verbose log) before asserting.
"""

import random
import time
from fractions import Fraction
from math import factorial

import pytest

from hankelkit.catalog import CATALOG, example4_triangle, generate, verify_identity
from hankelkit.hankel import hankel_determinant, hankel_matrix, hankel_transform, ldl_decompose
from hankelkit.jfraction import JFraction, extract_jfraction, hankel_from_lambdas, moments_from_jfraction
from hankelkit.orthopoly import (
    first_column_of_inverse,
    functional_P_squared,
    hankel_via_coefficients,
    polys_from_determinants,
    polys_from_ldl,
    polys_from_recurrence,
)
from hankelkit.riordan import (
    Kind,
    RiordanArray,
    exponential,
    one_over_one_plus_x,
    riordan_entries,
    riordan_inverse,
    riordan_multiply,
    x_over_one_plus_x,
)
from hankelkit.series import PowerSeries

from oracles import identity, laplace_det, matmul

SEED = 20240531


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        assert ok, detail

    return emit


def three_routes(name, N):
    """Hankel transform h_0..h_N by determinants, lambda products and L(P_k^2)."""
    s = generate(name, 2 * N)
    dets = hankel_transform(s)
    lam = hankel_from_lambdas(extract_jfraction(s), N)
    coeff = hankel_via_coefficients(s, polys_from_determinants(s, N), N)
    return s, dets, lam, coeff


def test_criterion_1_catalan(report):
    t0 = time.perf_counter()
    _, dets, lam, coeff = three_routes("catalan", 20)
    ones = [1] * 21
    identity_ok = all(verify_identity("catalan", k).passed for k in range(16))
    ok = dets == ones and lam == ones and coeff == ones and identity_ok
    report(1, ok, f"h_0..h_20 all ones by 3 routes; identity k<=15 ({time.perf_counter() - t0:.2f}s)")


def test_criterion_2_central_binomial(report):
    s, dets, lam, coeff = three_routes("central_binomial", 20)
    powers = [2**n for n in range(21)]
    A = polys_from_determinants(s, 20)
    functional_ok = all(functional_P_squared(s, A, k) == 2 - (k == 0) for k in range(21))
    j = extract_jfraction(s)
    jf_ok = list(j.lambdas) == [2] + [1] * 19 and list(j.alpha) == [2] * 20
    ok = dets == powers and lam == powers and coeff == powers and functional_ok and jf_ok
    report(2, ok, "h_n = 2^n for n<=20; L(P_k^2) = 2 - 0^k; lambda = [2,1,1,...], alpha = [2,2,...]")


def test_criterion_3_schroeder(report):
    _, dets, lam, coeff = three_routes("schroeder", 15)
    target = [2 ** (n * (n + 1) // 2) for n in range(16)]
    identity_ok = all(verify_identity("schroeder", k).passed for k in range(13))
    ok = dets == target and lam == target and coeff == target and identity_ok
    report(3, ok, "h_n = 2^C(n+1,2) for n<=15; triple sum = 2^k for k<=12")


def test_criterion_4_factorial(report):
    s, dets, lam, coeff = three_routes("factorial", 12)
    target = []
    acc = 1
    for i in range(13):
        acc *= factorial(i) ** 2
        target.append(acc)
    A = polys_from_determinants(s, 12)
    functional_ok = all(functional_P_squared(s, A, k) == factorial(k) ** 2 for k in range(13))
    tri = example4_triangle(15)
    rows_ok = tri[:3] == [[1], [1, -2, 2], [1, -4, 10, -12, 6]]
    sums_ok = all(sum(row) == 1 for row in tri)
    ok = dets == target and lam == target and coeff == target and functional_ok and rows_ok and sums_ok
    report(4, ok, "h_n = prod i!^2 for n<=12; L(P_k^2) = k!^2; triangle rows and row sums")


def test_criterion_5_derangement(report):
    N = 12
    same_hankel = hankel_transform(generate("derangement", 2 * N)) == hankel_transform(generate("factorial", 2 * N))

    rows = 10
    order = rows - 1
    product = riordan_multiply(
        RiordanArray(exponential(order), PowerSeries.x(), Kind.EXPONENTIAL),
        RiordanArray(one_over_one_plus_x(order), x_over_one_plus_x(order), Kind.EXPONENTIAL),
    )
    expected = riordan_entries(product, order)
    actual = polys_from_ldl(generate("derangement", 2 * order), order).as_matrix()
    first_bad = next((n for n in range(rows) if actual[n] != expected[n]), None)
    detail = f"Hankel equal to factorial for n<=12: {same_hankel}; "
    if first_bad is None:
        detail += "coefficient array equals [e^x,x][1/(1+x),x/(1+x)] on 10 rows"
    else:
        detail += (
            f"coefficient array differs from [e^x,x][1/(1+x),x/(1+x)] from row {first_bad}: "
            f"P_{first_bad} = {[str(c) for c in actual[first_bad][: first_bad + 1]]}, "
            f"product row = {[str(c) for c in expected[first_bad][: first_bad + 1]]}"
        )
    report(5, same_hankel and first_bad is None, detail)


def test_criterion_6_route_agreement(report):
    rng = random.Random(SEED)
    depth = 6
    N = depth
    failures = 0
    for _ in range(200):
        alpha = [rng.randint(-5, 5) for _ in range(depth)]
        lam = [rng.randint(1, 5) for _ in range(depth)]
        j = JFraction(alpha, lam)
        s = moments_from_jfraction(j, 2 * depth)
        det_route = polys_from_determinants(s, N).rows
        rec_route = polys_from_recurrence(j, N).rows
        ldl_route = polys_from_ldl(s, N).rows
        back = extract_jfraction(s)
        if not (det_route == rec_route == ldl_route and list(back.alpha) == alpha and list(back.lambdas) == lam):
            failures += 1
    report(6, failures == 0, f"200 random J-fractions of depth 6, {failures} disagreements")


def random_riordan(rng, N, kind):
    g = PowerSeries([1] + [rng.randint(-3, 3) for _ in range(N)], precision=N)
    f = PowerSeries([0, 1] + [rng.randint(-3, 3) for _ in range(N - 1)], precision=N)
    return RiordanArray(g, f, kind)


def test_criterion_7_structural(report):
    ldl_ok = True
    for name in CATALOG:
        s = generate(name, 20)
        dec = ldl_decompose(s, 10)
        H = hankel_matrix(s, 10).as_lists()
        D = [[dec.d[i] if i == j else 0 for j in range(11)] for i in range(11)]
        Lt = [list(col) for col in zip(*dec.L)]
        ldl_ok &= matmul(matmul(dec.L, D), Lt) == H

    rng = random.Random(SEED)
    N = 8
    riordan_ok = True
    for i in range(50):
        r = random_riordan(rng, N, Kind.ORDINARY if i % 2 == 0 else Kind.EXPONENTIAL)
        riordan_ok &= matmul(riordan_entries(r, N), riordan_entries(riordan_inverse(r), N)) == identity(N + 1)

    column_ok = True
    for name in CATALOG:
        s = generate(name, 20)
        column_ok &= first_column_of_inverse(polys_from_ldl(s, 10)) == list(s[:11])

    report(7, ldl_ok and riordan_ok and column_ok, f"H = L D L^T: {ldl_ok}; R R^-1 = I (50 arrays): {riordan_ok}; moments from inverse: {column_ok}")


def test_criterion_8_small_oracle(report):
    ok = True
    for name in CATALOG:
        s = generate(name, 8)
        for n in range(5):
            ok &= hankel_determinant(s, n) == laplace_det(hankel_matrix(s, n).as_lists())
    report(8, ok, "Bareiss vs cofactor expansion, n<=4, five sequences")


def test_exact_types_throughout():
    # every route returns exact rationals or ints, never floats
    _, dets, lam, coeff = three_routes("schroeder", 4)
    assert all(isinstance(v, (int, Fraction)) for v in dets + lam + coeff)
