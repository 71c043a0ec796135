from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelkit.errors import DivisorNotUnit, InnerNotNilpotent, InsufficientPrecision, NotInvertible, ParseError
from hankelkit.series import (
    TO_EGF,
    TO_OGF,
    PowerSeries,
    Sequence,
    binomial_transform,
    exp_series,
    ogf_egf_convert,
    parse_terms,
    ps_add,
    ps_compose,
    ps_div,
    ps_mul,
    ps_revert,
    rational,
)

X = PowerSeries.x()


def S(*coeffs, precision=None):
    return PowerSeries(coeffs, precision)


def poly_mul_oracle(a, b, n):
    """Truncated convolution on plain lists."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        for j, y in enumerate(b[: n + 1 - i]):
            out[i + j] += x * y
    return out


# ---- construction and parsing


def test_sequence_rejects_floats_and_empty():
    with pytest.raises(TypeError):
        Sequence((1.5,))
    with pytest.raises(ValueError):
        Sequence(())


def test_rationals_are_canonical():
    s = parse_terms("2/4, -3/6 7")
    assert s.terms == (Fraction(1, 2), Fraction(-1, 2), Fraction(7))
    assert s[0].denominator == 2


def test_parse_terms_comments_and_separators():
    text = "# Catalan\n1, 1 2\n#5\n5,14\n"
    assert list(parse_terms(text)) == [1, 1, 2, 5, 14]


@pytest.mark.parametrize("bad", ["1, x", "1/0", "1/-2", "1.5", "# only a comment"])
def test_parse_terms_errors(bad):
    with pytest.raises(ParseError):
        parse_terms(bad)


def test_parse_error_reports_line():
    with pytest.raises(ParseError) as exc:
        parse_terms("1 2\n3 oops")
    assert exc.value.line == 2


def test_exact_series_trims_and_finite_pads():
    assert S(1, 2, 0, 0).coeffs == (1, 2)
    assert S(1, precision=3).coeffs == (1, 0, 0, 0)
    with pytest.raises(InsufficientPrecision):
        S(1, 2, precision=1)[2]


# ---- ps_add


def test_add_cancellation():
    assert S(1, 1) + S(1, -1) == S(2)


def test_add_identity():
    s = S(3, 0, Fraction(1, 2), precision=4)
    assert ps_add(S(), s) == s


def test_add_precision_is_min():
    out = ps_add(S(1, 2, 3, precision=2), S(1, precision=5))
    assert out == S(2, 2, 3, precision=2)


# ---- ps_mul


def test_mul_geometric_inverse():
    geo = S(*([1] * 10), precision=9)
    assert ps_mul(S(1, -1), geo) == S(1, precision=9)


def test_mul_square():
    assert S(1, 1) * S(1, 1) == S(1, 2, 1)


def test_mul_x_times_x():
    assert ps_mul(X, X) == S(0, 0, 1)
    # finite precision: product known only through min precision
    assert ps_mul(S(0, 1, precision=3), S(0, 1, precision=3)) == S(0, 0, 1, 0, precision=3)


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
    st.lists(st.integers(-9, 9), min_size=1, max_size=8),
)
def test_mul_matches_convolution_oracle(a, b):
    n = 6
    got = ps_mul(PowerSeries(a, n), PowerSeries(b, n))
    assert list(got.coeffs) == poly_mul_oracle(a, b, n)


# ---- ps_div


def test_div_geometric():
    assert ps_div(S(1), S(1, -1), order=6) == S(*([1] * 7), precision=6)


def test_div_self():
    a = S(2, 3, -1, precision=5)
    assert ps_div(a, a) == S(1, precision=5)


def test_div_partial_fraction_oracle():
    # 1/((1+x)(1+2x)) = 2/(1+2x) - 1/(1+x): coefficients (-1)^n (2^(n+1) - 1)
    expected = [1, -3, 7, -15, 31, -63, 127, -255]
    assert list(rational([1], [1, 3, 2], 7).coeffs) == expected


def test_div_errors():
    with pytest.raises(DivisorNotUnit):
        ps_div(S(1), X, order=3)
    with pytest.raises(InsufficientPrecision):
        ps_div(S(1), S(1, 1))


def test_div_by_exact_constant_stays_exact():
    assert ps_div(S(2, 4), S(2)) == S(1, 2)


# ---- ps_compose


def test_compose_identity():
    g = rational([1, 2], [1, -3], 6)
    assert ps_compose(g, X) == g


def test_compose_pascal_columns():
    # (1/(1-x)) o (x/(1-x)) = (1-x)/(1-2x); oracle: summed powers of the inner series
    got = ps_compose(rational([1], [1, -1], 7), rational([0, 1], [1, -1], 7))
    assert list(got.coeffs) == [1, 1, 2, 4, 8, 16, 32, 64]


def test_compose_alternating():
    # (1/(1+x)) o (x/(1-x)) = 1 - x
    got = ps_compose(rational([1], [1, 1], 7), rational([0, 1], [1, -1], 7))
    assert list(got.coeffs) == [1, -1, 0, 0, 0, 0, 0, 0]


def test_compose_precision_rule():
    outer = S(1, 1, 1, precision=2)
    inner = S(0, 0, 1, precision=9)  # valuation 2
    out = ps_compose(outer, inner)
    assert out.precision == 4
    assert list(out.coeffs) == [1, 0, 1, 0, 1]


def test_compose_exact_polynomials_stay_exact():
    assert ps_compose(S(1, 1, 1), S(0, 1, 1)) == S(1, 1, 2, 2, 1)


def test_compose_rejects_constant_inner():
    with pytest.raises(InnerNotNilpotent):
        ps_compose(S(1, 1), S(1, 1))


# ---- ps_revert


def test_revert_x():
    assert ps_revert(X) == X


def test_revert_pascal_f():
    got = ps_revert(rational([0, 1], [1, -1], 8))
    assert got == rational([0, 1], [1, 1], 8)


def test_revert_matches_fixed_point_oracle():
    # f = x/(1+x)^2; g = x (1 + g)^2 iterated to a fixed point
    n = 7
    g = [0] * (n + 1)
    for _ in range(n + 2):
        one_g = [1 + g[0]] + g[1:]
        g = [0] + poly_mul_oracle(one_g, one_g, n)[:n]
    assert g == [0, 1, 2, 5, 14, 42, 132, 429]
    f = rational([0, 1], [1, 2, 1], n)
    fbar = ps_revert(f)
    assert list(fbar.coeffs) == g
    assert ps_compose(f, fbar) == X.truncate(n)


@pytest.mark.parametrize("f", [S(1, 1, precision=4), S(0, 2, precision=4), S(0, 0, 1, precision=4)])
def test_revert_rejects(f):
    with pytest.raises(NotInvertible):
        ps_revert(f)


nonunit_series = st.lists(st.integers(-5, 5), min_size=7, max_size=7).filter(lambda c: c[0] != 0)


@given(st.lists(st.integers(-5, 5), min_size=7, max_size=7), nonunit_series)
def test_div_then_mul_round_trip(a, b):
    A, B = PowerSeries(a, 6), PowerSeries(b, 6)
    assert ps_mul(ps_div(A, B), B) == A


@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
@settings(max_examples=60)
def test_revert_is_two_sided_inverse(tail):
    f = PowerSeries([0, 1] + tail, 7)
    fbar = ps_revert(f)
    assert ps_compose(f, fbar) == X.truncate(7)
    assert ps_compose(fbar, f) == X.truncate(7)


@given(
    st.lists(st.integers(-5, 5), min_size=5, max_size=5),
    st.lists(st.integers(-5, 5), min_size=5, max_size=5),
    st.lists(st.integers(-5, 5), min_size=5, max_size=5),
)
def test_arithmetic_is_order_independent(a, b, c):
    A, B, C = (PowerSeries(v, 4) for v in (a, b, c))
    assert (A + B) + C == A + (B + C)
    assert (A * B) * C == A * (B * C)
    assert A * B == B * A


# ---- sequence transforms


def test_inverse_binomial_of_factorials_is_derangements():
    assert list(binomial_transform([1, 1, 2, 6, 24], -1)) == [1, 0, 1, 2, 9]


def test_binomial_of_zeros():
    assert list(binomial_transform([0, 0, 0], 1)) == [0, 0, 0]


def test_binomial_pair_is_identity():
    s = [1, 2, 6, 20, 70]
    assert list(binomial_transform(binomial_transform(s, 1), -1)) == s


@given(st.lists(st.fractions(max_denominator=20).map(Fraction), min_size=1, max_size=10))
def test_binomial_transforms_are_mutually_inverse(terms):
    s = Sequence(tuple(terms))
    assert binomial_transform(binomial_transform(s, 1), -1) == s
    assert binomial_transform(binomial_transform(s, -1), 1) == s


def test_ogf_egf():
    assert list(ogf_egf_convert([1, 1, Fraction(1, 2), Fraction(1, 6)], TO_OGF)) == [1, 1, 1, 1]
    s = Sequence((3, 1, 4, 1, 5))
    assert ogf_egf_convert(ogf_egf_convert(s, TO_EGF), TO_OGF) == s


def test_ogf_of_exp_over_one_plus_x():
    # e^x / (1+x) has n! [x^n] = sum_k (-1)^k n!/(n-k)!: 1, 0, 1, -2, 9, -44 (signed derangements)
    egf = ps_div(exp_series(5), S(1, 1))
    oracle = []
    for n in range(6):
        total = 0
        f = 1
        for k in range(n + 1):
            # n!/(n-k)!
            f = 1 if k == 0 else f * (n - k + 1)
            total += (-1) ** k * f
        oracle.append(total)
    assert list(ogf_egf_convert(egf.coeffs, TO_OGF)) == oracle
    assert oracle == [(-1) ** n * d for n, d in enumerate([1, 0, 1, 2, 9, 44])]


def test_str_shows_precision():
    assert str(S(1, -1, precision=2)) == "1 - x + O(x^3)"
