from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from su2rep.series import (
    RationalFunction,
    TruncatedSeries,
    series_div,
    series_linear_combination,
    zpoly_add,
    zpoly_mul,
    zpoly_pow,
    zpoly_shift,
    zpoly_str,
    zpoly_trim,
)


# -- integer polynomial helpers ---------------------------------------------

def test_zpoly_trim():
    assert zpoly_trim([0, 0, 0]) == (0,)
    assert zpoly_trim([1, 2, 0]) == (1, 2)
    assert zpoly_trim([]) == ()


def test_zpoly_mul_binomial():
    # (1+t)^2 = 1 + 2t + t^2
    assert zpoly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert zpoly_pow((1, 1), 4) == (1, 4, 6, 4, 1)


def test_zpoly_shift_and_str():
    assert zpoly_shift((1, 1), 2) == (0, 0, 1, 1)
    assert zpoly_str((1, 0, -3, 1)) == "1 - 3*t^2 + t^3"
    assert zpoly_str((0,)) == "0"


@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
    st.lists(st.integers(-9, 9), min_size=1, max_size=6),
)
def test_zpoly_ring_axioms(a, b, c):
    assert zpoly_mul(a, b) == zpoly_mul(b, a)
    assert zpoly_mul(zpoly_mul(a, b), c) == zpoly_mul(a, zpoly_mul(b, c))
    assert zpoly_mul(a, zpoly_add(b, c)) == zpoly_add(
        zpoly_mul(a, b), zpoly_mul(a, c)
    )


# -- truncated series --------------------------------------------------------

def test_series_construction_pads_and_truncates():
    s = TruncatedSeries([1, 2], order=4)
    assert s.coeffs == (1, 2, 0, 0, 0)
    t = TruncatedSeries([1, 2, 3, 4, 5], order=2)
    assert t.coeffs == (1, 2, 3)


def test_series_mul_truncates_to_common_order():
    a = TruncatedSeries([1, 1, 1, 1], order=3)
    b = TruncatedSeries([1, -1], order=5)
    prod = a * b
    assert prod.order == 3
    assert prod.coeffs == (1, 0, 0, 0)


def test_series_geometric_times_complement():
    n = 10
    geo = TruncatedSeries([1] * (n + 1), order=n)
    one_minus_t = TruncatedSeries([1, -1], order=n)
    assert (geo * one_minus_t) == TruncatedSeries.one(n)


def test_series_div_inverts_mul():
    a = TruncatedSeries([1, 3, Fraction(1, 2), 7], order=3)
    b = TruncatedSeries([2, -1, 5, 0], order=3)
    assert series_div(a * b, b) == a


def test_series_div_rejects_zero_constant_term():
    a = TruncatedSeries([1], order=3)
    b = TruncatedSeries([0, 1], order=3)
    with pytest.raises(ValueError):
        series_div(a, b)


def test_linear_combination():
    a = TruncatedSeries([1, 0, 1], order=2)
    b = TruncatedSeries([0, 2, 4], order=2)
    s = series_linear_combination([(Fraction(1, 2), a), (Fraction(1, 2), b)])
    assert s.coeffs == (Fraction(1, 2), 1, Fraction(5, 2))


fracs = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


@st.composite
def series3(draw):
    cs = draw(st.lists(fracs, min_size=1, max_size=7))
    return TruncatedSeries(cs, order=6)


@given(series3(), series3(), series3())
def test_series_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a - b) + b == a


@given(series3(), series3())
def test_series_div_roundtrip(a, b):
    if b.coeffs[0] == 0:
        return
    assert series_div(a, b) * b == a


# -- rational functions ------------------------------------------------------

def test_expand_geometric():
    f = RationalFunction((1,), (1, -1))
    assert f.expand(5).coeffs == (1, 1, 1, 1, 1, 1)


def test_expand_two_even_denominators():
    # 1/((1-t^2)(1-t^4)): partitions into parts of size 2 and 4
    f = RationalFunction((1,), zpoly_mul((1, 0, -1), (1, 0, 0, 0, -1)))
    assert f.expand(8).coeffs == (1, 0, 1, 0, 2, 0, 2, 0, 3)


def test_expand_with_polynomial_numerator():
    # (1+t)^3/(1-t) has expansion 1 + 4t + 7t^2 + 8t^3 + 8t^4 + ...
    f = RationalFunction(zpoly_pow((1, 1), 3), (1, -1))
    assert f.expand(4).coeffs == (1, 4, 7, 8, 8)


def test_rational_arithmetic_and_equality():
    half = RationalFunction((1,), (2,))
    geo = RationalFunction((1,), (1, -1))
    combo = half * geo + half * geo
    assert combo == geo
    assert combo.reduced_pair() == ((1,), (1, -1))


def test_reduced_cancels_common_factor():
    # (1-t^2)/(1-t) == 1+t
    f = RationalFunction((1, 0, -1), (1, -1))
    assert f.reduced_pair() == ((1, 1), (1,))
    assert f == RationalFunction((1, 1))


def test_zero_constant_denominator_rejected():
    with pytest.raises(ValueError):
        RationalFunction((1,), (0, 1))


zpolys = st.lists(st.integers(-6, 6), min_size=1, max_size=5)


@given(zpolys, zpolys.filter(lambda a: zpoly_trim(a)[0] != 0))
def test_expand_times_denominator_recovers_numerator(num, den):
    f = RationalFunction(num, den)
    order = 12
    s = f.expand(order)
    d = TruncatedSeries([Fraction(c) for c in den], order=order)
    back = s * d
    expected = TruncatedSeries([Fraction(c) for c in num], order=order)
    assert back == expected


@given(
    zpolys,
    zpolys.filter(lambda a: zpoly_trim(a)[0] != 0),
    zpolys,
    zpolys.filter(lambda a: zpoly_trim(a)[0] != 0),
)
def test_rational_sum_matches_series_sum(n1, d1, n2, d2):
    f, g = RationalFunction(n1, d1), RationalFunction(n2, d2)
    assert (f + g).expand(8) == f.expand(8) + g.expand(8)
    assert (f * g).expand(8) == f.expand(8) * g.expand(8)


@given(zpolys, zpolys.filter(lambda a: zpoly_trim(a)[0] != 0))
def test_reduced_preserves_value(num, den):
    f = RationalFunction(num, den)
    assert f.reduced() == f
    assert f.reduced().expand(10) == f.expand(10)
