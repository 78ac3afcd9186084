from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from degenstir.rings import LambdaPoly
from degenstir.series import (
    ConstantTermError,
    NotInvertible,
    SeriesMismatch,
    TruncSeries,
    degenerate_exp,
    egf_coefficient,
    exp_series,
    ratio_power_series,
    series_invert,
    series_pow,
)
from oracles import deg_falling

unit_series = st.lists(rationals, min_size=1, max_size=9).map(lambda cs: TruncSeries([1] + cs, 8))
any_series = st.lists(rationals, max_size=9).map(lambda cs: TruncSeries(cs, 8))


def test_degenerate_exp_coefficients():
    e = degenerate_exp("one", 6)
    for k in range(7):
        for lv in (Fraction(0), Fraction(1, 3), Fraction(-2)):
            assert egf_coefficient(e, k)(lv) == deg_falling(Fraction(1), k, lv)


def test_degenerate_exp_symbolic_and_numeric():
    ex = degenerate_exp("x", 4)
    assert egf_coefficient(ex, 3).evaluate(5, Fraction(1, 2)) == deg_falling(Fraction(5), 3, Fraction(1, 2))
    e2 = degenerate_exp(2, 4)
    assert egf_coefficient(e2, 2) == 4 - 2 * LambdaPoly.lam()
    with pytest.raises(ValueError):
        degenerate_exp("y", 3)


def test_lambda_zero_is_classical_exp():
    e = degenerate_exp("one", 10).map(lambda c: c(0))
    assert e == exp_series(10)


def test_product_of_degenerate_exps():
    # e^a * e^b = e^(a+b) over Q[l]
    a, b = degenerate_exp(2, 8), degenerate_exp(Fraction(1, 3), 8)
    assert a * b == degenerate_exp(Fraction(7, 3), 8)


def test_invert_and_errors():
    s = TruncSeries([2, 1, 5], 6)
    assert s * series_invert(s) == TruncSeries.constant(1, 6)
    with pytest.raises(NotInvertible):
        series_invert(TruncSeries([0, 1], 4))
    with pytest.raises(NotInvertible):
        series_invert(TruncSeries([LambdaPoly.lam()], 4))
    with pytest.raises(ConstantTermError):
        series_pow(TruncSeries([2, 1], 4), Fraction(1, 2))
    with pytest.raises(SeriesMismatch):
        TruncSeries([1], 3) * TruncSeries([1], 4)
    with pytest.raises(IndexError):
        egf_coefficient(TruncSeries([1], 3), 4)


def test_ratio_power_constant_term():
    r = ratio_power_series(3, 5)
    assert r.order == 5 and r[0] == 1
    assert ratio_power_series(0, 5) == TruncSeries.constant(1, 5, LambdaPoly)


def test_json_round_trip():
    s = degenerate_exp("one", 5)
    assert TruncSeries.from_json(s.to_json(), LambdaPoly) == s
    q = TruncSeries([1, Fraction(-1, 2)], 3)
    assert TruncSeries.from_json(q.to_json()) == q


@given(unit_series, st.integers(min_value=0, max_value=6))
def test_series_pow_matches_repeated_multiplication(s, k):
    assert series_pow(s, k) == s**k


@given(unit_series)
def test_half_power_squares_back(s):
    h = series_pow(s, Fraction(1, 2))
    assert h * h == s


@given(unit_series, rationals, rationals)
def test_pow_exponent_law(s, a, b):
    assert series_pow(s, a) * series_pow(s, b) == series_pow(s, a + b)


@given(unit_series)
def test_inverse(s):
    assert series_invert(s) * s == TruncSeries.constant(1, 8)
    assert series_pow(s, -1) == series_invert(s)


@given(any_series, any_series, st.integers(min_value=0, max_value=8))
def test_truncation_commutes_with_product(a, b, m):
    assert (a * b).truncate(m) == a.truncate(m) * b.truncate(m)
