import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from degenstir import families as fam
from degenstir.rings import BivarPoly, LambdaPoly
from degenstir.stirling import stirling

X = BivarPoly.x()
L = LambdaPoly.lam()
small = st.integers(min_value=0, max_value=6)
positive = st.integers(min_value=1, max_value=6)


def test_examples():
    assert fam.family_build("T", 2, 0).value.subs_x(1) == 4
    assert fam.family_build("S", 3, 0).value.subs_x(5) == -4
    assert fam.family_build("Snr", 2, 1).value == X + 2 * X**2
    assert fam.family_build("BellLike", 0, 2).value == (1 - L) * X + X**2
    with pytest.raises(ValueError):
        fam.family_build("Q", 1, 1)
    with pytest.raises(ValueError):
        fam.family_build("S", -1, 1)


def test_family_json():
    d = fam.family_build("T", 1, 1).to_json()
    assert d == {"family": "T", "n": 1, "r": 1, "value": [[], ["1"]]}


@given(positive, positive)
def test_s_recurrence(n, r):
    assert fam.s_family_recurrence_check(n, r)


@given(small, small)
def test_s_closed_forms(n, r):
    assert fam.s_closed_form_a_check(n, r)
    assert fam.s_closed_form_b_check(n, r)


@given(small, small)
def test_hockey_sticks(n, r):
    assert fam.hockey_stick_degenerate_check(n, r)
    assert fam.hockey_stick_r0_check(n)
    assert fam.hockey_stick_x_eq_n_check(n, r)


def test_shifted_family():
    assert fam.shifted_family_check(4, 3, [(0, 1), (Fraction(1, 2), 2), (3, Fraction(-1, 3))])
    with pytest.raises(ValueError):
        fam.shifted_family_check(2, 2, [(1, 0)])


@pytest.mark.parametrize("h", [1, 2, Fraction(1, 2), Fraction(-1, 3)])
def test_difference_operator(h):
    f = fam.ff_symbolic(5)
    assert fam.difference_operator(f, h, 3) == fam.difference_binomial_form(f, h, 3)
    assert fam.difference_falling_check(3, 5, h)
    assert fam.difference_operator(f, h, 0) == f


def test_difference_errors():
    with pytest.raises(ValueError):
        fam.difference_operator(X, 0)
    with pytest.raises(ValueError):
        fam.difference_operator(X, 1, -1)


def test_theta_on_monomials():
    # theta acts on x^k as multiplication by k
    assert fam.theta_factorial_apply(X**3, 2) == X**3 * (3 * (3 - L))
    with pytest.raises(ValueError):
        fam.theta_factorial_apply(X, -1)


@given(small, small, small)
def test_operator_forms(n, r, p):
    assert fam.t_shift_operator_check(n, r, p)
    assert fam.snr_operator_check(n, r)


@given(small, positive)
def test_power_sums(n, r):
    assert fam.snr_expansion_check(n, r)
    assert fam.power_sum_negative_lambda_check(n, r)
    assert fam.power_sum_bridge_check(n, r)


def test_bridge_with_n_plus_one_binomial_is_false():
    assert not fam.power_sum_bridge_check(1, 2, rhs_upper="n+1")
    assert fam.power_sum_bridge_check(1, 2)


@given(small, small)
def test_t_family(n, r):
    assert fam.t_closed_form_check(n, r)
    assert fam.t_at_one_check(n, r)


def test_k_family_formal():
    for r in range(5):
        assert fam.k_family_formal_check(r, 12)


def test_k_partial_sum_converges():
    ev = fam.k_partial_sum(3, Fraction(1, 2), Fraction(1, 3), 40)
    closed = fam.k_closed_form(3, 0.5, Fraction(1, 3))
    assert abs(float(ev.partial_sum) - closed.real) < 1e-12


@pytest.mark.parametrize("r", range(6))
def test_trig_sums(r):
    for xv in (0.3, math.pi / 2):
        c, s, cc, sc = fam.trig_sums_numeric(r, xv, Fraction(-1, 2))
        assert abs(c - cc) < 1e-9 and abs(s - sc) < 1e-9
    with pytest.raises(ValueError):
        fam.trig_sums_numeric(r, 0.3, 1, n_terms=r + 9)


def test_trig_record_keys():
    rec = fam.trig_record(0, 0.0, 1)
    assert rec["cos_partial"] == pytest.approx(math.e)
    assert set(rec) == {"r", "x", "lambda", "cos_partial", "cos_closed", "sin_partial", "sin_closed", "abs_err"}


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=4))
def test_alternating_shift(n, a):
    assert fam.alternating_shift_check(n, a)


def test_bell_like_at_zero_lambda():
    # B_r(1) at l = 0 is the Bell number
    assert [fam.bell_like(r).evaluate(1, 0) for r in range(6)] == [1, 1, 2, 5, 15, 52]
    assert fam.bell_like(3).subs_x(1) == sum((stirling(3, j) for j in range(4)), LambdaPoly.zero())
