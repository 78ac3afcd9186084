"""Registry of exact identity checks and a deterministic runner.

Each :class:`IdentityCase` enumerates its parameter tuples from a
:class:`Bounds` and checks them in lexicographic order, so a failure always
reports the smallest failing tuple.  Random sample points (rationals with
numerator and denominator in ``[-9, 9] \\ {0}``) come from an RNG seeded by
``(seed, case id, params)``, which makes every case independent of run order.
"""
from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from . import families as fam
from .bernoulli import bernoulli_closed_form, bernoulli_series, classical_bernoulli_order
from .rings import BivarPoly, LambdaPoly, binomial_poly, falling_factorial, format_rational
from .series import default_order, degenerate_exp, egf_coefficient, ratio_power_series
from .stirling import (
    classical_triangle,
    convolution_check,
    deg_falling_factorial,
    expand_in_falling_basis,
    ff_int,
    ff_symbolic,
    stirling,
    triangle_egf,
    triangle_euler_sum,
    triangle_recurrence,
)

DEFAULT_SEED = 42
DEFAULT_ALPHAS = (1, 2, 3, 4, 5, Fraction(1, 2), Fraction(3, 2), Fraction(-1, 2))
STEP_SIZES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1, 3))
TRIG_POINTS = (0.3, 0.7, 1.5, math.pi / 2)
TRIG_LAMBDAS = (Fraction(1, 3), Fraction(-1, 2))
TRIG_TOL = 1e-9

X = BivarPoly.x()
LAM = LambdaPoly.lam()


@dataclass(frozen=True)
class Bounds:
    """Sweep limits.  A field left as None disables every case that needs it."""

    n_max: int | None = None
    r_max: int | None = None
    alphas: tuple | None = None
    sample_points: int | None = None
    order: int | None = None

    @classmethod
    def default(cls) -> Bounds:
        return cls(n_max=10, r_max=10, alphas=DEFAULT_ALPHAS, sample_points=20, order=default_order())

    def is_empty(self) -> bool:
        return all(v is None for v in (self.n_max, self.r_max, self.alphas, self.sample_points, self.order))

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "r_max": self.r_max,
            "alphas": None if self.alphas is None else [format_rational(a) for a in self.alphas],
            "sample_points": self.sample_points,
            "order": self.order,
        }


@dataclass(frozen=True)
class IdentityCase:
    id: str
    anchor: str
    param_domain: str
    params: Callable
    check: Callable
    needs: tuple = ("n_max",)


@dataclass
class CaseResult:
    id: str
    anchor: str
    status: str  # pass | fail | skipped
    counterexample: tuple | None = None
    millis: float = 0.0
    reason: str | None = None
    checked: int = 0

    def to_dict(self, timings: bool = False) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = [_param_json(p) for p in self.counterexample]
        if self.reason is not None:
            d["reason"] = self.reason
        d["checked"] = self.checked
        if timings:
            d["millis"] = round(self.millis, 3)
        return d


@dataclass
class Report:
    bounds: Bounds
    seed: int
    cases: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if c.status == "fail"]

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "bounds": self.bounds.to_dict(),
            "seed": self.seed,
            "cases": [c.to_dict(timings) for c in self.cases],
        }


def _param_json(p):
    if isinstance(p, Fraction):
        return format_rational(p)
    return p


def sample_rational(rng: random.Random) -> Fraction:
    digits = [d for d in range(-9, 10) if d]
    return Fraction(rng.choice(digits), rng.choice(digits))


def case_rng(seed: int, case_id: str, params: tuple) -> random.Random:
    return random.Random(f"{seed}|{case_id}|{params!r}")


def _samples(b: Bounds, rng: random.Random, count: int | None = None, distinct: bool = True) -> list:
    count = b.sample_points if count is None else count
    if distinct and count > 110:
        # only 110 distinct values have numerator and denominator in [-9, 9] \ {0}
        distinct = False
    out = []
    while len(out) < count:
        q = sample_rational(rng)
        if distinct and q in out:
            continue
        out.append(q)
    return out


# ---- parameter domains -----------------------------------------------------------


def _upto(b, cap=None):
    n = b.n_max if cap is None else min(b.n_max, cap)
    return [(n_,) for n_ in range(n + 1)]


def _nk_triangle(b):
    return [(n, k) for n in range(b.n_max + 1) for k in range(n + 1)]


def _nr(b, n_lo=0, r_lo=0):
    return [(n, r) for n in range(n_lo, b.n_max + 1) for r in range(r_lo, b.r_max + 1)]


# ---- checks ---------------------------------------------------------------------
# each takes (params, bounds, rng) and returns bool


def _chk_neg_argument(p, b, rng):
    (n,) = p
    return ff_symbolic(n).compose(-X) == ff_symbolic(n).scale_lambda(-1) * (-1) ** n


def _chk_binom_negation(p, b, rng):
    (n,) = p
    return fam.binom_x(n) == fam.binom_x(n, shift=n - 1, scale=-1) * (-1) ** n


def _chk_vandermonde(p, b, rng):
    (n,) = p
    for y in _samples(b, rng):
        lhs = fam.binom_x(n, shift=y)
        rhs = BivarPoly.zero()
        for k in range(n + 1):
            rhs = rhs + fam.binom_x(k) * binomial_poly(y, n - k)
        if lhs != rhs:
            return False
    for _ in range(2 * b.sample_points):
        x, y = sample_rational(rng), sample_rational(rng)
        rhs = sum(binomial_poly(x, k) * binomial_poly(y, n - k) for k in range(n + 1))
        if binomial_poly(x + y, n) != rhs:
            return False
    return True


def _chk_deg_binomial_theorem(p, b, rng):
    (n,) = p
    for y in _samples(b, rng):
        lhs = ff_symbolic(n).shift(y)
        rhs = BivarPoly.zero()
        for k in range(n + 1):
            rhs = rhs + ff_symbolic(k) * (deg_falling_factorial(n - k, y) * comb(n, k))
        if lhs != rhs:
            return False
    for _ in range(2 * b.sample_points):
        x, y = sample_rational(rng), sample_rational(rng)
        lhs = deg_falling_factorial(n, x + y)
        rhs = LambdaPoly.zero()
        for k in range(n + 1):
            rhs = rhs + deg_falling_factorial(k, x) * deg_falling_factorial(n - k, y) * comb(n, k)
        if lhs != rhs:
            return False
    return True


def _chk_alternating_partial_sum(p, b, rng):
    (n,) = p
    return fam.s_family(n, 0) == fam.binom_x(n, shift=-1) * (-1) ** n


def _chk_falling_basis(p, b, rng):
    (n,) = p
    acc = BivarPoly.zero()
    for k in range(n + 1):
        acc = acc + falling_factorial(X, k) * stirling(n, k)
    return acc == ff_symbolic(n)


def _chk_triangles(p, b, rng):
    n, k = p
    ref = triangle_recurrence(b.n_max)[n, k]
    return triangle_euler_sum(b.n_max)[n, k] == ref and triangle_egf(b.n_max)[n, k] == ref


def _chk_egf_extraction(p, b, rng):
    n, k = p
    return triangle_egf(b.n_max)[n, k] == stirling(n, k)


def _chk_euler_sum(p, b, rng):
    n, k = p
    return triangle_euler_sum(b.n_max)[n, k] == stirling(n, k)


def _chk_recurrence_vs_basis(p, b, rng):
    (n,) = p
    return list(triangle_recurrence(b.n_max).row(n)) == expand_in_falling_basis(n)


def _chk_convolution(p, b, rng):
    return convolution_check(*p)


@lru_cache(maxsize=None)
def _e_minus_one_power(n: int, order: int):
    return (degenerate_exp("one", order) - 1) ** n


def _chk_egf_power(p, b, rng):
    (n,) = p
    s = _e_minus_one_power(n, b.order)
    return all(egf_coefficient(s, j) == stirling(j, n) * factorial(n) for j in range(b.order + 1))


@lru_cache(maxsize=None)
def _ratio_power(j: int, order: int):
    return ratio_power_series(j, order)


def _chk_ratio_power(p, b, rng):
    (n,) = p
    s = _ratio_power(n, b.order)
    for j in range(b.order + 1):
        want = stirling(j + n, n) * Fraction(1, comb(j + n, n) * factorial(j))
        if s[j] != want:
            return False
    return True


def _chk_ratio_derivative(p, b, rng):
    j, n = p
    return egf_coefficient(_ratio_power(j, b.order), n) == stirling(n + j, j) * Fraction(1, comb(n + j, j))


def _chk_alternating_falling_sum(p, b, rng):
    n, k = p
    acc = LambdaPoly.zero()
    for j in range(k + 1):
        term = ff_int(j, n) * comb(k, j)
        acc = acc - term if j % 2 else acc + term
    return acc == stirling(n, k) * ((-1) ** k * factorial(k))


def _chk_remark(p, b, rng):
    (n,) = p
    one_m = 1 - LAM
    if stirling(n, n - 1) != one_m * comb(n, 2):
        return False
    if n < 2:
        return True
    want = one_m * (LambdaPoly([3 * n - 5, -(3 * n - 1)])) * Fraction(n * (n - 1) * (n - 2), 24)
    return stirling(n, n - 2) == want


def _chk_column_recurrence(p, b, rng):
    n, a = p
    acc = LambdaPoly.zero()
    for k in range(1, a + 1):
        acc = acc + LambdaPoly([a - k + 1, -(n - k)]) * stirling(n - k, a - k + 1)
    return stirling(n, a) == acc


def _neg_side(n, a):
    return stirling(n, a, lam_scale=-1) * factorial(a)


def _chk_negated_lambda_sum(p, b, rng):
    n, a = p
    acc = LambdaPoly.zero()
    for j in range(a, n + 1):
        acc = acc + stirling(n, j) * ((-1) ** (n - j) * factorial(j) * binomial_poly(j - 1, j - a))
    return _neg_side(n, a) == acc


def _chk_negated_lambda_binom(p, b, rng):
    n, a = p
    acc = LambdaPoly.zero()
    upper = LAM * (n - 1)
    for j in range(a, n + 1):
        acc = acc + stirling(n, j) * binomial_poly(upper, j - a) * factorial(j)
    return acc == _neg_side(n, a) and _chk_negated_lambda_sum(p, b, rng)


def _chk_difference_operator(p, b, rng):
    n, q, h = p
    return fam.difference_falling_check(n, q, h)


def _chk_lambda_inversion(p, b, rng):
    n, j = p
    acc = LambdaPoly.zero()
    for a in range(n + 1):
        s = stirling(a, j, lam_scale=-1)
        if s:
            acc = acc + s * ff_int(j, n - a) * ((-1) ** (a + j) * comb(n, a))
    return stirling(n, j) == acc


def _chk_alternating_shift(p, b, rng):
    return fam.alternating_shift_check(*p)


def _chk_s_recurrence(p, b, rng):
    return fam.s_family_recurrence_check(*p)


def _chk_s_closed_form(p, b, rng):
    return fam.s_closed_form_a_check(*p)


def _chk_hockey_stick(p, b, rng):
    n, r = p
    ok = fam.hockey_stick_degenerate_check(n, r) and fam.hockey_stick_x_eq_n_check(n, r)
    if r == 0:
        ok = ok and fam.hockey_stick_r0_check(n)
    return ok


def _chk_s_closed_form_alt(p, b, rng):
    return fam.s_closed_form_b_check(*p)


def _chk_shifted_family(p, b, rng):
    n, q = p
    pairs = list(zip(_samples(b, rng, distinct=False), _samples(b, rng, distinct=False)))
    return fam.shifted_family_check(n, q, pairs)


def _chk_k_family(p, b, rng):
    (r,) = p
    return fam.k_family_formal_check(r, b.order)


def _chk_trig_sums(p, b, rng):
    r, x, lam = p
    cos_p, sin_p, cos_c, sin_c = fam.trig_sums_numeric(r, x, lam, 200)
    return abs(cos_p - cos_c) < TRIG_TOL and abs(sin_p - sin_c) < TRIG_TOL


def _chk_snr_expansion(p, b, rng):
    return fam.snr_expansion_check(*p)


def _chk_power_sum_neg_lambda(p, b, rng):
    return fam.power_sum_negative_lambda_check(*p)


def _chk_power_sum_bridge(p, b, rng):
    return fam.power_sum_bridge_check(*p)


def _chk_t_closed_form(p, b, rng):
    return fam.t_closed_form_check(*p) and fam.t_at_one_check(*p)


@lru_cache(maxsize=None)
def _bern_series(alpha: Fraction, n_max: int):
    return bernoulli_series(alpha, n_max)


def _chk_bernoulli_routes(p, b, rng):
    alpha, n = p
    return bernoulli_closed_form(alpha, n) == _bern_series(alpha, b.n_max)[n]


def _chk_bern_classical(p, b, rng):
    (alpha,) = p
    values = _bern_series(alpha, b.n_max).evaluate(0)
    return values == classical_bernoulli_order(alpha, b.n_max)


def _chk_geometric_theta(p, b, rng):
    (n,) = p
    if not fam.geometric_theta_check(n, b.order):
        return False
    return all(fam.snr_operator_check(n, r) for r in range((b.r_max or 0) + 1))


def _chk_t_operator(p, b, rng):
    return fam.t_shift_operator_check(*p)


def _chk_classical(p, b, rng):
    (n,) = p
    classical = classical_triangle(n)[n]
    return [e(0) for e in triangle_recurrence(b.n_max).row(n)] == classical


def _alpha_params(b):
    out = []
    for a in sorted(Fraction(x) for x in b.alphas):
        for n in range(b.n_max + 1):
            if any(a + j == 0 for j in range(n + 1)):
                break
            out.append((a, n))
    return out


def _case(id, anchor, domain, params, check, needs=("n_max",)):
    return IdentityCase(id, anchor, domain, params, check, needs)


REGISTRY = (
    _case("lemma-1.1a", "(-x)_{n,l} = (-1)^n (x)_{n,-l}", "n <= n_max", _upto, _chk_neg_argument),
    _case("lemma-1.1b", "C(x,n) = (-1)^n C(n-x-1,n)", "n <= n_max", _upto, _chk_binom_negation),
    _case("lemma-1.1c", "C(x+y,n) = sum_k C(x,k) C(y,n-k)", "n <= n_max; y sampled",
          _upto, _chk_vandermonde, ("n_max", "sample_points")),
    _case("lemma-1.1d", "(x+y)_{n,l} = sum_k C(n,k) (x)_{k,l} (y)_{n-k,l}", "n <= n_max; y sampled",
          _upto, _chk_deg_binomial_theorem, ("n_max", "sample_points")),
    _case("lemma-1.1e", "sum_k (-1)^k C(x,k) = (-1)^n C(x-1,n)", "n <= n_max", _upto, _chk_alternating_partial_sum),
    _case("eq-4", "(x)_{n,l} = sum_k {n k}_l (x)_k", "n <= n_max", _upto, _chk_falling_basis),
    _case("eq-5", "(e_l(t)-1)^k / k! = sum_n {n k}_l t^n/n!", "k <= n <= n_max", _nk_triangle, _chk_egf_extraction),
    _case("eq-6", "{n k}_l = (1/k!) sum_j C(k,j) (-1)^(k-j) (j)_{n,l}", "k <= n <= n_max",
          _nk_triangle, _chk_euler_sum),
    _case("eq-7", "{n+1 k}_l = {n k-1}_l + (k - n l) {n k}_l", "n <= n_max", _upto, _chk_recurrence_vs_basis),
    _case("triangles", "recurrence = Euler sum = EGF extraction", "k <= n <= n_max",
          _nk_triangle, _chk_triangles),
    _case("eq-24", "C(r+a,r) {n r+a}_l = sum_k C(n,k) {k r}_l {n-k a}_l", "r,a >= 1, r+a <= n <= n_max",
          lambda b: [(n, r, a) for n in range(b.n_max + 1) for r in range(1, n) for a in range(1, n - r + 1)],
          _chk_convolution),
    _case("eq-55", "(e_l(x)-1)^n = sum_j n! {j n}_l x^j/j!", "n <= n_max; series order",
          _upto, _chk_egf_power, ("n_max", "order")),
    _case("eq-56", "((e_l(x)-1)/x)^n = sum_j {j+n n}_l / C(j+n,n) x^j/j!", "n <= n_max; series order",
          _upto, _chk_ratio_power, ("n_max", "order")),
    _case("eq-57", "D^n ((e_l(x)-1)/x)^j |_0 = {n+j j}_l / C(n+j,j)", "j <= n_max, n <= order",
          lambda b: [(j, n) for j in range(b.n_max + 1) for n in range(b.order + 1)],
          _chk_ratio_derivative, ("n_max", "order")),
    _case("eq-60", "sum_j C(k,j) (-1)^j (j)_{n,l} = (-1)^k k! {n k}_l", "n, k <= n_max",
          lambda b: [(n, k) for n in range(b.n_max + 1) for k in range(b.n_max + 1)], _chk_alternating_falling_sum),
    _case("remark", "{n n-1}_l = (1-l) C(n,2); {n n-2}_l = (1-l)(3n-5-l(3n-1)) n(n-1)(n-2)/24",
          "1 <= n <= n_max", lambda b: [(n,) for n in range(1, b.n_max + 1)], _chk_remark),
    _case("thm-2.1", "{n a}_l = sum_{k=1}^a (a-k+1 - l(n-k)) {n-k a-k+1}_l", "1 <= a < n <= n_max",
          lambda b: [(n, a) for n in range(b.n_max + 1) for a in range(1, n)], _chk_column_recurrence),
    _case("thm-2.2", "a! {n a}_{-l} = sum_j (-1)^(n-j) j! {n j}_l C(j-1, j-a)", "1 <= a <= n <= n_max",
          lambda b: [(n, a) for n in range(b.n_max + 1) for a in range(1, n + 1)], _chk_negated_lambda_sum),
    _case("thm-2.3", "sum_j {n j}_l j! C((n-1)l, j-a) = a! {n a}_{-l}", "1 <= a <= n <= n_max",
          lambda b: [(n, a) for n in range(b.n_max + 1) for a in range(1, n + 1)], _chk_negated_lambda_binom),
    _case("thm-2.4", "(1/n!) D^n_{x,h} (x)_{p,l} = sum_r C(p,r) (x)_{p-r,l} h^(r-n) {r n}_{l/h}",
          "n, p <= min(n_max, 8); h in {1, 2, 1/2, -1/3}",
          lambda b: [(n, q, h) for n in range(min(b.n_max, 8) + 1) for q in range(min(b.n_max, 8) + 1)
                     for h in sorted(STEP_SIZES)], _chk_difference_operator),
    _case("thm-2.5", "{n j}_l = sum_a C(n,a) (-1)^(a+j) {a j}_{-l} (j)_{n-a,l}", "j <= n <= n_max",
          _nk_triangle, _chk_lambda_inversion),
    _case("thm-2.6", "sum_j (-1)^j C(n,j) (z-j)_{n+a,l} = sum_r C(z-n,r) (n+r)! {n+a r+n}_l",
          "1 <= n, a <= min(n_max, 8)",
          lambda b: [(n, a) for n in range(1, min(b.n_max, 8) + 1) for a in range(1, min(b.n_max, 8) + 1)],
          _chk_alternating_shift),
    _case("thm-2.7", "S_n(x,r) = -x sum_j C(r-1,j) (1-l)_{r-1-j,l} S_{n-1}(x-1,j)",
          "1 <= n <= n_max, 1 <= r <= r_max", lambda b: _nr(b, 1, 1), _chk_s_recurrence, ("n_max", "r_max")),
    _case("thm-2.8", "S_n(x,r) = (-1)^n sum_j C(x,j) C(x-j-1,n-j) j! {r j}_l",
          "n <= n_max, r <= r_max", _nr, _chk_s_closed_form, ("n_max", "r_max")),
    _case("thm-2.10", "sum_k C(x+k,k) (k)_{r,l} = sum_j C(x+j,j) C(x+n+1,n-j) j! {r j}_l",
          "n <= n_max, r <= r_max", _nr, _chk_hockey_stick, ("n_max", "r_max")),
    _case("cor-2.11", "S_n(x,r) = sum_j (-1)^j C(n-x,n-j) C(x,j) j! {r j}_l",
          "n <= n_max, r <= r_max", _nr, _chk_s_closed_form_alt, ("n_max", "r_max")),
    _case("cor-2.12", "sum_k (-1)^k C(x,k) (z+yk)_{p,l} = sum_r C(p,r) (z)_{p-r,l} y^r S-form with {r j}_{l/y}",
          "n <= n_max, p <= r_max; (z, y) sampled", _nr, _chk_shifted_family, ("n_max", "r_max", "sample_points")),
    _case("thm-2.13", "K_r(x) = e^x sum_j {r j}_l x^j; K_{r+1} = x sum_j C(r,j) K_j (1-l)_{r-j,l}",
          "r <= r_max; series order", lambda b: [(r,) for r in range(b.r_max + 1)], _chk_k_family,
          ("r_max", "order")),
    _case("thm-2.14", "sum_k (k)_{r,l}/k! cos kx, sin kx closed forms (|err| < 1e-9)",
          "r <= min(r_max, 5); x in {0.3, 0.7, 1.5, pi/2}; l in {1/3, -1/2}",
          lambda b: [(r, x, lam) for r in range(min(b.r_max, 5) + 1) for x in TRIG_POINTS
                     for lam in sorted(TRIG_LAMBDAS)], _chk_trig_sums, ("r_max",)),
    _case("thm-2.15", "sum_k (k)_{r,l} x^k = sum_j j! {r j}_l sum_k C(k,j) x^k", "n <= n_max, r <= r_max",
          _nr, _chk_snr_expansion, ("n_max", "r_max")),
    _case("thm-2.16", "sum_k (k)_{r,l} = sum_j (-1)^(r-j) j! {r j}_{-l} C(n+j,j+1)",
          "n <= n_max, 1 <= r <= r_max", lambda b: _nr(b, 0, 1), _chk_power_sum_neg_lambda, ("n_max", "r_max")),
    _case("cor-2.17", "sum_j j! {r j}_l C(n+1,j+1) = sum_j (-1)^(r-j) j! {r j}_{-l} C(n+j,j+1)",
          "n <= n_max, 1 <= r <= r_max", lambda b: _nr(b, 0, 1), _chk_power_sum_bridge, ("n_max", "r_max")),
    _case("thm-2.18", "T_n(x,r) = (1+x)^n sum_j (-1)^j C(n,j) (x/(1+x))^j sum_k (-1)^k C(j,k) (k)_{r,l}",
          "n <= n_max, r <= r_max", _nr, _chk_t_closed_form, ("n_max", "r_max")),
    _case("thm-2.19", "beta^(a)_{n,l} = a C(a+n,n) sum_j (-1)^j C(n,j) {n+j j}_l / ((a+j) C(n+j,n))",
          "a in alphas, n <= n_max", _alpha_params, _chk_bernoulli_routes, ("n_max", "alphas")),
    _case("bernoulli-classical", "beta^(a)_{n,0} = B^(a)_n", "a in alphas, n <= n_max",
          lambda b: [(a,) for a in sorted(Fraction(x) for x in b.alphas)], _chk_bern_classical,
          ("n_max", "alphas")),
    _case("pre-45", "sum_k (k)_{n,l} x^k = (x d/dx)_{n,l} 1/(1-x); S_{n,r} = (x d/dx)_{r,l} sum_k x^k",
          "n <= n_max; series order", _upto, _chk_geometric_theta, ("n_max", "order")),
    _case("pre-51", "(x d/dx - r l)_{p,l} T_n(x,r) = T_n(x,r+p)", "n, r, p <= min(n_max, 6)",
          lambda b: [(n, r, q) for n in range(min(b.n_max, 6) + 1) for r in range(min(b.n_max, 6) + 1)
                     for q in range(min(b.n_max, 6) + 1)], _chk_t_operator),
    _case("classical-limit", "{n k}_0 = {n k}", "n <= n_max", _upto, _chk_classical),
)

CASE_IDS = tuple(c.id for c in REGISTRY)
_BY_ID = {c.id: c for c in REGISTRY}


def get_case(case_id: str) -> IdentityCase:
    try:
        return _BY_ID[case_id]
    except KeyError:
        raise KeyError(f"unknown identity case {case_id!r}") from None


def run_case(case: IdentityCase, bounds: Bounds, seed: int = DEFAULT_SEED) -> CaseResult:
    missing = [f for f in case.needs if getattr(bounds, f) is None]
    if missing:
        return CaseResult(case.id, case.anchor, "skipped", reason="unset bounds: " + ", ".join(missing))
    t0 = time.perf_counter()
    params = sorted(case.params(bounds))
    checked = 0
    for p in params:
        try:
            ok = case.check(p, bounds, case_rng(seed, case.id, p))
        except Exception as exc:  # a crash inside a check is a failure at that tuple
            res = CaseResult(case.id, case.anchor, "fail", p, reason=f"{type(exc).__name__}: {exc}")
            res.millis, res.checked = (time.perf_counter() - t0) * 1000, checked + 1
            return res
        checked += 1
        if not ok:
            return CaseResult(case.id, case.anchor, "fail", p, (time.perf_counter() - t0) * 1000, checked=checked)
    return CaseResult(case.id, case.anchor, "pass", millis=(time.perf_counter() - t0) * 1000, checked=checked)


def _run_by_id(args):
    case_id, bounds, seed = args
    return run_case(get_case(case_id), bounds, seed)


def run_suite(bounds: Bounds | None = None, seed: int = DEFAULT_SEED, only=None, workers: int = 1) -> Report:
    """Run the registry (or the ids in ``only``) and return a :class:`Report` in registry order."""
    if bounds is None:
        bounds = Bounds()
    if only:
        cases = [get_case(i) for i in only]
    else:
        cases = list(REGISTRY)
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_by_id, [(c.id, bounds, seed) for c in cases]))
    else:
        results = [run_case(c, bounds, seed) for c in cases]
    return Report(bounds, seed, results)


def emit_report(report: Report, fmt: str = "json", timings: bool = False) -> str:
    """Serialize a report.  Timings are opt-in so that plain output is byte-stable."""
    if fmt == "json":
        return json.dumps(report.to_dict(timings), indent=2) + "\n"
    if fmt == "markdown":
        b = report.bounds.to_dict()
        lines = [
            f"bounds: {', '.join(f'{k}={v}' for k, v in b.items())}; seed: {report.seed}",
            "",
            "| id | status | checked | counterexample |" + (" ms |" if timings else ""),
            "|---|---|---|---|" + ("---|" if timings else ""),
        ]
        for c in report.cases:
            cx = "" if c.counterexample is None else "(" + ", ".join(str(_param_json(p)) for p in c.counterexample) + ")"
            if c.status == "skipped":
                cx = c.reason or ""
            row = f"| {c.id} | {c.status} | {c.checked} | {cx} |"
            if timings:
                row += f" {c.millis:.1f} |"
            lines.append(row)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
