"""Polynomial families built on degenerate falling factorials, and the identities they satisfy.

* ``S``:        ``S_n(x, r) = sum_{k<=n} (-1)^k C(x, k) (k)_{r,l}``
* ``Snr``:      ``S_{n,r}(x) = sum_{k<=n} (k)_{r,l} x^k``
* ``T``:        ``T_n(x, r) = sum_{k<=n} C(n, k) x^k (k)_{r,l}``
* ``BellLike``: ``B_r(x) = sum_j {r j}_l x^j``, with ``K_r(x) = e^x B_r(x)``

Every ``*_check`` function returns a bool computed by exact polynomial or
series equality, except :func:`trig_sums_numeric` which works in doubles.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .rings import BivarPoly, LambdaPoly, binomial_poly, format_rational
from .series import TruncSeries, exp_series, series_invert, series_pow
from .stirling import deg_falling_factorial, ff_int, ff_symbolic, stirling

FAMILIES = ("S", "Snr", "T", "BellLike")

X = BivarPoly.x()
LAM = LambdaPoly.lam()


@lru_cache(maxsize=None)
def binom_linear(a: Fraction, b: Fraction, k: int) -> BivarPoly:
    """``C(a x + b, k)`` as a BivarPoly (zero for ``k < 0``)."""
    return binomial_poly(X * a + b, k)


def binom_x(k: int, shift=0, scale=1) -> BivarPoly:
    return binom_linear(Fraction(scale), Fraction(shift), k)


@dataclass(frozen=True)
class FamilyPoly:
    family: str
    n: int
    r: int
    value: BivarPoly

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "r": self.r, "value": self.value.to_json()}


@lru_cache(maxsize=None)
def s_family(n: int, r: int) -> BivarPoly:
    acc = BivarPoly.zero()
    for k in range(n + 1):
        term = binom_x(k) * ff_int(k, r)
        acc = acc - term if k % 2 else acc + term
    return acc


@lru_cache(maxsize=None)
def snr_family(n: int, r: int) -> BivarPoly:
    return BivarPoly([ff_int(k, r) for k in range(n + 1)])


@lru_cache(maxsize=None)
def t_family(n: int, r: int) -> BivarPoly:
    return BivarPoly([ff_int(k, r) * comb(n, k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def bell_like(r: int) -> BivarPoly:
    return BivarPoly([stirling(r, j) for j in range(r + 1)])


def family_build(family: str, n: int, r: int) -> FamilyPoly:
    if n < 0 or r < 0:
        raise ValueError("n and r must be >= 0")
    if family == "S":
        value = s_family(n, r)
    elif family == "Snr":
        value = snr_family(n, r)
    elif family == "T":
        value = t_family(n, r)
    elif family == "BellLike":
        value = bell_like(r)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return FamilyPoly(family, n, r, value)


# ---- S_n(x, r) ---------------------------------------------------------------


def s_family_recurrence_check(n: int, r: int) -> bool:
    """``S_n(x,r) = -x sum_j C(r-1,j) (1-l)_{r-1-j,l} S_{n-1}(x-1, j)``."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    one_minus_lam = 1 - LAM
    acc = BivarPoly.zero()
    for j in range(r):
        w = deg_falling_factorial(r - 1 - j, one_minus_lam) * comb(r - 1, j)
        acc = acc + s_family(n - 1, j).shift(-1) * w
    return s_family(n, r) == -(X * acc)


def s_closed_form_a_check(n: int, r: int) -> bool:
    """``S_n(x,r) = (-1)^n sum_j C(x,j) C(x-j-1, n-j) j! {r j}_l``."""
    rhs = BivarPoly.zero()
    for j in range(r + 1):
        s = stirling(r, j) * factorial(j)
        if s:
            rhs = rhs + binom_x(j) * binom_x(n - j, shift=-j - 1) * s
    return s_family(n, r) == (-rhs if n % 2 else rhs)


def s_closed_form_b_check(n: int, r: int) -> bool:
    """``S_n(x,r) = sum_j (-1)^j C(n-x, n-j) C(x,j) j! {r j}_l``."""
    rhs = BivarPoly.zero()
    for j in range(r + 1):
        s = stirling(r, j) * factorial(j)
        if s:
            term = binom_x(n - j, shift=n, scale=-1) * binom_x(j) * s
            rhs = rhs - term if j % 2 else rhs + term
    return s_family(n, r) == rhs


def s_closed_form_checks(n: int, r: int) -> bool:
    """Both closed forms of ``S_n(x, r)``."""
    return s_closed_form_a_check(n, r) and s_closed_form_b_check(n, r)


def hockey_stick_degenerate_check(n: int, r: int) -> bool:
    """``sum_k C(x+k, k) (k)_{r,l}`` against both right-hand forms (with ``{r j}`` and with the Euler sum)."""
    lhs = BivarPoly.zero()
    for k in range(n + 1):
        lhs = lhs + binom_x(k, shift=k) * ff_int(k, r)
    rhs = BivarPoly.zero()
    rhs_euler = BivarPoly.zero()
    for j in range(r + 1):
        outer = binom_x(j, shift=j) * binom_x(n - j, shift=n + 1)
        rhs = rhs + outer * (stirling(r, j) * factorial(j))
        euler = LambdaPoly.zero()
        for k in range(j + 1):
            term = ff_int(k, r) * comb(j, k)
            euler = euler + term if (j - k) % 2 == 0 else euler - term
        rhs_euler = rhs_euler + outer * euler
    return lhs == rhs and lhs == rhs_euler


def hockey_stick_r0_check(n: int) -> bool:
    lhs = BivarPoly.zero()
    for k in range(n + 1):
        lhs = lhs + binom_x(k, shift=k)
    return lhs == binom_x(n, shift=n + 1)


def hockey_stick_x_eq_n_check(n: int, r: int) -> bool:
    """The ``x = n`` specialization, with ``C(2n+1, n-j)``."""
    lhs = LambdaPoly.zero()
    for k in range(n + 1):
        lhs = lhs + ff_int(k, r) * comb(n + k, k)
    rhs = LambdaPoly.zero()
    for j in range(min(r, n) + 1):
        rhs = rhs + stirling(r, j) * (comb(n + j, j) * comb(2 * n + 1, n - j) * factorial(j))
    return lhs == rhs


def shifted_family_check(n: int, p: int, pairs) -> bool:
    """``sum_k (-1)^k C(x,k) (z + y k)_{p,l}`` against the nested closed form with ``{r j}_{l/y}``.

    ``x`` stays symbolic; ``(z, y)`` ranges over the given rational pairs.
    """
    for z, y in pairs:
        z, y = Fraction(z), Fraction(y)
        if not y:
            raise ValueError("y must be nonzero")
        lhs = BivarPoly.zero()
        for k in range(n + 1):
            term = binom_x(k) * deg_falling_factorial(p, z + y * k)
            lhs = lhs - term if k % 2 else lhs + term
        rhs = BivarPoly.zero()
        for r in range(p + 1):
            inner = BivarPoly.zero()
            for j in range(r + 1):
                s = stirling(r, j, lam_scale=1 / y) * factorial(j)
                if not s:
                    continue
                term = binom_x(n - j, shift=n, scale=-1) * binom_x(j) * s
                inner = inner - term if j % 2 else inner + term
            w = deg_falling_factorial(p - r, z) * (comb(p, r) * y**r)
            rhs = rhs + inner * w
        if lhs != rhs:
            return False
    return True


# ---- difference operator -----------------------------------------------------


def difference_operator(f: BivarPoly, h, iterations: int = 1) -> BivarPoly:
    """Iterated ``(f(x+h) - f(x)) / h``."""
    h = Fraction(h)
    if not h:
        raise ValueError("step h must be nonzero")
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    for _ in range(iterations):
        f = (f.shift(h) - f) / h
    return f


def difference_binomial_form(f: BivarPoly, h, n: int) -> BivarPoly:
    """``h^-n sum_k C(n,k) (-1)^(n-k) f(x + k h)``."""
    h = Fraction(h)
    if not h:
        raise ValueError("step h must be nonzero")
    acc = BivarPoly.zero()
    for k in range(n + 1):
        term = f.shift(h * k) * comb(n, k)
        acc = acc + term if (n - k) % 2 == 0 else acc - term
    return acc / h**n


def difference_falling_check(n: int, p: int, h) -> bool:
    """``(1/n!) D^n_{x,h} (x)_{p,l} = sum_r C(p,r) (x)_{p-r,l} h^(r-n) {r n}_{l/h}``; also
    checks the iterated operator against the binomial form."""
    h = Fraction(h)
    f = ff_symbolic(p)
    iterated = difference_operator(f, h, n)
    if iterated != difference_binomial_form(f, h, n):
        return False
    rhs = BivarPoly.zero()
    for r in range(n, p + 1):
        s = stirling(r, n, lam_scale=1 / h)
        rhs = rhs + ff_symbolic(p - r) * (s * (comb(p, r) * h ** (r - n)))
    return iterated / factorial(n) == rhs


# ---- Euler operator x d/dx ---------------------------------------------------


def theta_factorial_apply(f: BivarPoly, r: int, shift=0) -> BivarPoly:
    """Apply ``(x d/dx - shift)_{r,l}``; it scales ``x^k`` by ``(k - shift)_{r,l}``."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return f
    shift = shift if isinstance(shift, LambdaPoly) else LambdaPoly.const(shift)
    return BivarPoly([c * deg_falling_factorial(r, k - shift) for k, c in enumerate(f.coeffs)])


def t_shift_operator_check(n: int, r: int, p: int) -> bool:
    """``(x d/dx - r l)_{p,l} T_n(x, r) = T_n(x, r + p)``."""
    return theta_factorial_apply(t_family(n, r), p, LAM * r) == t_family(n, r + p)


def snr_operator_check(n: int, r: int) -> bool:
    """``S_{n,r}(x) = (x d/dx)_{r,l} sum_{k<=n} x^k``."""
    geometric = BivarPoly([1] * (n + 1))
    return theta_factorial_apply(geometric, r) == snr_family(n, r)


def geometric_theta_check(n: int, order: int) -> bool:
    """``sum_k (k)_{n,l} x^k = sum_j {n j}_l j! x^j (1 - x)^-(j+1)`` as series in x to ``order``."""
    lhs = TruncSeries([ff_int(k, n) for k in range(order + 1)], order, LambdaPoly)
    inv = series_invert(TruncSeries([1, -1], order, LambdaPoly))
    rhs = TruncSeries.constant(0, order, LambdaPoly)
    for j in range(n + 1):
        s = stirling(n, j) * factorial(j)
        if not s or j > order:
            continue
        term = series_pow(inv, j + 1)
        term = TruncSeries([0] * j + list(term.coeffs), order, LambdaPoly)
        rhs = rhs + term * s
    return lhs == rhs


# ---- S_{n,r}(x) ---------------------------------------------------------------


def snr_expansion_check(n: int, r: int) -> bool:
    """``S_{n,r}(x) = sum_j j! {r j}_l sum_k C(k,j) x^k`` and its ``x = 1`` value
    ``sum_j j! C(n+1, j+1) {r j}_l``."""
    lhs = snr_family(n, r)
    expansion = BivarPoly.zero()
    for j in range(r + 1):
        s = stirling(r, j) * factorial(j)
        if s:
            expansion = expansion + BivarPoly([comb(k, j) for k in range(n + 1)]) * s
    if lhs != expansion:
        return False
    via_binom = LambdaPoly.zero()
    for j in range(r + 1):
        via_binom = via_binom + stirling(r, j) * (factorial(j) * comb(n + 1, j + 1))
    return lhs.subs_x(1) == via_binom


def power_sum_negative_lambda_check(n: int, r: int) -> bool:
    """``sum_{k<=n} (k)_{r,l} = sum_j (-1)^(r-j) j! {r j}_{-l} C(n+j, j+1)`` for ``r >= 1``."""
    if r < 1:
        raise ValueError("need r >= 1")
    lhs = snr_family(n, r).subs_x(1)
    rhs = LambdaPoly.zero()
    for j in range(r + 1):
        s = stirling(r, j, lam_scale=-1) * ((-1) ** (r - j) * factorial(j))
        rhs = rhs + s * comb(n + j, j + 1)
    return lhs == rhs


def snr_identities_check(n: int, r: int) -> bool:
    """The ``S_{n,r}`` expansion, its power-sum value, the ``{r j}_{-l}`` form and the bridge between them."""
    if not snr_expansion_check(n, r):
        return False
    if r >= 1:
        return power_sum_negative_lambda_check(n, r) and power_sum_bridge_check(n, r)
    return True


def power_sum_bridge_check(n: int, r: int, rhs_upper: str = "n+j") -> bool:
    """``sum_j j! {r j}_l C(n+1, j+1) = sum_j (-1)^(r-j) j! {r j}_{-l} C(n+j, j+1)``.

    Both sides are the power sum ``sum_{k<=n} (k)_{r,l}``.  ``rhs_upper="n+1"``
    swaps in ``C(n+1, j+1)`` on the right, a variant that is false already at
    ``(n, r) = (1, 2)``.
    """
    if rhs_upper not in ("n+j", "n+1"):
        raise ValueError(f"rhs_upper must be 'n+j' or 'n+1', got {rhs_upper!r}")
    if r < 1:
        raise ValueError("need r >= 1")
    lhs = LambdaPoly.zero()
    rhs = LambdaPoly.zero()
    for j in range(r + 1):
        lhs = lhs + stirling(r, j) * (factorial(j) * comb(n + 1, j + 1))
        b = comb(n + 1, j + 1) if rhs_upper == "n+1" else comb(n + j, j + 1)
        rhs = rhs + stirling(r, j, lam_scale=-1) * ((-1) ** (r - j) * factorial(j) * b)
    return lhs == rhs


# ---- T_n(x, r) ---------------------------------------------------------------


def _euler_alternating(j: int, r: int) -> LambdaPoly:
    """``sum_k (-1)^k C(j,k) (k)_{r,l}``."""
    acc = LambdaPoly.zero()
    for k in range(j + 1):
        term = ff_int(k, r) * comb(j, k)
        acc = acc - term if k % 2 else acc + term
    return acc


def t_closed_form_check(n: int, r: int) -> bool:
    """``T_n(x,r) (1+x)^r = (1+x)^n sum_j (-1)^j C(n,j) x^j (1+x)^(r-j) c_j``,
    with ``c_j = sum_k (-1)^k C(j,k) (k)_{r,l}``: the closed form with
    denominators cleared."""
    one_plus_x = X + 1
    lhs = t_family(n, r) * one_plus_x**r
    acc = BivarPoly.zero()
    for j in range(r + 1):
        w = _euler_alternating(j, r) * ((-1) ** j * comb(n, j))
        if w:
            acc = acc + X**j * one_plus_x ** (r - j) * w
    return lhs == acc * one_plus_x**n


def t_at_one_check(n: int, r: int) -> bool:
    """``T_n(1, r) = 2^n sum_j (-1)^j C(n,j) / 2^j c_j``."""
    lhs = t_family(n, r).subs_x(1)
    rhs = LambdaPoly.zero()
    for j in range(r + 1):
        rhs = rhs + _euler_alternating(j, r) * Fraction((-1) ** j * comb(n, j), 2**j)
    return lhs == rhs * 2**n


# ---- K_r(x) ------------------------------------------------------------------


def k_series(r: int, order: int) -> TruncSeries:
    """``K_r(x) = sum_m (m)_{r,l} x^m / m!`` to ``order``."""
    return TruncSeries([ff_int(m, r) * Fraction(1, factorial(m)) for m in range(order + 1)], order, LambdaPoly)


def k_family_formal_check(r: int, order: int) -> bool:
    """``e^-x K_r(x) = B_r(x)`` and the ``K_{r+1}`` recurrence, as series in x."""
    e_neg = exp_series(order, -1).lift(LambdaPoly)
    bell = TruncSeries(bell_like(r).coeffs, order, LambdaPoly)
    if e_neg * k_series(r, order) != bell:
        return False
    one_minus_lam = 1 - LAM
    acc = TruncSeries.constant(0, order, LambdaPoly)
    for j in range(r + 1):
        w = deg_falling_factorial(r - j, one_minus_lam) * comb(r, j)
        acc = acc + k_series(j, order) * w
    return k_series(r + 1, order) == acc.shift_up()


@dataclass(frozen=True)
class KrEvaluation:
    r: int
    x_val: object
    n_terms: int
    partial_sum: object


def k_partial_sum(r: int, x_val, lam_val, n_terms: int) -> KrEvaluation:
    """``sum_{m < n_terms} x^m (m)_{r,l} / m!`` at a rational (exact) or complex (double) ``x``."""
    lam_val = Fraction(lam_val)
    if isinstance(x_val, (int, Fraction)):
        x = Fraction(x_val)
        total = sum(x**m * ff_int(m, r)(lam_val) / factorial(m) for m in range(n_terms))
    else:
        x = complex(x_val)
        total = sum(x**m * (float(ff_int(m, r)(lam_val)) / math.factorial(m)) for m in range(n_terms))
    return KrEvaluation(r, x_val, n_terms, total)


def k_closed_form(r: int, x_val, lam_val):
    """``e^x B_r(x)`` at a complex (double) ``x``."""
    x = complex(x_val)
    lam_val = Fraction(lam_val)
    poly = sum(float(stirling(r, j)(lam_val)) * x**j for j in range(r + 1))
    return cmath.exp(x) * poly


def trig_sums_numeric(r: int, x_val: float, lam_val, n_terms: int = 200):
    """Partial cosine/sine sums of ``(k)_{r,l}/k!`` against their closed forms.

    Returns ``(cos_sum, sin_sum, cos_closed, sin_closed)`` in double precision;
    the Stirling numbers are evaluated exactly at ``lam_val`` first.
    """
    if n_terms < r + 10:
        raise ValueError("n_terms must be at least r + 10")
    lam_val = Fraction(lam_val)
    weights = [ff_int(k, r)(lam_val) / factorial(k) for k in range(n_terms)]
    cos_sum = math.fsum(float(w) * math.cos(k * x_val) for k, w in enumerate(weights))
    sin_sum = math.fsum(float(w) * math.sin(k * x_val) for k, w in enumerate(weights))
    s = [float(stirling(r, j)(lam_val)) for j in range(r + 1)]
    c_sum = math.fsum(sj * math.cos(j * x_val) for j, sj in enumerate(s))
    s_sum = math.fsum(sj * math.sin(j * x_val) for j, sj in enumerate(s))
    pre = math.exp(math.cos(x_val))
    cs, sn = math.cos(math.sin(x_val)), math.sin(math.sin(x_val))
    cos_closed = pre * (cs * c_sum - sn * s_sum)
    sin_closed = pre * (cs * s_sum + sn * c_sum)
    return cos_sum, sin_sum, cos_closed, sin_closed


def trig_record(r: int, x_val: float, lam_val, n_terms: int = 200) -> dict:
    cos_p, sin_p, cos_c, sin_c = trig_sums_numeric(r, x_val, lam_val, n_terms)
    return {
        "r": r,
        "x": x_val,
        "lambda": format_rational(lam_val),
        "cos_partial": cos_p,
        "cos_closed": cos_c,
        "sin_partial": sin_p,
        "sin_closed": sin_c,
        "abs_err": max(abs(cos_p - cos_c), abs(sin_p - sin_c)),
    }


# ---- two-variable identity in z ----------------------------------------------


def alternating_shift_check(n: int, alpha: int) -> bool:
    """``sum_j (-1)^j C(n,j) (z-j)_{n+a,l} = sum_{r<=a} C(z-n, r) (n+r)! {n+a r+n}_l`` in z."""
    f = ff_symbolic(n + alpha)
    lhs = BivarPoly.zero()
    for j in range(n + 1):
        term = f.shift(-j) * comb(n, j)
        lhs = lhs - term if j % 2 else lhs + term
    rhs = BivarPoly.zero()
    for r in range(alpha + 1):
        rhs = rhs + binom_x(r, shift=-n) * (stirling(n + alpha, r + n) * factorial(n + r))
    return lhs == rhs
