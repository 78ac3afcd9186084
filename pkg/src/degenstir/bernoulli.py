"""Degenerate Bernoulli numbers of order alpha.

Two routes to the same ``LambdaPoly`` values:

* ``series``: EGF coefficients of ``(t / (e_l(t) - 1)) ** alpha``
* ``closed-form``: the alternating sum over ``{n+j j}_l / C(n+j, n)``
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .rings import LambdaPoly, binomial_poly, format_rational
from .series import TruncSeries, degenerate_exp, egf_coefficient, exp_series
from .series import series_invert, series_pow
from .stirling import stirling


class BernoulliPole(ValueError):
    """``alpha + j == 0`` for some ``0 <= j <= n`` in the closed form."""


@dataclass(frozen=True)
class BernoulliTable:
    alpha: Fraction
    values: tuple
    route: str

    def __getitem__(self, n: int) -> LambdaPoly:
        return self.values[n]

    def evaluate(self, lam) -> list:
        return [v(Fraction(lam)) for v in self.values]

    def to_dict(self, lam=None) -> dict:
        if lam is None:
            vals = [v.to_json() for v in self.values]
        else:
            vals = [format_rational(v) for v in self.evaluate(lam)]
        return {"alpha": format_rational(self.alpha), "route": self.route, "values": vals}

    def to_json(self, lam=None) -> str:
        return json.dumps(self.to_dict(lam))


def bernoulli_generating_series(alpha, order: int) -> TruncSeries:
    """``(t / (e_l(t) - 1)) ** alpha`` to ``order``."""
    ratio = (degenerate_exp("one", order + 1) - 1).shift_down()
    return series_pow(series_invert(ratio), alpha)


def bernoulli_series(alpha, n_max: int) -> BernoulliTable:
    alpha = Fraction(alpha)
    gen = bernoulli_generating_series(alpha, n_max)
    values = tuple(egf_coefficient(gen, n) for n in range(n_max + 1))
    return BernoulliTable(alpha, values, "series")


def bernoulli_closed_form(alpha, n: int) -> LambdaPoly:
    alpha = Fraction(alpha)
    if n < 0:
        raise ValueError("n must be >= 0")
    for j in range(n + 1):
        if alpha + j == 0:
            raise BernoulliPole(f"alpha = {alpha} hits a pole at j = {j}")
    acc = LambdaPoly.zero()
    for j in range(n + 1):
        w = Fraction((-1) ** j * comb(n, j), comb(n + j, n)) / (alpha + j)
        acc = acc + stirling(n + j, j) * w
    return acc * (alpha * binomial_poly(alpha + n, n))


def bernoulli_closed_form_table(alpha, n_max: int) -> BernoulliTable:
    alpha = Fraction(alpha)
    values = tuple(bernoulli_closed_form(alpha, n) for n in range(n_max + 1))
    return BernoulliTable(alpha, values, "closed-form")


def classical_bernoulli_order(alpha, n_max: int) -> list:
    """``B_n^(alpha)`` over Q from ``(t / (e^t - 1)) ** alpha``; no l anywhere."""
    ratio = (exp_series(n_max + 1) - 1).shift_down()
    gen = series_pow(series_invert(ratio), alpha)
    return [egf_coefficient(gen, n) for n in range(n_max + 1)]
