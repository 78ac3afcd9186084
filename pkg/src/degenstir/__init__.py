"""Exact computation of degenerate Stirling numbers of the second kind, degenerate
Bernoulli numbers of order alpha, and related polynomial families, as
polynomials in the deformation parameter over Q."""
from .bernoulli import (
    BernoulliPole,
    BernoulliTable,
    bernoulli_closed_form,
    bernoulli_closed_form_table,
    bernoulli_series,
    classical_bernoulli_order,
)
from .families import FamilyPoly, family_build, trig_sums_numeric
from .identities import Bounds, emit_report, run_suite
from .rings import BivarPoly, LambdaPoly, Rational, binomial_poly, parse_rational, substitute
from .series import TruncSeries, degenerate_exp, series_invert, series_pow
from .stirling import (
    StirlingTriangle,
    deg_falling_factorial,
    stirling,
    triangle,
    triangle_egf,
    triangle_euler_sum,
    triangle_recurrence,
)

__version__ = "0.1.0"
