"""Truncated formal power series in ``t`` over Q, Q[l] or Q[l][x].

A :class:`TruncSeries` keeps exactly ``order + 1`` coefficients; everything is
exact modulo ``t**(order+1)``.  The coefficient ring is one of ``Fraction``,
:class:`~degenstir.rings.LambdaPoly` or :class:`~degenstir.rings.BivarPoly`
and is uniform across a series (scalars are lifted on construction).
"""
from __future__ import annotations

import os
from fractions import Fraction

from .rings import BivarPoly, LambdaPoly, binomial_poly, to_json_value
from .rings import parse_rational

DEFAULT_ORDER = 32


def default_order() -> int:
    """Library default truncation order; ``DEGENSTIR_ORDER`` overrides."""
    env = os.environ.get("DEGENSTIR_ORDER")
    return int(env) if env else DEFAULT_ORDER


class SeriesMismatch(ValueError):
    """Operands differ in truncation order or coefficient ring."""


class NotInvertible(ArithmeticError):
    """Constant term is not a unit of the coefficient ring."""


class ConstantTermError(ValueError):
    """A real power was requested of a series whose constant term is not 1."""


_RANKS = {Fraction: 0, LambdaPoly: 1, BivarPoly: 2}


def _ring_of(c):
    if isinstance(c, (int, Fraction)):
        return Fraction
    if isinstance(c, LambdaPoly):
        return LambdaPoly
    if isinstance(c, BivarPoly):
        return BivarPoly
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _lift(ring, c):
    if ring is Fraction:
        return Fraction(c)
    if isinstance(c, ring):
        return c
    return ring.const(c)


def _zero(ring):
    return Fraction(0) if ring is Fraction else ring.zero()


class TruncSeries:
    """``sum_i coeffs[i] t^i  (mod t^(order+1))``."""

    __slots__ = ("coeffs", "order", "ring")

    def __init__(self, coeffs, order: int, ring=None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = list(coeffs)[: order + 1]
        if ring is None:
            ring = Fraction
            for c in coeffs:
                r = _ring_of(c)
                if _RANKS[r] > _RANKS[ring]:
                    ring = r
        coeffs = [_lift(ring, c) for c in coeffs]
        coeffs += [_zero(ring)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.ring = ring

    @classmethod
    def constant(cls, c, order: int, ring=None) -> TruncSeries:
        return cls([c], order, ring)

    @classmethod
    def t(cls, order: int, ring=Fraction) -> TruncSeries:
        return cls([0, 1], order, ring)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return self.order + 1

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order + 1`` for the zero series)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def _check(self, other: TruncSeries):
        if other.order != self.order:
            raise SeriesMismatch(f"order {self.order} vs {other.order}")
        if other.ring is not self.ring:
            raise SeriesMismatch(f"ring {self.ring.__name__} vs {other.ring.__name__}")

    def _wrap(self, coeffs) -> TruncSeries:
        s = object.__new__(TruncSeries)
        s.coeffs, s.order, s.ring = tuple(coeffs), self.order, self.ring
        return s

    def lift(self, ring) -> TruncSeries:
        """Same series viewed over a larger coefficient ring."""
        if _RANKS[ring] < _RANKS[self.ring]:
            raise SeriesMismatch(f"cannot lower {self.ring.__name__} to {ring.__name__}")
        return TruncSeries(self.coeffs, self.order, ring)

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("can only truncate to a lower order")
        return TruncSeries(self.coeffs[: order + 1], order, self.ring)

    # ---- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries.constant(other, self.order, self.ring)
        self._check(other)
        return self._wrap(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-a for a in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.constant(other, self.order, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            if isinstance(other, (int, Fraction, LambdaPoly, BivarPoly)):
                return self._wrap(a * other for a in self.coeffs)
            return NotImplemented
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        va, vb = self.valuation(), other.valuation()
        out = [_zero(self.ring)] * (n + 1)
        # schoolbook convolution, skipping the known-zero prefix of each factor
        for i in range(va, n + 1 - vb):
            ai = a[i]
            if not ai:
                continue
            for j in range(vb, n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return self._wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, TruncSeries):
            return self * series_invert(other)
        return NotImplemented

    def __pow__(self, k: int):
        """Repeated multiplication; integer ``k >= 0`` only (see :func:`series_pow`)."""
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = TruncSeries.constant(1, self.order, self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def shift_down(self) -> TruncSeries:
        """Divide by ``t``; the constant term must vanish.  The top coefficient becomes unknown,
        so the result has order ``order - 1``."""
        if self.coeffs[0]:
            raise ValueError("series has a nonzero constant term")
        return TruncSeries(self.coeffs[1:], self.order - 1, self.ring)

    def shift_up(self) -> TruncSeries:
        """Multiply by ``t`` (same order, top coefficient dropped)."""
        return self._wrap((_zero(self.ring),) + self.coeffs[:-1])

    def map(self, fn) -> TruncSeries:
        return TruncSeries((fn(c) for c in self.coeffs), self.order)

    def egf_coefficient(self, n: int):
        return egf_coefficient(self, n)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{body}], order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [to_json_value(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, ring=Fraction) -> TruncSeries:
        if ring is Fraction:
            coeffs = [parse_rational(c) for c in data["coeffs"]]
        else:
            coeffs = [ring.from_json(c) for c in data["coeffs"]]
        return cls(coeffs, data["order"], ring)


def _factorial(n: int) -> int:
    f = 1
    for i in range(2, n + 1):
        f *= i
    return f


def degenerate_exp(x="one", order: int | None = None) -> TruncSeries:
    """``e_l^x(t) = sum_k (x)_{k,l} t^k / k!`` truncated at ``order``.

    ``x`` is ``"one"`` (the series ``e_l(t)``), ``"x"`` for a symbolic
    indeterminate (BivarPoly coefficients), or a rational / LambdaPoly value.
    """
    if order is None:
        order = default_order()
    lam = LambdaPoly.lam()
    if isinstance(x, str):
        if x == "one":
            base = LambdaPoly.one()
        elif x in ("x", "symbolic", "symbolic-x"):
            base = BivarPoly.x()
        else:
            raise ValueError(f"unknown x mode {x!r}")
    elif isinstance(x, (int, Fraction)):
        base = LambdaPoly.const(x)
    else:
        base = x
    coeffs = []
    ff = base.one() if isinstance(base, BivarPoly) else LambdaPoly.one()
    fact = 1
    for k in range(order + 1):
        if k:
            ff = ff * (base - (k - 1) * lam)
            fact *= k
        coeffs.append(ff * Fraction(1, fact))
    return TruncSeries(coeffs, order)


def exp_series(order: int, scale=1) -> TruncSeries:
    """Classical ``e^{scale t}`` over Q."""
    scale = Fraction(scale)
    return TruncSeries([scale**k / _factorial(k) for k in range(order + 1)], order)


def series_invert(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse to order N.

    The constant term must be a nonzero rational (a constant LambdaPoly or
    BivarPoly counts).
    """
    c0 = a.coeffs[0]
    if a.ring is Fraction:
        inv0 = c0
    elif a.ring is LambdaPoly:
        inv0 = c0.constant_term() if c0.is_constant() else None
    else:
        inv0 = None
        if c0.degree <= 0 and (c0.is_zero() or c0.coeffs[0].is_constant()):
            inv0 = c0.coeffs[0].constant_term() if c0 else Fraction(0)
    if not inv0:
        raise NotInvertible(f"constant term {c0} is not invertible")
    inv0 = 1 / Fraction(inv0)
    n = a.order
    b = [_lift(a.ring, inv0)]
    for m in range(1, n + 1):
        acc = _zero(a.ring)
        for k in range(1, m + 1):
            ak = a.coeffs[k]
            if ak:
                acc = acc + ak * b[m - k]
        b.append(-(acc * inv0))
    return a._wrap(b)


def series_pow(a: TruncSeries, alpha) -> TruncSeries:
    """``a ** alpha`` for rational ``alpha`` via the binomial series in ``u = a - 1``.

    Requires constant term 1.  Never goes through exp/log, so the result stays
    in the coefficient ring.
    """
    if a.coeffs[0] != 1:
        raise ConstantTermError(f"constant term must be 1, got {a.coeffs[0]}")
    alpha = Fraction(alpha)
    u = a - 1
    out = TruncSeries.constant(1, a.order, a.ring)
    upow = out
    for k in range(1, a.order + 1):
        c = binomial_poly(alpha, k)
        upow = upow * u
        if c:
            out = out + upow * c
        elif alpha.denominator == 1 and alpha >= 0:
            break
    return out


def egf_coefficient(a: TruncSeries, n: int):
    """``n!`` times the coefficient of ``t^n``."""
    if not 0 <= n <= a.order:
        raise IndexError(f"coefficient {n} outside 0..{a.order}")
    return a.coeffs[n] * _factorial(n)


def ratio_power_series(j: int, order: int | None = None) -> TruncSeries:
    """``((e_l(t) - 1) / t) ** j`` truncated at ``order`` (repeated multiplication)."""
    if order is None:
        order = default_order()
    if j < 0:
        raise ValueError("j must be >= 0")
    base = (degenerate_exp("one", order + 1) - 1).shift_down()
    return base**j
