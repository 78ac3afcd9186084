"""Exact rings: rationals, Q[l] and Q[l][x].

Rationals are :class:`fractions.Fraction` (always reduced, sign on the
numerator, zero is 0/1).  :class:`LambdaPoly` is a dense univariate
polynomial in the deformation parameter ``l``; :class:`BivarPoly` is a dense
polynomial in one free indeterminate (x, z or y) whose coefficients are
``LambdaPoly``.  Both are immutable and kept in canonical form, so equality is
structural.

>>> lam = LambdaPoly.lam()
>>> (1 - lam) * (1 - lam)
LambdaPoly('1 - 2*l + l^2')
>>> x = BivarPoly.x()
>>> x * (x - lam)
BivarPoly('x^2 + (-l)*x')
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction

_Scalar = (int, Fraction)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (also accepts ints and Fractions).

    Raises ValueError on malformed input and ZeroDivisionError on ``q == 0``.
    """
    if isinstance(text, _Scalar):
        return Fraction(text)
    s = str(text).strip()
    if "/" in s:
        p, _, q = s.partition("/")
        try:
            num, den = int(p), int(q)
        except ValueError:
            raise ValueError(f"malformed rational: {text!r}") from None
        return Fraction(num, den)
    try:
        return Fraction(s)
    except ValueError:
        raise ValueError(f"malformed rational: {text!r}") from None


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class LambdaPoly:
    """Polynomial in ``l`` over Q, stored as integer numerators over one denominator.

    The public view is :attr:`coeffs`, a tuple of Fractions with index ``i``
    holding the coefficient of ``l**i``.  Internally the numerators are
    primitive with respect to the shared positive denominator, which keeps
    multiplication in integer arithmetic.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs=()):
        fr = [parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        self._set(num, den)

    def _set(self, num, den):
        while num and num[-1] == 0:
            num.pop()
        if not num:
            self._num, self._den = (), 1
            return
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self._num, self._den = tuple(num), den

    @classmethod
    def _raw(cls, num, den) -> LambdaPoly:
        p = object.__new__(cls)
        p._set(list(num), den)
        return p

    @classmethod
    def zero(cls) -> LambdaPoly:
        return cls._raw((), 1)

    @classmethod
    def one(cls) -> LambdaPoly:
        return cls._raw((1,), 1)

    @classmethod
    def const(cls, c) -> LambdaPoly:
        c = Fraction(c)
        return cls._raw((c.numerator,), c.denominator)

    @classmethod
    def lam(cls) -> LambdaPoly:
        return cls._raw((0, 1), 1)

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def degree(self) -> float:
        return len(self._num) - 1 if self._num else float("-inf")

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def constant_term(self) -> Fraction:
        return Fraction(self._num[0], self._den) if self._num else Fraction(0)

    def is_constant(self) -> bool:
        return len(self._num) <= 1

    # ---- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, _Scalar) or isinstance(other, _RationalABC):
            return LambdaPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        if not a:
            return other
        if not b:
            return self
        da, db = self._den, other._den
        if da == db:
            den, fa, fb = da, 1, 1
        else:
            g = gcd(da, db)
            den = da // g * db
            fa, fb = db // g, da // g
        n = max(len(a), len(b))
        out = [0] * n
        for i, c in enumerate(a):
            out[i] = c * fa
        for i, c in enumerate(b):
            out[i] += c * fb
        return LambdaPoly._raw(out, den)

    __radd__ = __add__

    def __neg__(self):
        p = object.__new__(LambdaPoly)
        p._num, p._den = tuple(-c for c in self._num), self._den
        return p

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            other = Fraction(other)
            if not other or not self._num:
                return LambdaPoly.zero()
            return LambdaPoly._raw([c * other.numerator for c in self._num], self._den * other.denominator)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self._num, other._num
        if not a or not b:
            return LambdaPoly.zero()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return LambdaPoly._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LambdaPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_term()
        if not isinstance(other, _Scalar):
            return NotImplemented
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("division of LambdaPoly by zero")
        return self * (1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = LambdaPoly.one(), self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self._den == other._den and self._num == other._num
        if isinstance(other, _Scalar):
            return self == LambdaPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if len(self._num) <= 1:
            return hash(self.constant_term())
        return hash((self._num, self._den))

    # ---- evaluation and ring maps ------------------------------------------

    def __call__(self, value):
        """Horner evaluation at a rational (or any ring element that mixes with Fractions)."""
        if isinstance(value, _Scalar):
            value = Fraction(value)
            acc = 0
            for c in reversed(self._num):
                acc = acc * value + c
            return Fraction(acc, self._den)
        acc = LambdaPoly.zero() if isinstance(value, LambdaPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def subs(self, value) -> Fraction:
        return self(value)

    def scale_lambda(self, c) -> LambdaPoly:
        """The ring map ``l -> c*l`` for rational ``c``."""
        c = Fraction(c)
        if c == 1:
            return self
        if not c:
            return LambdaPoly.const(self.constant_term())
        p, q = c.numerator, c.denominator
        n = len(self._num)
        # multiply through by q^(n-1) to stay integral
        out = [a * p**i * q ** (n - 1 - i) for i, a in enumerate(self._num)]
        return LambdaPoly._raw(out, self._den * q ** (n - 1) if n else 1)

    # ---- rendering ---------------------------------------------------------

    def to_str(self, var: str = "l") -> str:
        if not self._num:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = format_rational(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LambdaPoly({self.to_str()!r})"

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> LambdaPoly:
        return cls(parse_rational(c) for c in data)


def _lift(c):
    """Lift a scalar or LambdaPoly into LambdaPoly."""
    if isinstance(c, LambdaPoly):
        return c
    return LambdaPoly.const(c)


class BivarPoly:
    """Polynomial in one free indeterminate with ``LambdaPoly`` coefficients.

    ``coeffs[i]`` is the coefficient of the indeterminate to the ``i``-th
    power.  The indeterminate's display name defaults to ``x``; it carries no
    semantics, so a polynomial in ``z`` is just a BivarPoly rendered with
    ``var="z"``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_lift(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs) -> BivarPoly:
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        p = object.__new__(cls)
        p._c = tuple(c)
        return p

    @classmethod
    def zero(cls) -> BivarPoly:
        return cls._raw(())

    @classmethod
    def one(cls) -> BivarPoly:
        return cls._raw((LambdaPoly.one(),))

    @classmethod
    def const(cls, c) -> BivarPoly:
        return cls._raw((_lift(c),))

    @classmethod
    def x(cls) -> BivarPoly:
        return cls._raw((LambdaPoly.zero(), LambdaPoly.one()))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> float:
        return len(self._c) - 1 if self._c else float("-inf")

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return BivarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._raw(-c for c in self._c)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            if not other:
                return BivarPoly.zero()
            return BivarPoly._raw(c * other for c in self._c)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return BivarPoly.zero()
        out = [LambdaPoly.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return BivarPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of BivarPoly by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = BivarPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._c == other._c
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self == BivarPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self._c[0]) if self._c else hash(0)
        return hash(self._c)

    # ---- evaluation and ring maps ------------------------------------------

    def subs_x(self, value) -> LambdaPoly:
        """Substitute the indeterminate by a rational or a LambdaPoly (Horner)."""
        v = _lift(value)
        acc = LambdaPoly.zero()
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    def subs_lambda(self, value) -> BivarPoly:
        """Substitute ``l`` by a rational; result has constant coefficients."""
        return BivarPoly._raw(LambdaPoly.const(c(value)) for c in self._c)

    def evaluate(self, x_val, lam_val) -> Fraction:
        return self.subs_x(x_val)(lam_val)

    def __call__(self, value):
        if isinstance(value, BivarPoly):
            return self.compose(value)
        return self.subs_x(value)

    def compose(self, inner: BivarPoly) -> BivarPoly:
        """``p(inner(x))`` by Horner in the BivarPoly ring."""
        acc = BivarPoly.zero()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def shift(self, h) -> BivarPoly:
        """``p(x + h)`` for rational or LambdaPoly ``h``."""
        return self.compose(BivarPoly.x() + h)

    def scale_lambda(self, c) -> BivarPoly:
        return BivarPoly._raw(a.scale_lambda(c) for a in self._c)

    # ---- rendering ---------------------------------------------------------

    def to_str(self, var: str = "x", lam: str = "l") -> str:
        if not self._c:
            return "0"
        parts = []
        for i in reversed(range(len(self._c))):
            c = self._c[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                parts.append(c.to_str(lam))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            elif c.is_constant():
                parts.append(f"{c.to_str(lam)}*{mono}")
            else:
                parts.append(f"({c.to_str(lam)})*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BivarPoly({self.to_str()!r})"

    def to_json(self) -> list:
        return [c.to_json() for c in self._c]

    @classmethod
    def from_json(cls, data) -> BivarPoly:
        return cls(LambdaPoly.from_json(c) for c in data)


def rational_arith(a, b, op: str) -> Fraction:
    """Exact ``a op b`` for op in ``+ - * /``; ZeroDivisionError on ``b == 0`` with ``/``."""
    a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def falling_factorial(upper, n: int):
    """``(upper)_n = upper (upper-1) ... (upper-n+1)`` in whatever ring ``upper`` lives in."""
    if isinstance(upper, _Scalar):
        upper = Fraction(upper)
    acc = 1
    for i in range(n):
        acc = (upper - i) * acc
    if isinstance(acc, int):
        return Fraction(acc)
    return acc


def binomial_poly(upper, n: int):
    """Generalized binomial ``(upper)_n / n!``; zero for ``n < 0``.

    ``upper`` may be an int, a Fraction, a LambdaPoly or a BivarPoly; the
    result lives in the same ring (ints come back as Fractions).
    """
    if n < 0:
        if isinstance(upper, (LambdaPoly, BivarPoly)):
            return type(upper).zero()
        return Fraction(0)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return falling_factorial(upper, n) / fact


def substitute(p, lam_val, x_val=None):
    """Evaluate ``p`` at ``l = lam_val`` (and the indeterminate at ``x_val`` if given).

    LambdaPoly -> Fraction.  BivarPoly with ``x_val`` -> Fraction; without it,
    a BivarPoly with constant coefficients.
    """
    if isinstance(p, _Scalar):
        return Fraction(p)
    if isinstance(p, LambdaPoly):
        return p(Fraction(lam_val))
    if isinstance(p, BivarPoly):
        if x_val is None:
            return p.subs_lambda(Fraction(lam_val))
        return p.evaluate(Fraction(x_val), Fraction(lam_val))
    raise TypeError(f"cannot substitute into {type(p).__name__}")


def to_json_value(v):
    """JSON-ready form of any ring element."""
    if isinstance(v, (LambdaPoly, BivarPoly)):
        return v.to_json()
    if isinstance(v, _Scalar):
        return format_rational(v)
    raise TypeError(f"not a ring element: {type(v).__name__}")


def dumps(v) -> str:
    return json.dumps(to_json_value(v))
