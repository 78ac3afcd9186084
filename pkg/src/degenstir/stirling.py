"""Degenerate Stirling numbers of the second kind.

Three independent constructions of the triangle ``{n k}_l``:

* ``recurrence``: ``{n+1 k} = {n k-1} + (k - n l) {n k}``
* ``euler-sum``:  ``{n k} = (1/k!) sum_j C(k,j) (-1)^(k-j) (j)_{n,l}``
* ``egf``:        ``n!`` times the ``t^n`` coefficient of ``(e_l(t) - 1)^k / k!``

Completed triangles are cached per ``(algorithm, n_max)``.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .rings import BivarPoly, LambdaPoly, format_rational
from .series import degenerate_exp, egf_coefficient

ALGORITHMS = ("recurrence", "euler-sum", "egf")


def deg_falling_factorial(n: int, x=None, *, negate_lambda: bool = False):
    """``(x)_{n,l} = x (x - l) ... (x - (n-1) l)``.

    ``x=None`` gives the symbolic version as a BivarPoly; a rational or
    LambdaPoly value gives a LambdaPoly; a BivarPoly value gives a BivarPoly.
    ``negate_lambda`` uses ``-l`` in place of ``l``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lam = LambdaPoly.lam()
    if negate_lambda:
        lam = -lam
    if x is None:
        x = BivarPoly.x()
    elif isinstance(x, (int, Fraction)):
        x = LambdaPoly.const(x)
    acc = BivarPoly.one() if isinstance(x, BivarPoly) else LambdaPoly.one()
    for i in range(n):
        acc = acc * (x - i * lam)
    return acc


@lru_cache(maxsize=None)
def ff_int(k: int, r: int) -> LambdaPoly:
    """``(k)_{r,l}`` for integer ``k`` (cached)."""
    if r == 0:
        return LambdaPoly.one()
    return ff_int(k, r - 1) * LambdaPoly._raw((k, -(r - 1)), 1)


@lru_cache(maxsize=None)
def ff_symbolic(n: int) -> BivarPoly:
    return deg_falling_factorial(n)


@dataclass(frozen=True)
class StirlingTriangle:
    """Lower-triangular table ``rows[n][k] = {n k}_l`` for ``0 <= k <= n <= n_max``."""

    rows: tuple
    algorithm: str

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk) -> LambdaPoly:
        n, k = nk
        if k < 0 or k > n:
            return LambdaPoly.zero()
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def evaluate(self, lam) -> list:
        lam = Fraction(lam)
        return [[e(lam) for e in row] for row in self.rows]

    def same_entries(self, other: StirlingTriangle) -> bool:
        return self.rows == other.rows

    def to_dict(self, lam=None) -> dict:
        if lam is None:
            rows = [[e.to_json() for e in row] for row in self.rows]
        else:
            rows = [[format_rational(v) for v in row] for row in self.evaluate(lam)]
        return {"algorithm": self.algorithm, "N_max": self.n_max, "rows": rows}

    def to_json(self, lam=None) -> str:
        return json.dumps(self.to_dict(lam))

    def to_csv(self, lam=None) -> str:
        """One line per row; entries are ``"3 - 3*l"``-style strings (or rationals)."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + [f"k={k}" for k in range(self.n_max + 1)])
        for n, row in enumerate(self.rows):
            if lam is None:
                cells = [e.to_str("l") for e in row]
            else:
                cells = [format_rational(e(Fraction(lam))) for e in row]
            w.writerow([n] + cells)
        return buf.getvalue()

    def to_markdown(self, lam=None) -> str:
        head = "| n | " + " | ".join(f"k={k}" for k in range(self.n_max + 1)) + " |"
        sep = "|---" * (self.n_max + 2) + "|"
        lines = [head, sep]
        for n, row in enumerate(self.rows):
            if lam is None:
                cells = [e.to_str("λ") for e in row]
            else:
                cells = [format_rational(e(Fraction(lam))) for e in row]
            cells += [""] * (self.n_max - n)
            lines.append(f"| {n} | " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data) -> StirlingTriangle:
        rows = tuple(tuple(LambdaPoly.from_json(e) for e in row) for row in data["rows"])
        return cls(rows, data["algorithm"])


def _recurrence_factor(k: int, n: int) -> LambdaPoly:
    # (k - n l)
    return LambdaPoly._raw((k, -n), 1)


def _build_recurrence(n_max: int) -> StirlingTriangle:
    rows = [(LambdaPoly.one(),)]
    for n in range(n_max):
        prev = rows[-1]
        row = [LambdaPoly.zero()]
        for k in range(1, n + 2):
            left = prev[k - 1]
            here = prev[k] if k <= n else None
            row.append(left + _recurrence_factor(k, n) * here if here else left)
        rows.append(tuple(row))
    return StirlingTriangle(tuple(rows), "recurrence")


@lru_cache(maxsize=None)
def triangle_recurrence(n_max: int) -> StirlingTriangle:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return _build_recurrence(n_max)


def _build_euler_sum(n_max: int) -> StirlingTriangle:
    rows = []
    for n in range(n_max + 1):
        row = []
        for k in range(n + 1):
            acc = LambdaPoly.zero()
            for j in range(k + 1):
                term = ff_int(j, n) * comb(k, j)
                acc = acc + term if (k - j) % 2 == 0 else acc - term
            row.append(acc * Fraction(1, factorial(k)))
        rows.append(tuple(row))
    return StirlingTriangle(tuple(rows), "euler-sum")


@lru_cache(maxsize=None)
def triangle_euler_sum(n_max: int) -> StirlingTriangle:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return _build_euler_sum(n_max)


def _build_egf(n_max: int) -> StirlingTriangle:
    e_minus_1 = degenerate_exp("one", n_max) - 1
    cols = []
    power = e_minus_1 ** 0
    for k in range(n_max + 1):
        if k:
            power = power * e_minus_1 * Fraction(1, k)
        cols.append([egf_coefficient(power, n) for n in range(n_max + 1)])
    rows = tuple(tuple(cols[k][n] for k in range(n + 1)) for n in range(n_max + 1))
    return StirlingTriangle(rows, "egf")


@lru_cache(maxsize=None)
def triangle_egf(n_max: int) -> StirlingTriangle:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return _build_egf(n_max)


_BUILDERS = {
    "recurrence": triangle_recurrence,
    "euler-sum": triangle_euler_sum,
    "egf": triangle_egf,
}
_RAW_BUILDERS = {
    "recurrence": _build_recurrence,
    "euler-sum": _build_euler_sum,
    "egf": _build_egf,
}


def triangle(n_max: int, algorithm: str = "recurrence") -> StirlingTriangle:
    try:
        return _BUILDERS[algorithm](n_max)
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}") from None


def clear_caches():
    for fn in (triangle_recurrence, triangle_euler_sum, triangle_egf, _stirling_table):
        fn.cache_clear()


@lru_cache(maxsize=None)
def _stirling_table(size: int) -> StirlingTriangle:
    return triangle_recurrence(size)


def stirling(n: int, k: int, lam_scale=1) -> LambdaPoly:
    """``{n k}_{c l}`` with ``c = lam_scale``; zero outside ``0 <= k <= n``.

    Backed by the recurrence triangle, grown in blocks of 16 rows.
    """
    if n < 0 or k < 0 or k > n:
        return LambdaPoly.zero()
    size = max(16, -(-(n + 1) // 16) * 16)
    v = _stirling_table(size)[n, k]
    return v if lam_scale == 1 else v.scale_lambda(lam_scale)


def first_mismatch(a: StirlingTriangle, b: StirlingTriangle):
    """Smallest ``(n, k)`` (lexicographic) where the triangles differ, or None."""
    for n in range(min(a.n_max, b.n_max) + 1):
        for k in range(n + 1):
            if a[n, k] != b[n, k]:
                return (n, k)
    return None


def classical_triangle(n_max: int) -> list:
    """Integer Stirling numbers from ``{n+1 k} = {n k-1} + k {n k}``."""
    rows = [[1]]
    for n in range(n_max):
        prev = rows[-1] + [0]
        rows.append([0] + [prev[k - 1] + k * prev[k] for k in range(1, n + 2)])
    return rows


def expand_in_falling_basis(n: int) -> list:
    """Coefficients ``c_k`` with ``(x)_{n,l} = sum_k c_k (x)_k``.

    Solved from the values at ``x = 0, 1, ..., n``: since ``(j)_k = 0`` for
    ``k > j`` the system is lower triangular.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for j in range(n + 1):
        rhs = ff_int(j, n)
        for i, c in enumerate(coeffs):
            rhs = rhs - c * (factorial(j) // factorial(j - i))
        coeffs.append(rhs * Fraction(1, factorial(j)))
    return coeffs


def convolution_check(n: int, r: int, alpha: int) -> bool:
    """``C(r+a, r) {n r+a} = sum_{k=r}^n C(n,k) {k r} {n-k a}``."""
    if not (r >= 1 and alpha >= 1 and n >= r + alpha):
        raise ValueError("need r >= 1, alpha >= 1 and n >= r + alpha")
    lhs = stirling(n, r + alpha) * comb(r + alpha, r)
    rhs = LambdaPoly.zero()
    for k in range(r, n + 1):
        rhs = rhs + stirling(k, r) * stirling(n - k, alpha) * comb(n, k)
    return lhs == rhs


def benchmark(n_max: int, repeat: int = 3) -> dict:
    """Best-of-``repeat`` wall time in seconds for each algorithm, bypassing the caches."""
    out = {}
    for name, build in _RAW_BUILDERS.items():
        best = float("inf")
        for _ in range(repeat):
            ff_int.cache_clear()
            t0 = time.perf_counter()
            build(n_max)
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    return out
