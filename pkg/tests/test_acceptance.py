"""Acceptance criteria, one test each.  Every test prints a single
``ACCEPTANCE <n> PASS|FAIL: ...`` line (shown even without ``-s``)."""
import importlib
import math
import time
from fractions import Fraction

import pytest

from degenstir.bernoulli import bernoulli_closed_form_table, bernoulli_series
from degenstir.families import trig_sums_numeric
from degenstir.identities import DEFAULT_ALPHAS, Bounds, run_suite
from degenstir.rings import LambdaPoly
from oracles import norlund_bernoulli, set_partitions_by_blocks

st_mod = importlib.import_module("degenstir.stirling")
L = LambdaPoly.lam()


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


def _three_triangles(n_max):
    st_mod.clear_caches()
    st_mod.ff_int.cache_clear()
    return st_mod.triangle_recurrence(n_max), st_mod.triangle_euler_sum(n_max), st_mod.triangle_egf(n_max)


def test_1_tri_algorithm_agreement(report):
    t0 = time.perf_counter()
    rec, eul, egf = _three_triangles(25)
    bad = st_mod.first_mismatch(rec, eul) or st_mod.first_mismatch(rec, egf)
    secs = time.perf_counter() - t0
    report(1, bad is None and secs < 30, f"recurrence = Euler sum = EGF for k <= n <= 25 "
           f"(first mismatch {bad}, {secs:.2f}s < 30s)")


def test_2_remark_closed_forms(report):
    bad = []
    for n in range(2, 21):
        one = (1 - L) * Fraction(n * (n - 1), 2)
        two = (1 - L) * ((3 * n - 5) - (3 * n - 1) * L) * Fraction(n * (n - 1) * (n - 2), 24)
        if st_mod.stirling(n, n - 1) != one or st_mod.stirling(n, n - 2) != two:
            bad.append(n)
    report(2, not bad, f"{{n n-1}} and {{n n-2}} closed forms exact for 2 <= n <= 20 (failing n: {bad})")


def test_3_full_identity_suite(report):
    t0 = time.perf_counter()
    rep = run_suite(Bounds.default())
    secs = time.perf_counter() - t0
    fails = [(c.id, c.counterexample, c.reason) for c in rep.failures()]
    statuses = {c.status for c in rep.cases}
    report(3, rep.ok and statuses == {"pass"} and secs < 300,
           f"{len(rep.cases)} cases at default bounds {Bounds.default().to_dict()}, single-threaded "
           f"{secs:.1f}s < 300s (failures: {fails})")


def test_4_bernoulli_routes_and_classical_limit(report):
    problems = []
    for alpha in DEFAULT_ALPHAS:
        s = bernoulli_series(alpha, 20)
        if s.values != bernoulli_closed_form_table(alpha, 20).values:
            problems.append(("routes", alpha))
        if s.evaluate(0) != norlund_bernoulli(alpha, 20):
            problems.append(("classical", alpha))
    b = bernoulli_series(1, 2).evaluate(0)
    if b[1] != Fraction(-1, 2) or b[2] != Fraction(1, 6):
        problems.append(("B1/B2", b))
    report(4, not problems, f"closed form = series for n <= 20 and alpha in {[str(a) for a in DEFAULT_ALPHAS]}; "
           f"l = 0 equals the independent order-alpha table; B_1 = -1/2, B_2 = 1/6 (problems: {problems})")


def test_5_trig_sums(report):
    t0 = time.perf_counter()
    worst = 0.0
    for r in range(6):
        for x in (0.3, 0.7, 1.5, math.pi / 2):
            for lam in (Fraction(1, 3), Fraction(-1, 2)):
                c, s, cc, sc = trig_sums_numeric(r, x, lam, 200)
                worst = max(worst, abs(c - cc), abs(s - sc))
    secs = time.perf_counter() - t0
    report(5, worst < 1e-9 and secs < 5, f"48 cosine/sine sums, max abs error {worst:.2e} < 1e-9, "
           f"{secs:.2f}s < 5s")


def test_6_classical_limit_vs_partitions(report):
    tri = st_mod.triangle_recurrence(10).evaluate(0)
    bad = [n for n in range(11) if [int(v) for v in tri[n]] != set_partitions_by_blocks(n)]
    spot = (tri[4][2], tri[5][3])
    report(6, not bad and spot == (7, 25), f"l = 0 triangle equals partition enumeration for n <= 10 "
           f"({{4 2}} = {spot[0]}, {{5 3}} = {spot[1]}; failing n: {bad})")


def test_7_mutation_sensitivity(report, monkeypatch):
    monkeypatch.setattr(st_mod, "_recurrence_factor", lambda k, n: LambdaPoly._raw((k, n), 1))
    try:
        rec, eul, egf = _three_triangles(25)
        bad = st_mod.first_mismatch(rec, eul)
        suite = run_suite(Bounds(n_max=25), only=["triangles"]).cases[0]
    finally:
        monkeypatch.undo()
        st_mod.clear_caches()
    ok = bad is not None and bad[0] == 2 and suite.status == "fail" and suite.counterexample[0] == 2
    report(7, ok, f"sign-flipped recurrence factor breaks criterion 1; minimal counterexample {bad}, "
           f"suite reports {suite.status} at {suite.counterexample}")
