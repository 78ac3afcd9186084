import importlib
import json

import pytest

from degenstir.identities import (
    CASE_IDS,
    REGISTRY,
    Bounds,
    IdentityCase,
    case_rng,
    emit_report,
    get_case,
    run_case,
    run_suite,
)
from degenstir.rings import LambdaPoly

st_mod = importlib.import_module("degenstir.stirling")

REQUIRED = (
    ["lemma-1.1" + c for c in "abcde"]
    + [f"thm-2.{i}" for i in (1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 14, 15, 16, 18, 19)]
    + ["cor-2.11", "cor-2.12", "cor-2.17", "eq-24", "eq-55", "eq-56", "eq-57", "eq-60", "pre-45", "pre-51"]
)
SMALL = Bounds(n_max=4, r_max=3, alphas=(1, 2), sample_points=4, order=8)


def test_registry_covers_every_claim():
    assert set(REQUIRED) <= set(CASE_IDS)
    assert len(CASE_IDS) == len(set(CASE_IDS))
    for case in REGISTRY:
        assert case.anchor and case.param_domain


def test_unknown_id():
    with pytest.raises(KeyError):
        get_case("thm-9.9")
    with pytest.raises(KeyError):
        run_suite(SMALL, only=["nope"])


def test_small_suite_passes():
    report = run_suite(SMALL)
    assert report.ok, [c.to_dict() for c in report.failures()]
    assert [c.id for c in report.cases] == list(CASE_IDS)


def test_empty_bounds_skip_everything():
    report = run_suite(Bounds())
    assert Bounds().is_empty()
    assert {c.status for c in report.cases} == {"skipped"}
    assert report.ok


def test_partial_bounds_skip_dependents():
    report = run_suite(Bounds(n_max=3))
    status = {c.id: c.status for c in report.cases}
    assert status["eq-7"] == "pass"
    assert status["thm-2.7"] == "skipped"
    assert status["thm-2.19"] == "skipped"


def test_report_is_deterministic():
    a = emit_report(run_suite(SMALL, seed=7))
    b = emit_report(run_suite(SMALL, seed=7, workers=2))
    assert a == b
    data = json.loads(a)
    assert data["seed"] == 7 and "millis" not in data["cases"][0]
    assert "millis" in json.loads(emit_report(run_suite(SMALL, only=["eq-4"]), timings=True))["cases"][0]


def test_rng_is_keyed_by_case_and_params():
    assert case_rng(1, "a", (1,)).random() == case_rng(1, "a", (1,)).random()
    assert case_rng(1, "a", (1,)).random() != case_rng(1, "a", (2,)).random()


def test_smallest_counterexample_reported():
    case = IdentityCase("probe", "n*k < 6", "k <= n <= n_max",
                        lambda b: [(n, k) for n in range(b.n_max, -1, -1) for k in range(n + 1)],
                        lambda p, b, rng: p[0] * p[1] < 6)
    res = run_case(case, Bounds(n_max=5))
    assert res.status == "fail" and res.counterexample == (3, 2)


def test_exception_is_a_failure():
    case = IdentityCase("boom", "raises", "n", lambda b: [(0,), (1,)], lambda p, b, rng: 1 // p[0] > 0)
    res = run_case(case, Bounds(n_max=1))
    assert res.status == "fail" and res.counterexample == (0,) and "ZeroDivisionError" in res.reason


def test_markdown_report():
    md = emit_report(run_suite(SMALL, only=["eq-4", "remark"]), "markdown").splitlines()
    assert md[2] == "| id | status | checked | counterexample |"
    assert md[4].startswith("| eq-4 | pass |")
    with pytest.raises(ValueError):
        emit_report(run_suite(SMALL, only=["eq-4"]), "xml")


def test_mutant_fails_triangle_case(monkeypatch):
    monkeypatch.setattr(st_mod, "_recurrence_factor", lambda k, n: LambdaPoly._raw((k, n), 1))
    st_mod.clear_caches()
    try:
        res = run_suite(Bounds(n_max=6), only=["triangles"]).cases[0]
    finally:
        monkeypatch.undo()
        st_mod.clear_caches()
    assert res.status == "fail" and res.counterexample == (2, 1)
