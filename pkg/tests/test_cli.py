import json
import subprocess
import sys

import pytest

from degenstir.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (("eval", "--family", "T", "--n", "2", "--r", "0", "--x", "1"), "4"),
    (("eval", "--family", "S", "--n", "3", "--r", "0", "--x", "5"), "-4"),
    (("eval", "--bernoulli", "--alpha", "1", "--n", "1", "--lambda", "1/3"), "-1/3"),
    (("eval", "--bernoulli", "--alpha", "1", "--n", "1", "--route", "closed-form"), "-1/2 + 1/2*l"),
    (("eval", "--family", "Snr", "--n", "2", "--r", "1"), "2*x^2 + x"),
])
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--family", "BellLike", "--r", "2", "--lambda", "1/2", "--format", "json")
    assert code == 0 and json.loads(out) == [[], ["1/2"], ["1"]]


def test_table_classical(capsys):
    code, out, _ = run(capsys, "table", "--n-max", "3", "--lambda", "0")
    assert code == 0
    assert json.loads(out)["rows"][3] == ["0", "1", "3", "1"]


def test_table_formats(capsys, tmp_path):
    _, out, _ = run(capsys, "table", "--n-max", "2", "--format", "csv", "--algorithm", "euler-sum")
    assert out.splitlines()[-1] == "2,0,1 - l,1"
    _, out, _ = run(capsys, "table", "--n-max", "2", "--format", "markdown")
    assert "1 - λ" in out
    target = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--n-max", "4", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["N_max"] == 4


def test_bernoulli(capsys):
    code, out, _ = run(capsys, "bernoulli", "--alpha", "1", "--n-max", "2", "--lambda", "0")
    assert code == 0 and json.loads(out)["values"] == ["1", "-1/2", "1/6"]
    code, out, _ = run(capsys, "bernoulli", "--alpha", "1/2", "--n-max", "1", "--format", "csv")
    assert out.splitlines() == ["n,value", '0,"1"', '1,"-1/4 + 1/4*l"']
    code, _, err = run(capsys, "bernoulli", "--alpha", "-1", "--n-max", "3", "--route", "closed-form")
    assert code == 2 and "pole" in err


def test_verify_only(capsys):
    code, out, _ = run(capsys, "verify", "--only", "thm-2.19", "--alpha", "1/2", "--n-max", "6")
    data = json.loads(out)
    assert code == 0
    assert data["bounds"]["alphas"] == ["1/2"]
    assert [c["status"] for c in data["cases"]] == ["pass"]


def test_verify_deterministic(capsys):
    argv = ("verify", "--n-max", "3", "--r-max", "2", "--order", "6", "--samples", "3")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_verify_failure_exit_code(capsys, monkeypatch):
    import importlib
    from degenstir.rings import LambdaPoly
    st_mod = importlib.import_module("degenstir.stirling")
    monkeypatch.setattr(st_mod, "_recurrence_factor", lambda k, n: LambdaPoly._raw((k, n), 1))
    st_mod.clear_caches()
    try:
        code, out, err = run(capsys, "verify", "--only", "triangles", "--n-max", "4")
    finally:
        monkeypatch.undo()
        st_mod.clear_caches()
    assert code == 1
    assert json.loads(out)["cases"][0]["counterexample"] == [2, 1]
    assert "FAIL triangles" in err


@pytest.mark.parametrize("argv", [
    ("verify", "--only", "no-such-case"),
    ("table", "--lambda", "1/0"),
    ("table", "--lambda", "abc"),
    ("table", "--n-max", "-1"),
    ("eval", "--family", "S", "--n", "2"),
    ("eval", "--n", "2"),
    ("trig", "--r", "1", "--x", "zz", "--lambda", "1"),
    ("trig", "--r", "5", "--x", "1", "--lambda", "1", "--n-terms", "3"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("degenstir:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--format", "xml"])
    assert exc.value.code == 2


def test_trig(capsys):
    code, out, _ = run(capsys, "trig", "--r", "2", "--x", "pi/2", "--lambda", "-1/2")
    rec = json.loads(out)
    assert code == 0 and rec["abs_err"] < 1e-9 and rec["lambda"] == "-1/2"
    code, out, _ = run(capsys, "trig", "--r", "0", "--x", "-pi/4", "--lambda", "1/3")
    assert code == 0 and json.loads(out)["x"] < 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degenstir", "eval", "--family", "T", "--n", "2", "--r", "0",
                           "--x", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "4"


def _golden(name):
    with open(__file__.rsplit("/", 1)[0] + f"/golden/{name}.json") as fh:
        return json.load(fh)


def test_table_matches_golden(capsys):
    _, out, _ = run(capsys, "table", "--n-max", "12", "--lambda", "0")
    rows = [[int(v) for v in row] for row in json.loads(out)["rows"]]
    assert rows == _golden("classical_stirling2")["rows"]


def test_bernoulli_matches_golden(capsys):
    _, out, _ = run(capsys, "bernoulli", "--n-max", "12", "--lambda", "0")
    assert json.loads(out)["values"] == _golden("classical_bernoulli")["values"]


def test_verify_default_bounds(capsys):
    code, out, err = run(capsys, "verify")
    data = json.loads(out)
    assert code == 0 and err == ""
    assert data["bounds"]["n_max"] == 10 and data["bounds"]["order"] == 32
    assert {c["status"] for c in data["cases"]} == {"pass"}


def test_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("DEGENSTIR_ORDER", "12")
    _, out, _ = run(capsys, "verify", "--only", "eq-55", "--n-max", "3")
    assert json.loads(out)["bounds"]["order"] == 12
