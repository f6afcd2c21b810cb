import json
import subprocess
import sys

import pytest

from qalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


@pytest.mark.parametrize("expr,want", [
    ("[-2,2]*[-4,4]", "[-8,8]"),
    ("0*[5,7]", "{0}"),
    ("u([0,1],[1,2])", "u([0,2])"),
])
def test_eval(capsys, expr, want):
    assert run(capsys, "eval", expr)[:2] == (0, want)


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--json", "[1,2]+[3,4]")
    assert code == 0
    assert json.loads(out) == {"instance": "interval", "value": {"kind": "interval", "payload": ["4", "6"]}}


def test_errors_exit_one(capsys):
    code, _, err = run(capsys, "eval", "[1,2]+d(0,1)")
    assert code == 1 and "type error" in err and "interval" in err and "disk" in err
    code, _, err = run(capsys, "eval", "[1,2")
    assert code == 1 and "syntax error at byte 4" in err
    code, _, err = run(capsys, "enclose", "--coeffs", "a", "--domain", "[0,1]")
    assert code == 1


def test_bad_usage_exits_one():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_norm_and_dist(capsys):
    assert run(capsys, "norm", "d(1,2)")[:2] == (0, "3")
    assert run(capsys, "norm", "m([[1,1],[0,1]])")[:2] == (0, "sqrt(3)")
    code, out, _ = run(capsys, "dist", "[0,1]", "[2,5]", "--oracle")
    assert code == 0 and out.splitlines()[0] == "4" and "oracle <= 4" in out
    code, out, _ = run(capsys, "dist", "--json", "{3}", "[0,1]")
    assert json.loads(out)["distance"] == "3"


def test_qsp(capsys):
    assert run(capsys, "qsp", "u([1,2],{5})")[:2] == (0, "[1,2] u {5}")
    code, out, _ = run(capsys, "qsp", "[1,2]", "--scope", "zero-only", "--json")
    assert json.loads(out)["qsp"] == {"empty": True, "parts": []}


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "[0,1]", "-n", "2")
    assert out.splitlines() == ["1: [-1,2]", "2: [-4,5]"]
    code, out, _ = run(capsys, "chain", "{0,1,5}", "-n", "10", "--json")
    obj = json.loads(out)
    assert len(obj["links"]) == 10 and all(obj["strict"])
    assert obj["links"][-1]["kind"] == "sumset"


def test_hom(capsys):
    assert run(capsys, "hom", "half", "[-2,2]")[:2] == (0, "[-1,1]")
    assert run(capsys, "hom", "abs:2", "r(-3)")[:2] == (0, "[-6,6]")
    code, out, _ = run(capsys, "hom", "double", "{3}", "--check", "50", "--json")
    checks = json.loads(out)["checks"]
    assert not checks["opr"]["pass"]
    code, _, err = run(capsys, "hom", "abs:1", "[0,1]")
    assert code == 1 and "type error" in err


def test_enclose(capsys):
    code, out, _ = run(capsys, "enclose", "--coeffs", "0,-1,1", "--domain", "[0,1]", "--depth", "1", "--json")
    obj = json.loads(out)
    assert obj["enclosure"]["payload"] == ["-3/4", "1/2"]
    assert obj["sampled_range"]["payload"] == ["-1/4", "0"]
    assert obj["sound"] is True


def test_conform_pass_and_json(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "conform", "--instance", "interval", "--cases", "50",
                       "--seed", "3", "--groups", "axioms,norm", "--json", str(path))
    assert code == 0 and out.endswith("passed (seed 3)")
    rep = json.loads(path.read_text())
    assert rep["seed"] == 3 and rep["instance"] == "interval"


def test_conform_failure_exits_two(capsys):
    code, out, _ = run(capsys, "conform", "--instance", "mutant:iv-swap", "--cases", "500", "--ids", "A15")
    assert code == 2 and "FAIL" in out and "counterexample" in out


def test_seed_from_environment(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("QALG_SEED", "77")
    path = tmp_path / "r.json"
    run(capsys, "conform", "--instance", "real", "--cases", "5", "--ids", "A01", "--json", str(path))
    assert json.loads(path.read_text())["seed"] == 77


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qalg", "eval", "{1,2}*{3}"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "u({3},{6})"
