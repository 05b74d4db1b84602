import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rainbow.cli import main
from rainbow.generators import proper_bipartite_coloring
from rainbow.graph import parse_ecg, serialize_ecg

DATA = Path(__file__).parent / "data"
K3 = "ecg 1 3 3\n0 1 1\n1 2 2\n0 2 3\n"


@pytest.fixture
def files(tmp_path):
    k3 = tmp_path / "k3.ecg"
    k3.write_text(K3)
    k33 = tmp_path / "k33.ecg"
    k33.write_text(serialize_ecg(proper_bipartite_coloring(3)))
    return {"k3": str(k3), "k33": str(k33), "dir": tmp_path}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_find_triangle(capsys, files):
    assert run(capsys, "find", files["k3"], "--what", "triangle")[:2] == (0, "0 1 2\n")
    assert run(capsys, "find", files["k33"], "--what", "triangle")[:2] == (1, "certified absent\n")


def test_find_other_kinds(capsys, files):
    code, out, _ = run(capsys, "find", files["k3"], "--what", "triangle", "--through", "1")
    assert (code, out) == (0, "1 0 2\n")
    # three colors cannot make a rainbow C4
    code, out, _ = run(capsys, "find", files["k33"], "--what", "c4", "--through", "0")
    assert (code, out) == (1, "certified absent\n")
    code, out, _ = run(capsys, "find", files["k33"], "--what", "path")
    assert code == 0 and len(out.split()) == 4
    assert run(capsys, "find", files["k33"], "--what", "cycle", "--k", "6")[:2] == (1, "certified absent\n")
    code, out, err = run(capsys, "find", files["k33"], "--what", "cycle", "--k", "4", "--budget", "2")
    assert (code, out) == (3, "indeterminate\n") and "budget" in err


def test_find_usage_errors(capsys, files):
    assert run(capsys, "find", files["k3"], "--what", "cycle")[0] == 2
    assert run(capsys, "find", files["k3"], "--what", "path", "--through", "0")[0] == 2
    assert run(capsys, "find", files["k3"], "--what", "triangle", "--through", "9")[0] == 2
    assert run(capsys, "find", files["k3"], "--what", "cycle", "--k", "2")[0] == 2
    assert run(capsys, "find", files["k3"], "--what", "star")[0] == 2
    assert run(capsys, "find", str(files["dir"] / "missing.ecg"), "--what", "triangle")[0] == 2
    assert run(capsys)[0] == 2


def test_malformed_input_reports_line(capsys, files):
    bad = files["dir"] / "bad.ecg"
    bad.write_text("ecg 1 3 2\n0 1 1\n1 q 2\n")
    code, out, err = run(capsys, "check", str(bad))
    assert code == 2 and out == "" and "line 3" in err


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", files["k3"])
    assert code == 0
    assert out.splitlines() == ["n 3", "m 3", "delta 2", "0 2", "1 2", "2 2"]


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(K3))
    assert run(capsys, "find", "-", "--what", "triangle")[:2] == (0, "0 1 2\n")


def test_audit(capsys):
    code, out, err = run(
        capsys, "audit", str(DATA / "forced_color_k4.ecg"), "--path", "0,3,2,1,6,5,4,7", "--k", "4"
    )
    assert code == 1
    d = json.loads(out)
    assert d["failures"] == ["lemma 3.4"] and "forced-color" in err
    assert run(capsys, "audit", str(DATA / "forced_color_k4.ecg"), "--path", "0,3,x", "--k", "4")[0] == 2
    assert run(capsys, "audit", str(DATA / "forced_color_k4.ecg"), "--path", "0,3,2", "--k", "4")[0] == 2


def test_gen(capsys, files, monkeypatch):
    code, out, _ = run(capsys, "gen", "--family", "targeted_delta", "--n", "9", "--target-delta", "7", "--seed", "1")
    assert code == 0 and out == (DATA / "targeted_9_7_seed1.ecg").read_text()
    target = files["dir"] / "out.ecg"
    assert run(capsys, "gen", "--family", "proper_bipartite", "--n", "6", "-o", str(target))[0] == 0
    assert parse_ecg(target.read_text()) == proper_bipartite_coloring(3)
    monkeypatch.setenv("RAINBOW_SEED", "1")
    code, out2, _ = run(capsys, "gen", "--family", "targeted_delta", "--n", "9", "--target-delta", "7")
    assert out2 == out
    assert run(capsys, "gen", "--family", "targeted_delta", "--n", "9", "--target-delta", "9")[0] == 2


def test_verify_deterministic(capsys, monkeypatch):
    monkeypatch.delenv("RAINBOW_SEED", raising=False)
    first = run(capsys, "verify", "--theorem", "RT_VERTEX", "--trials", "5", "--seed", "42")
    second = run(capsys, "verify", "--theorem", "RT_VERTEX", "--trials", "5", "--seed", "42")
    assert first[0] == 0 and first[1] == second[1]
    d = json.loads(first[1])
    assert d["seeds"] == {"base": 42} and d["counts"]["verified"] == 5
    monkeypatch.setenv("RAINBOW_SEED", "42")
    assert run(capsys, "verify", "--theorem", "RT_VERTEX", "--trials", "5")[1] == first[1]
    # the flag wins over the environment
    assert run(capsys, "verify", "--theorem", "RT_VERTEX", "--trials", "5", "--seed", "0")[1] != first[1]


def test_verify_errors_and_exit_codes(capsys, monkeypatch):
    assert run(capsys, "verify", "--theorem", "MAIN_COMPLETE")[0] == 2
    assert run(capsys, "verify", "--theorem", "NOPE")[0] == 2
    monkeypatch.setenv("RAINBOW_SEED", "abc")
    assert run(capsys, "verify", "--theorem", "RT_HALF", "--trials", "2")[0] == 2
    monkeypatch.delenv("RAINBOW_SEED")
    code, out, _ = run(capsys, "verify", "--theorem", "LONGCYC_CKRY_FIXED", "--n", "12",
                       "--trials", "3", "--budget", "1")
    assert code == 3 and json.loads(out)["counts"]["indeterminate"] == 3


def test_verify_family_and_output(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--theorem", "RT_HALF", "--family", "complete_random",
                       "--palette", "2", "--n", "6", "--trials", "4", "-o", str(target))
    assert code == 0 and out == ""
    d = json.loads(target.read_text())
    assert d["generator"] == {"family": "complete_random", "n": 6, "palette": 2}


def test_mine(capsys):
    args = ["mine", "--theorem", "RT_HALF", "--n-min", "3", "--n-max", "5", "--seed", "4"]
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a[0] == 0 and a[1] == b[1]
    assert json.loads(a[1])["tightness"][1] == {"n": 4, "max_delta_with_failure": 2}
    args = ["mine", "--theorem", "C4_VERTEX", "--mode", "random", "--n-min", "6", "--n-max", "8",
            "--samples", "10", "--palette", "5", "--jobs", "2"]
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    assert run(capsys, "mine", "--theorem", "RT_HALF", "--n-min", "3", "--n-max", "9")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "rainbow", "find", files["k3"], "--what", "triangle"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "0 1 2\n"
