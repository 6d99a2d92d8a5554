import json
import subprocess
import sys

import pytest

from twoweight.cli import parse_weights, run
from twoweight.errors import ParseError
from twoweight.generators import path


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_solve_negative_exit_code(capsys):
    assert run(["solve", "--gen", "C:6"]) == 1
    out = _json(capsys)
    assert out["status"] == "NoWeightingExists"
    assert out["notes"]["certificate"]["assignments"] == 64


def test_solve_from_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("8 15\n" + "".join(f"{i} {j}\n" for i in range(3) for j in range(3, 8)))
    assert run(["solve", "-i", str(f)]) == 0
    out = _json(capsys)
    assert out["status"] == "Solved" and out["strategy"] == "three-connected"
    assert len(out["weights"]) == 15


def test_solve_json_input_and_output_file(tmp_path):
    g = tmp_path / "g.json"
    run(["gen", "--gen", "Q:3", "--format", "json", "-o", str(g)])
    out = tmp_path / "r.json"
    assert run(["solve", "-i", str(g), "--format", "json", "-o", str(out)]) == 0
    assert json.loads(out.read_text())["strategy"] == "parity"


def test_verify(tmp_path, capsys):
    w = tmp_path / "w.txt"
    w.write_text("0 1 1\n1 2 2\n")
    assert run(["verify", "--gen", "P:3", "--weights", str(w)]) == 0
    assert _json(capsys)["colors"] == {"0": 1, "1": 3, "2": 2}
    w.write_text("0 1 1\n1 2 1\n2 3 1\n")
    assert run(["verify", "--gen", "P:4", "--weights", str(w)]) == 1
    assert _json(capsys)["conflicts"] == [[1, 2]]


def test_realize(tmp_path, capsys):
    t = tmp_path / "t.json"
    t.write_text(json.dumps({"group": "Z3", "targets": {"0": [1], "1": [1], "2": [1]}}))
    assert run(["realize", "--gen", "K:3", "--targets", str(t)]) == 0
    out = _json(capsys)
    assert out["method"] == "group" and out["colors"] == {"0": [1], "1": [1], "2": [1]}
    t.write_text(json.dumps({"group": "Z2", "targets": {"0": [1], "1": [0], "2": [0]}}))
    assert run(["realize", "--gen", "K:3", "--targets", str(t)]) == 1
    assert _json(capsys)["realized"] is False
    t.write_text(json.dumps({"group": "Z2", "targets": {str(v): [v % 2] for v in range(6)}}))
    assert run(["realize", "--gen", "C:6", "--targets", str(t)]) == 1
    capsys.readouterr()
    t.write_text(json.dumps({"group": "Z2", "targets": {"0": [1], "1": [0], "2": [1], "3": [0]}}))
    assert run(["realize", "--gen", "P:4", "--targets", str(t)]) == 0
    assert _json(capsys)["method"] == "parity"


def test_oracle(capsys):
    assert run(["oracle", "--gen", "C:10"]) == 1
    out = _json(capsys)
    assert out["assignments"] == out["covered"] == 1024
    assert run(["oracle", "--gen", "K:3", "-k", "3"]) == 0
    assert _json(capsys)["exists"]


def test_budget_exceeded(capsys):
    assert run(["oracle", "--gen", "Kmn:5,5", "--budget", "100"]) == 2
    assert "budget" in capsys.readouterr().err


def test_census(tmp_path, capsys):
    summary = tmp_path / "s.csv"
    assert run(["census", "--max-n", "5", "--summary", str(summary)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 3 + 5
    assert summary.read_text().startswith("n,strategy")


def test_gen_edgelist(capsys):
    assert run(["gen", "--gen", "theta:3,3,3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "8 9"


def test_ci_requires_seed(capsys):
    assert run(["solve", "--gen", "C:6", "--ci"]) == 2
    assert run(["solve", "--gen", "C:6", "--ci", "--seed", "1"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["solve"],
        ["solve", "--gen", "C:6", "-i", "x"],
        ["solve", "-i", "/nonexistent/file"],
        ["solve", "--gen", "nope:1"],
    ],
)
def test_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_parse_error_reports_line(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n0 1\n1 1\n")
    assert run(["solve", "-i", str(f)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_parse_weights_rejects_non_edges():
    with pytest.raises(ParseError):
        parse_weights("0 2 1\n", path(3))
    with pytest.raises(ParseError):
        parse_weights("0 1 1\n1 0 2\n", path(3))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twoweight", "solve", "--gen", "Q:3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "Solved"
