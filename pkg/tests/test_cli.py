import json
import subprocess
import sys
from pathlib import Path

import pytest

from golden_cases import CASES
from qclifford.cli import RENDER, main

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_text(name, capsys):
    code, out, _ = run(CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_json_round_trip(name, capsys):
    code, out, _ = run(CASES[name] + ["--output", "json"], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
    doc = json.loads(out)
    assert json.dumps(doc, ensure_ascii=False, sort_keys=True) + "\n" == out
    # the text form is a pure function of the JSON document
    assert RENDER[CASES[name][0]](doc) == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


@pytest.mark.parametrize("which", ["1", "2", "3", "4", "5", "6"])
def test_tables_deterministic(which, capsys):
    outs = {run(["tables", which], capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_classify_spec_examples(capsys):
    _, out, _ = run(["classify", "--family", "Cl:0,3", "--field", "III"], capsys)
    assert "type=-" in out and "(M(2,F)^{⊗0} ⊗ H)^{2}" in out and "dim=8" in out
    _, out, _ = run(["classify", "--family", "E:10"], capsys)
    assert "type=+" in out and "M(2,F)^{⊗5}" in out and "dim=1024" in out


def test_lie_spec_examples(capsys):
    doc = json.loads(run(["lie", "--family", "E:8", "--output", "json"], capsys)[1])
    assert doc["quotient"]["size"] == 16 and doc["quotient_dim"] == 120 and doc["closure_dim"] == 120


def test_classify_from_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("vertex a black\nvertex b black\nvertex c black\nedge a b\nedge b c\nedge a c\n")
    code, out, _ = run(["classify", str(f)], capsys)
    assert code == 0 and out.startswith("n=2 r=1 type=-")


def test_mul_from_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("vertex v black\n")
    code, out, _ = run(["mul", str(f), "v v"], capsys)
    assert code == 0 and out == "(-1) 1\n"


def test_exit_codes(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n")
    assert run(["classify", str(empty)], capsys)[0] == 2
    assert run(["classify", str(tmp_path / "missing.txt")], capsys)[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex a black 0\n")
    assert run(["classify", str(bad)], capsys)[0] == 2
    split = tmp_path / "split.txt"
    split.write_text("vertex a black\nvertex b black\n")
    assert run(["lie", str(split)], capsys)[0] == 3
    assert run(["spin", str(split)], capsys)[0] == 4
    assert run(["spin", "--family", "Cl:1,1"], capsys)[0] == 4
    assert run(["mul", "--family", "A:2", "v1", "nope"], capsys)[0] == 2
    assert run(["tables", "7"], capsys)[0] == 2
    assert run(["classify"], capsys)[0] == 2


def test_disconnected_classification_is_allowed(tmp_path, capsys):
    split = tmp_path / "split.txt"
    split.write_text("vertex a black\nvertex b black\n")
    code, out, _ = run(["classify", str(split)], capsys)
    assert code == 0 and "type=0" in out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qclifford.cli", "mul", "--family", "A:2",
                           "v1", "v2", "v1", "v2"], capture_output=True, text=True, check=True)
    assert proc.stdout == "(-1) 1\n"
