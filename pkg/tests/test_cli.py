import json
import subprocess
import sys

from kronext.cli import run
from kronext.symbols import parse_symbol


def out_lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


def test_product(capsys):
    assert run(["product", "||I0", "P0||"]) == 0
    assert out_lines(capsys) == ["| (1)@1 |", "P0 || I0"]


def test_product_json_round_trips(capsys):
    assert run(["product", "|| I1", "| (2)@1 |", "--json"]) == 0
    syms = json.loads(capsys.readouterr().out)
    assert len(syms) == 3
    for text in syms:
        assert str(parse_symbol(text)) == text


def test_chain(capsys):
    assert run(["chain", "(2,0)"]) == 0
    assert sorted(out_lines(capsys)) == ["|| I1 I1", "|| I2 I0"]


def test_orderings(capsys):
    assert run(["dominance", "(2,2)", "(3,1)"]) == 0
    assert run(["wdom", "(0,2)", "(1,1)"]) == 0
    assert run(["genmaj", "(3,2,1)", "(2,1)", "(3)", "--json"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("true\nfalse\n")
    info = json.loads(out[len("true\nfalse\n"):])
    assert info == {"result": True, "h": [1], "x": [3]}


def test_embed_and_mincoker(capsys):
    assert run(["embed", "(2,1)", "(3,2,1)"]) == 0
    assert run(["mincoker", "(2,1)", "(3,2,1)"]) == 0
    assert run(["mincoker", "(1)", "(0,0)"]) == 0
    assert out_lines(capsys) == ["true", "(3)", "none"]


def test_lr(capsys):
    assert run(["lr", "(2,1)", "(2,1)", "(3,2,1)"]) == 0
    assert out_lines(capsys) == ["2"]
    assert run(["lr", "(1)", "(1)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == [
        {"nu": [2], "coefficient": 1},
        {"nu": [1, 1], "coefficient": 1},
    ]


def test_classsize(capsys):
    assert run(["classsize", "| (1)@1 (1)@1 |", "2"]) == 0
    assert out_lines(capsys) == ["3"]


def test_classify(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2 1 1\n1\n\n0\n")
    assert run(["classify", str(f)]) == 0
    assert out_lines(capsys)[0] == "| (1)@1 |"
    g = tmp_path / "n.txt"
    g.write_text("3 2 2\n1 0\n0 0\n\n0 0\n0 0\n")
    assert run(["classify", str(g), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["symbol"] == "P0 | (1)@1 | I0"


def test_verify_small(tmp_path, capsys):
    report = tmp_path / "r.json"
    assert run(["verify", "--q", "2,3", "--maxdim", "2,2", "--report", str(report)]) == 0
    assert out_lines(capsys)[-1] == "all match"
    data = json.loads(report.read_text())
    assert data["ok"] and data["cross_field"][0]["differing_pairs"] == []


def test_usage_errors(capsys, tmp_path):
    assert run(["product", "P1 |", "||"]) == 2
    assert run(["chain", "(1,2)"]) == 2
    assert run(["embed", "(1)", "(1,0)", "--n", "3"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1 1\n1\n")
    assert run(["classify", str(bad)]) == 2
    assert run(["nonsense"]) == 2
    assert run([]) == 2
    err = capsys.readouterr().err
    assert "position" in err


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "kronext", "product", "|| I0", "|| I2"], capture_output=True, text=True
    )
    assert done.returncode == 0
    assert done.stdout.split("\n")[:2] == ["|| I1 I1", "|| I2 I0"]
