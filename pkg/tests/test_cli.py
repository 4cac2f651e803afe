import json
import subprocess
import sys

import pytest

from conftest import GOLDEN
from dhmyerson.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bridges_on_example(capsys):
    code, out, _ = run(capsys, "bridges", "--input", str(GOLDEN / "example.json"))
    assert code == 0
    rows = json.loads(out)["bridges"]
    assert [r["edge"] for r in rows if r["bridge"]] == ["e1", "e3", "e4"]


def test_myerson_empty_edges(capsys):
    code, out, _ = run(capsys, "myerson", "--input", str(GOLDEN / "empty-edges.json"))
    assert code == 0
    assert json.loads(out)["payoffs"] == ["3/1", "1/2", "-2/1", "0/1"]


@pytest.mark.parametrize("name", ["weak-01", "weak-02", "weak-03"])
def test_verify_axioms_weak_corpus(capsys, name):
    code, _, _ = run(capsys, "verify-axioms", "--semantics", "weak", "--input", str(GOLDEN / "corpus" / f"{name}.json"))
    assert code == 0


def test_verify_exit_codes(capsys):
    code, _, _ = run(capsys, "verify-axioms", "--input", str(GOLDEN / "example-k2.json"))
    assert code == 1
    code, _, _ = run(capsys, "verify-theorem", "--input", str(GOLDEN / "example-k2.json"))
    assert code == 0
    code, _, _ = run(capsys, "verify-theorem", "--input", str(GOLDEN / "example.json"))
    assert code == 1


def test_nonconvex_theorem_is_input_error(capsys, tmp_path):
    gen = tmp_path / "inst.json"
    code, out, _ = run(capsys, "generate", "--game", "table", "--seed", "4")
    gen.write_text(out)
    code, _, err = run(capsys, "verify-theorem", "--input", str(gen))
    assert code == 2 and "not convex" in err


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"players": 2, "edges": [{"tail": [], "head": [1]}], "game": {"type": "additive", "weights": [1, 1]}}')
    code, _, err = run(capsys, "myerson", "--input", str(bad))
    assert code == 2 and "$.edges[0].tail" in err
    code, _, _ = run(capsys, "myerson", "--input", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, err = run(capsys, "safety", "--edge", "e9", "--input", str(GOLDEN / "example.json"))
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_critical_and_components(capsys):
    ex = str(GOLDEN / "example.json")
    code, out, _ = run(capsys, "critical", "--from", "5", "--to", "2", "--input", ex)
    assert json.loads(out)["critical"] == [1, 2, 5]
    code, out, _ = run(capsys, "critical", "--from", "1", "--to", "5", "--input", ex)
    assert json.loads(out)["critical"] is None
    code, out, _ = run(capsys, "components", "--table", "--input", ex)
    assert out == "1 2 4\n3\n5\n"


def test_edge_by_position(capsys):
    ex = str(GOLDEN / "example-k2.json")
    _, by_label, _ = run(capsys, "safety", "--edge", "e2", "--input", ex)
    _, by_position, _ = run(capsys, "safety", "--edge", "2", "--input", ex)
    assert by_label == by_position
    assert json.loads(by_label)["verdict"] == "fails"


def test_generate_is_deterministic(capsys):
    _, a, _ = run(capsys, "generate", "--seed", "7", "--eps", "1/4")
    _, b, _ = run(capsys, "generate", "--seed", "7", "--eps", "1/4")
    assert a == b
    assert json.loads(a)["game"]["eps"] == "1/4"


def test_estimate_and_stdin():
    text = (GOLDEN / "example-k2.json").read_text()
    cmd = [sys.executable, "-m", "dhmyerson", "estimate", "--samples", "2000", "--seed", "3"]
    a = subprocess.run(cmd, input=text, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, input=text, capture_output=True, text=True, check=True).stdout
    assert a == b
    assert json.loads(a)["samples"] == 2000


def test_table_output(capsys):
    code, out, _ = run(capsys, "myerson", "--table", "--input", str(GOLDEN / "example-k2.json"))
    assert "14/5" in out and out.startswith("player")
