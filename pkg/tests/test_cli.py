import json

import pytest

from krlab.cli import EXIT_ERROR, EXIT_FALSIFIED, EXIT_PASS, EXIT_SCOPE, main
from krlab.crystal import graph_from_json, graph_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_json_round_trip(capsys, tmp_path):
    target = tmp_path / "b.json"
    code, _, _ = run(capsys, "generate", "A2~1", "1", "1", "--json", "-o", str(target))
    assert code == EXIT_PASS
    text = target.read_text(encoding="utf-8").rstrip("\n")
    nodes, edges = graph_from_json(text)
    assert len(nodes) == 3 and len(edges) == 3
    assert graph_to_json(nodes, edges) == text


def test_generate_dot(capsys):
    code, out, _ = run(capsys, "generate", "A2~1", "1", "1", "--dot")
    assert code == EXIT_PASS and out.count("->") == 3


def test_generate_virtual_node_count(capsys):
    code, out, _ = run(capsys, "generate", "A4~2", "1", "1", "--json")
    assert code == EXIT_PASS and len(json.loads(out)["nodes"]) == 5


@pytest.mark.parametrize("argv", [
    ("generate", "D4~1", "1", "1"),
    ("generate", "B3~1", "1", "1"),
    ("generate", "E6~1", "1", "1"),
    ("verify", "axioms", "C2~1", "1", "1"),
])
def test_out_of_scope(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_SCOPE and "out of scope" in err


@pytest.mark.parametrize("argv", [
    ("generate", "Q2~1", "1", "1"),
    ("generate", "A2~1", "5", "1"),
    ("rmatrix", "A2~1", "1,1", "1,1", "9 | 1"),
    ("rmatrix", "A2~1", "1", "1,1", "1 | 1"),
    ("verify", "nosuch"),
    ("character", "A4~2", "2", "0"),
])
def test_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_ERROR and err.startswith("error:")


def test_rmatrix_command(capsys):
    code, out, _ = run(capsys, "rmatrix", "A2~1", "1,2", "1,1", "1^2 (x) 1 | 2", "--json")
    assert code == EXIT_ERROR
    code, out, _ = run(capsys, "rmatrix", "A2~1", "1,2", "1,1", "1^2 | 2", "--json")
    data = json.loads(out)
    assert code == EXIT_PASS
    assert data["image"] == "1 | 1 2" and data["oracle_agrees"] is True
    assert data["kind"] == "e" and data["word"] == [1, 0, 0, 0, 2, 1, 2, 1]


def test_paths_symbolic_and_executed(capsys):
    code, out, _ = run(capsys, "paths", "D7~1", "5", "4", "--partition", "4,2,2,1,1")
    assert code == EXIT_PASS and out.strip() == "(4, 2, 2, 1, 1): (f0f2f3f4f1f2f3)(f0^2f2^2f1^2)"
    code, _, err = run(capsys, "paths", "D7~1", "5", "4", "--partition", "2,2,1,1")
    assert code == EXIT_ERROR and "vertical dominoes" in err
    code, out, _ = run(capsys, "paths", "A4~2", "2", "2")
    assert code == EXIT_FALSIFIED and "(2, 1) FAILS" in out
    code, _, _ = run(capsys, "paths", "A4~2", "2", "2", "--variant", "transposed")
    assert code == EXIT_PASS
    code, out, _ = run(capsys, "paths", "C3~1", "2", "3", "--partition", "3,1", "--json")
    assert code == EXIT_PASS
    assert json.loads(out)["monomials"] == [{"partition": [3, 1], "monomial": "(f0^2f1^2)(f0^6)"}]


def test_character(capsys):
    code, out, _ = run(capsys, "character", "A4~2", "1", "1", "--json")
    data = json.loads(out)
    assert code == EXIT_PASS and data["dimension"] == 5 and data["matches_crystal"] is True
    code, out, _ = run(capsys, "character", "C2~1", "1", "2", "--json")
    assert code == EXIT_PASS and "matches_crystal" not in json.loads(out)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--seed", "7", "verify", "u", "A3~1", "2", "2", "--json")
    assert code == EXIT_PASS and json.loads(out)["ok"] is True


def test_verify_paths_red(capsys):
    code, _, _ = run(capsys, "verify", "paths", "A4~2", "2", "2")
    assert code == EXIT_FALSIFIED


def test_node_cap_is_an_error(capsys, monkeypatch):
    monkeypatch.setenv("KRLAB_NODE_CAP", "4")
    code, _, err = run(capsys, "generate", "A3~1", "2", "2")
    assert code == EXIT_ERROR and "error" in err
