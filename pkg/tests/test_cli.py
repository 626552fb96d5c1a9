import json
import subprocess
import sys

import pytest

from lmrttg import Graph, TwoTerminalGraph, to_json
from lmrttg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_json(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "6", "--m", "6", "--family", "c1")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 6 and len(obj["edges"]) == 6


def test_construct_dot(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "6", "--m", "7", "--family", "s2", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {") and out.count("--") == 7


def test_construct_missing_family_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "construct", "--n", "6", "--m", "6", "--family", "c3")
    assert code == 2
    assert "no member" in err


def test_construct_two_terminal(capsys):
    code, out, _ = run_cli(capsys, "construct", "--n", "6", "--m", "9", "--family", "g")
    assert code == 0
    assert json.loads(out)["terminals"] == [0, 1]


def test_invariants_command(tmp_path, capsys):
    path = tmp_path / "k4.json"
    path.write_text(to_json(Graph.complete(4)))
    code, out, _ = run_cli(capsys, "invariants", "--graph", str(path))
    assert code == 0
    data = json.loads(out)
    assert data == {"m1": 36, "m2": 54, "k3": 4, "p3": 12, "p4": 12, "h_value": 30, "m": 6}


def test_classify_rows(capsys):
    code, out, _ = run_cli(capsys, "classify", "--n", "6..6", "--istar-only")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,sign,in_J,k,j,kp,jp,k_n,q_n,R_n"
    ms = [int(line.split(",")[1]) for line in lines[1:]]
    assert ms == [0, 1, 2, 3, 6, 7, 8, 9, 12, 13, 14, 15]


def test_reliability_command(tmp_path, capsys):
    tg = TwoTerminalGraph(Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]), 0, 1)
    path = tmp_path / "g.json"
    path.write_text(to_json(tg))
    code, out, _ = run_cli(capsys, "reliability", "--graph", str(path), "--at", "1/2")
    assert code == 0
    data = json.loads(out)
    assert data["reliability"] == "23/32"
    assert data["n_vector"] == [1, 6, 10, 5, 1]


def test_reliability_needs_terminals(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(to_json(Graph.complete(3)))
    code, _, err = run_cli(capsys, "reliability", "--graph", str(path), "--at", "1/2")
    assert code == 2 and "terminals" in err


def test_verify_brute_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "brute", "--n", "4", "--m", "5", "--no-meta")
    assert code == 0
    data = json.loads(out)
    assert data["unique"] and data["matches_construction"]
    assert "elapsed" not in data


def test_verify_brute_unverifiable_range_fails(capsys):
    # below the covered edge range there is no construction to match
    code, out, _ = run_cli(capsys, "verify", "brute", "--n", "4", "--m", "3", "--no-meta")
    assert code == 1
    assert json.loads(out)["matches_construction"] is None


def test_verify_sturm(capsys):
    code, out, _ = run_cli(capsys, "verify", "sturm", "--no-meta")
    assert code == 0
    assert json.loads(out)["roots_in_436_437"] == 1


def test_verify_seven_pairs_alias(capsys):
    code_a, out_a, _ = run_cli(capsys, "verify", "lemma7", "--no-meta", "--format", "json")
    assert code_a == 0
    assert json.loads(out_a)["verdict"] == "pass"


def test_verify_identities_flags(capsys):
    code, out, _ = run_cli(capsys, "verify", "identities", "--seed", "3", "--samples", "25", "--format", "json", "--no-meta")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"


def test_byte_stable_outputs(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run_cli(capsys, "classify", "--n", "5..6")
        outs.add(out)
    assert len(outs) == 1
    outs = set()
    for _ in range(2):
        _, out, _ = run_cli(capsys, "verify", "istar-scan", "--from", "8", "--to", "12", "--no-meta", "--format", "json")
        outs.add(out)
    assert len(outs) == 1


def test_verify_all_desk_scale(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--max-n", "4", "--jobs", "1", "--no-meta")
    assert code == 0
    assert "FAIL" not in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lmrttg", "construct", "--n", "5", "--m", "5", "--family", "s1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 5
