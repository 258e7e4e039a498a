import io
import json

import pytest

from circspec.cli import main
from circspec.core import ConnectionSet


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_spectrum_json():
    code, rec = run_json("spectrum", "--n", "12", "--gens", "1,2")
    assert code == 0
    assert rec["set"] == [1, 2, 10, 11]
    assert rec["eigenvalues"][0] == pytest.approx(4)
    assert rec["inertia"] == [3, 6, 3]
    assert len(rec["power_sums"]) == 8
    assert ConnectionSet.from_dict({"n": rec["n"], "set": rec["set"]}).n == 12


def test_spectrum_triangle():
    code, rec = run_json("spectrum", "--n", "3", "--gens", "1")
    assert code == 0
    assert rec["eigenvalues"] == pytest.approx([2, -1, -1])


def test_spectrum_csv_and_table():
    code, text = run("spectrum", "--n", "6", "--gens", "1", "--format", "csv")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "j,eigenvalue" and len(lines) == 7
    code, text = run("spectrum", "--n", "6", "--gens", "1")
    assert code == 0 and "inertia" in text


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "12", "--gens", "0"],
    ["spectrum", "--n", "12", "--gens", "a"],
    ["spectrum", "--n", "12"],
    ["nonsense"],
    ["family", "thm31"],
    ["search", "--n", "12", "--max-s", "1", "--workers", "0"],
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 1


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "12", "--gens", "12"],
    ["check-pair", "--n", "12", "--gens1", "1", "--gens2", "20"],
    ["search", "--n", "3", "--max-s", "1"],
])
def test_domain_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_family_hypothesis_message(capsys):
    code, _ = run("family", "thm31", "--k", "5")
    assert code == 2
    assert "k ≥ 6" in capsys.readouterr().err


def test_check_pair_examples():
    _, rec = run_json("check-pair", "--n", "12", "--gens1", "1,2", "--gens2", "4,5")
    assert rec["class"] == "ncsc" and rec["inertia1"] != rec["inertia2"]
    _, rec = run_json("check-pair", "--n", "5", "--gens1", "1", "--gens2", "2")
    assert rec["isomorphic"] == "yes" and rec["multiplier"] == 2
    _, rec = run_json("check-pair", "--n", "12", "--gens1", "1", "--gens2", "2")
    assert not rec["cospectral"] and not rec["singularly_cospectral"]


def test_check_pair_verdict_exit():
    assert run("check-pair", "--n", "5", "--gens1", "1", "--gens2", "2", "--verdict-exit")[0] == 10
    assert run("check-pair", "--n", "12", "--gens1", "1,2", "--gens2", "4,5", "--verdict-exit")[0] == 12
    assert run("check-pair", "--n", "12", "--gens1", "1", "--gens2", "2", "--verdict-exit")[0] == 13


def test_family_examples():
    _, rec = run_json("family", "thm31", "--k", "6")
    assert (rec["set1"], rec["set2"]) == ([1, 2, 10, 11], [4, 5, 7, 8])
    assert rec["class"] == "ncsc" and not rec["same_inertia"]
    _, rec = run_json("family", "thm32", "--alpha", "0")
    assert rec["n"] == 18 and rec["class"] == "ncsc" and rec["same_inertia"]
    _, rec = run_json("family", "lemma21", "--n", "14", "--gens", "1,3")
    assert rec["set2"] == [4, 6, 8, 10]
    _, rec = run_json("family", "thm44", "--k", "10", "--s", "7")
    assert rec["singularly_cospectral"] and not rec["cospectral"]


def test_search_output(tmp_path):
    code, text = run("search", "--n", "12", "--max-s", "2")
    assert code == 0
    lines = [json.loads(line) for line in text.splitlines()]
    assert lines[-1]["summary"] and not lines[-1]["truncated"]
    assert {"n": 12, "set1": [1, 2, 10, 11], "set2": [4, 5, 7, 8], "cospectral": False, "sc": True,
            "same_inertia": False, "isomorphic": "no"} in lines[:-1]
    target = tmp_path / "out.ndjson"
    assert run("search", "--n", "12", "--max-s", "2", "--output", str(target))[0] == 0
    assert target.read_text() == text


def test_search_prime_order_empty():
    _, text = run("search", "--n", "7", "--max-s", "3")
    lines = text.splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["ncsc_found"] == 0


def test_search_truncation_and_csv():
    _, text = run("search", "--n", "12", "--max-s", "2", "--max-pairs", "5")
    assert json.loads(text.splitlines()[-1])["truncated"]
    _, text = run("search", "--n", "12", "--max-s", "2", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "n,set1,set2,cospectral,sc,same_inertia,isomorphic"
    assert "12,1 2 10 11,4 5 7 8,false,true,false,no" in lines
    assert lines[-1].startswith("# ")


def test_verify_prime():
    code, text = run("verify", "prime", "--max-p", "13")
    report = json.loads(text)
    assert code == 0 and report["passed"]
    assert all(c["violations"] == [] for c in report["checks"])


def test_verify_failure_exit(monkeypatch):
    from circspec import cli, verify

    def broken(*args, **kwargs):
        return [verify.Check("always fails", 1, ["forced"])]

    monkeypatch.setattr(cli, "run_suite", broken)
    assert run("verify", "prime")[0] == 3


def test_deterministic_json():
    a = run("spectrum", "--n", "20", "--gens", "1,3,4", "--format", "json")
    b = run("spectrum", "--n", "20", "--gens", "1,3,4", "--format", "json")
    assert a == b
