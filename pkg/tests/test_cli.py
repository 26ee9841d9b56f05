from __future__ import annotations

import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from isolationlab import verify
from isolationlab.cli import RunConfig, UsageError, parse_range, run
from isolationlab.graph import cycle_graph, write_graph6
from isolationlab.verify import CLAIM_IDS, FAIL, Outcome


def call(*argv, stdin: str = ""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def c6_file(tmp_path):
    p = tmp_path / "c6.g6"
    p.write_text(write_graph6(cycle_graph(6)) + "\n")
    return str(p)


def test_iota_on_c6(c6_file):
    code, out, _ = call("iota", "--input", c6_file)
    assert code == 0
    assert out.split("\t")[:2] == ["2", "{0,2}"]


def test_iota_json(c6_file):
    code, out, _ = call("iota", "--input", c6_file, "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"graph6": "EhEG", "n": 6, "iota": 2, "witness": [0, 2]}]


def test_gamma_from_stdin():
    code, out, _ = call("gamma", "--input", "-", stdin="C]\n")
    assert code == 0 and out.startswith("2\t")


def test_recognize_c9(tmp_path):
    p = tmp_path / "c9.g6"
    p.write_text(write_graph6(cycle_graph(9)) + "\n")
    code, out, _ = call("recognize", "--input", str(p))
    assert code == 0
    assert "unicyclic: yes; in 𝒰: no" in out
    assert "extremal: yes (exceptional)" in out


def test_verify_caro_example():
    code, out, _ = call("verify", "thm-caro", "--class", "connected", "--n", "3..8")
    assert code == 0
    assert "PASS" in out and "exceptions=DLo" in out
    assert write_graph6(cycle_graph(5)) == "Dhc"


def test_verify_json_matches_schema():
    schema = json.loads(resources.files("isolationlab").joinpath("report.schema.json").read_text())
    code, out, _ = call("verify", "gadgets", "--format", "json")
    assert code == 0
    for obj in json.loads(out):
        jsonschema.validate(obj, schema)


def test_verify_failure_exit_code(monkeypatch, c6_file):
    monkeypatch.setitem(verify.CHECKS, "caro", lambda g: Outcome(FAIL, "forced"))
    code, out, _ = call("verify", "thm-caro", "--input", c6_file)
    assert code == 1 and "FAIL" in out


def test_unknown_claim_lists_ids():
    code, _, err = call("verify", "thm-missing")
    assert code == 2
    for cid in CLAIM_IDS:
        assert cid in err


def test_bad_graph6_line(tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("EBj?\nD!!\n")
    code, _, err = call("iota", "--input", str(p))
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize("argv", [
    ("iota", "--input", "x", "--class", "tree", "--n", "3"),
    ("iota", "--class", "tree"),
    ("iota", "--class", "tree", "--n", "3", "--jobs", "0"),
    ("enumerate",),
    ("enumerate", "--class", "planar", "--n", "3"),
    ("enumerate", "--class", "tree", "--n", "5..2"),
    ("gen-family", "--base", "A_", "--kinds", "P3,K4"),
    ("verify", "all", "--class", "tree", "--n", "3"),
    ("frobnicate",),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_oversized_enumeration_is_an_error():
    code, _, err = call("enumerate", "--class", "connected", "--n", "9")
    assert code == 2 and "n <= 8" in err


def test_enumerate_counts():
    code, out, _ = call("enumerate", "--class", "tree", "--n", "1..8")
    assert code == 0 and len(out.split()) == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23


@pytest.mark.parametrize("family", ["G", "T", "U", "B"])
def test_gen_family_pipeline(family):
    code, emitted, _ = call("gen-family", "--family", family, "--class", "connected", "--n", "1..2")
    assert code == 0 and emitted
    code, out, _ = call("recognize", "--input", "-", "--format", "json", stdin=emitted)
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == len(emitted.split())
    key = {"G": "in_G", "T": "in_T", "U": "in_U", "B": "in_B"}[family]
    assert all(r[key] and r["extremal"] for r in rows)


def test_gen_family_explicit_kinds():
    code, out, _ = call("gen-family", "--base", "A_", "--kinds", "P3,C3", "--format", "json")
    assert code == 0
    [row] = json.loads(out)
    assert row["decomposition"]["assignment"][1]["kind"] == "C3"


def test_output_is_byte_identical_across_runs():
    argv = ("recognize", "--class", "unicyclic", "--n", "6", "--format", "json")
    assert call(*argv) == call(*argv)
    argv = ("verify", "prop-family", "--seed", "9", "--format", "json")
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == 0


def test_jobs_do_not_change_output():
    serial = call("verify", "thm-tree", "--class", "tree", "--n", "1..10")
    parallel = call("verify", "thm-tree", "--class", "tree", "--n", "1..10", "--jobs", "2")
    assert serial == parallel


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig("iota", input_path="a", graph_class="tree", orders=[3])
    assert RunConfig("iota").seed == RunConfig("gamma").seed
    assert parse_range("3..5") == [3, 4, 5] and parse_range("4") == [4]


def test_module_entry_point(c6_file):
    res = subprocess.run([sys.executable, "-m", "isolationlab", "iota", "--input", c6_file],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.startswith("2\t")
