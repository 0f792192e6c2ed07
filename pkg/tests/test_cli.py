"""End-to-end checks of the command-line interface.

Every test drives ``cli.main`` in-process and inspects the exit code plus
the emitted text or JSON.  One test shells out so that ``--jobs`` spawns
real worker processes and the report bytes can be compared across worker
counts.
"""

import dataclasses
import json
import os
import subprocess
import sys

import pytest

from qrr import cli
from qrr.identities import REGISTRY


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("QRR_TRUNC", raising=False)
    monkeypatch.delenv("QRR_ZERO_MILLIS", raising=False)


def run_cli(argv, capsys):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------


def test_list_ids(capsys):
    rc, out, _ = run_cli(["list"], capsys)
    assert rc == 0
    ids = out.splitlines()
    assert len(ids) == 38
    assert ids == sorted(ids)
    assert "ANDREWS1" in ids and "LIU1" in ids


def test_list_grids(capsys):
    rc, out, _ = run_cli(["list", "--grids"], capsys)
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 38
    andrews = next(l for l in lines if l.startswith("ANDREWS1"))
    assert "n=0..12" in andrews and "T=60" in andrews
    flagged = [l for l in lines if "(counterexample target)" in l]
    assert sorted(l.split()[0] for l in flagged) == ["LIU1", "LIU2"]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_text_grid(capsys):
    rc, out, _ = run_cli(
        ["verify", "--id", "andrews1", "--range", "n=0..3", "--trunc", "20"],
        capsys)
    assert rc == 0
    assert out.startswith("ANDREWS1")
    assert "4/4 equal" in out and "T=20" in out


def test_verify_single_value_range(capsys):
    rc, out, _ = run_cli(
        ["verify", "--id", "ANDREWS2", "--range", "n=2", "--trunc", "20"],
        capsys)
    assert rc == 0
    assert "1/1 equal" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "NOPE"],
    ["verify", "--id", "ANDREWS1", "--range", "n=3..1"],
    ["verify", "--id", "ANDREWS1", "--range", "z=0..2"],
    ["verify", "--id", "ANDREWS1", "--range", "n"],
    ["verify", "--id", "LMNRS3",
     "--range", "l=0,m=0,n=0,u=0,v=1", "--trunc", "10"],
    ["verify", "--id", "ANDREWS1", "--range", "n=0..1", "--trunc", "0"],
    ["counterexample", "--which", "liu1", "--a-exp", "0"],
    ["bailey", "--chain", "abcde1", "--exps", "1,2"],
    ["telescope"],
    ["binomial"],
    ["binomial", "--cor57", "1,2"],
])
def test_config_errors_exit_2(argv, capsys):
    rc, out, err = run_cli(argv, capsys)
    assert rc == 2
    assert err.startswith("error:")
    assert out == ""


def test_verify_json_schema(capsys):
    rc, out, _ = run_cli(
        ["verify", "--id", "ANDREWS1", "--range", "n=0..2",
         "--trunc", "15", "--format", "json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert doc["artifact_version"] == 1
    assert doc["command"] == "verify"
    assert doc["config"]["id"] == "ANDREWS1"
    assert doc["config"]["ranges"] == {"n": [0, 2]}
    assert doc["summary"] == {"total": 3, "passed": 3, "failed": 0}
    for rep in doc["reports"]:
        assert rep["id"] == "ANDREWS1"
        assert rep["trunc"] == 15
        assert rep["verdict"] == "EQUAL"
        assert rep["millis"] == 0.0
        assert "mismatch_index" not in rep
    assert [r["params"]["n"] for r in doc["reports"]] == [0, 1, 2]


def test_corrupted_registry_is_detected(monkeypatch, capsys):
    # cross-wire one identity's right side: the sweep must notice
    broken = dataclasses.replace(REGISTRY["ANDREWS1"], rhs=REGISTRY["ANDREWS2"].rhs)
    monkeypatch.setitem(REGISTRY, "ANDREWS1", broken)
    rc, out, _ = run_cli(
        ["verify", "--id", "ANDREWS1", "--range", "n=1..2",
         "--trunc", "15", "--format", "json"], capsys)
    assert rc == 1
    doc = json.loads(out)
    assert doc["summary"]["failed"] == 2
    rep = doc["reports"][0]
    assert rep["verdict"] == "MISMATCH"
    assert rep["mismatch_index"] == 1
    # windows carry exact rationals as num/den strings
    assert rep["lhs_window"][0] == [0, "1/1"]
    assert all(len(pair) == 2 and "/" in pair[1] for pair in rep["rhs_window"])


def test_verify_all_small_truncation(capsys):
    rc, out, _ = run_cli(["verify-all", "--trunc", "5"], capsys)
    assert rc == 0
    assert "total: 38 identities," in out
    assert out.rstrip().endswith("all equal")


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------


def test_json_report_bytes_are_stable(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        rc, out, _ = run_cli(
            ["verify", "--id", "EULERN1", "--trunc", "25",
             "--format", "json", "--out", str(p)], capsys)
        assert rc == 0
        assert out == ""            # --out suppresses stdout
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1]
    assert blobs[0].endswith(b"\n")
    json.loads(blobs[0].decode("utf-8"))


def test_worker_count_does_not_change_reports():
    cmd = [sys.executable, "-m", "qrr.cli", "verify", "--id", "ANDREWS1",
           "--range", "n=0..4", "--trunc", "20", "--format", "json"]
    docs = []
    for jobs in ("1", "2"):
        proc = subprocess.run(cmd + ["--jobs", jobs], capture_output=True,
                              env=os.environ.copy(), check=True)
        docs.append(json.loads(proc.stdout))
    # only the recorded invocation may differ, never the mathematics
    assert docs[0]["config"].pop("jobs") == 1
    assert docs[1]["config"].pop("jobs") == 2
    assert docs[0] == docs[1]


# ---------------------------------------------------------------------------
# counterexample
# ---------------------------------------------------------------------------


def test_counterexample_text(capsys):
    rc, out, _ = run_cli(
        ["counterexample", "--which", "liu1", "--a-exp", "2", "--trunc", "20"],
        capsys)
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "LIU1 at a = q^2 (T=20)"
    assert lines[1] == "LHS = 1 - q"
    assert lines[2] == "RHS = 0"
    assert lines[3] == "first mismatch at q^0: refutation reproduced"


def test_counterexample_json(capsys):
    rc, out, _ = run_cli(
        ["counterexample", "--which", "LIU2", "--a-exp", "1",
         "--trunc", "20", "--format", "json"], capsys)
    assert rc == 0
    doc = json.loads(out)
    rep = doc["reports"][0]
    assert rep["verdict"] == "MISMATCH"
    assert rep["mismatch_index"] == 0
    assert rep["lhs_window"][0] == [0, "1/1"]
    assert rep["rhs_window"][0] == [0, "0/1"]
    assert doc["summary"]["passed"] == 1


# ---------------------------------------------------------------------------
# telescope / binomial / bailey
# ---------------------------------------------------------------------------


def test_telescope_certificates(capsys):
    rc, out, _ = run_cli(
        ["telescope", "--params", "1,1,1,1,1", "--trunc", "25"], capsys)
    assert rc == 0
    assert "telescoping" in out and "termwise" in out
    assert "partial-sum k=0" in out and "MISMATCH" not in out


def test_telescope_precondition(capsys):
    rc, out, err = run_cli(
        ["telescope", "--params", "1,1,1,0,1", "--trunc", "25"], capsys)
    assert rc == 2
    assert out == ""
    assert "PRECONDITION" in err


def test_telescope_quartic(capsys):
    rc, out, _ = run_cli(["telescope", "--quartic"], capsys)
    assert rc == 0
    assert "quartic polynomial identity" in out


def test_binomial_sweeps(capsys):
    rc, out, _ = run_cli(
        ["binomial", "--bino5", "--bino4", "--divisibility", "--n", "5"],
        capsys)
    assert rc == 0
    assert "24/24 checks hold (all hold)" in out


def test_binomial_point_checks(capsys):
    rc, out, _ = run_cli(
        ["binomial", "--cor57", "1,1,1,1,1", "--cor58a", "1,1,1,1",
         "--general", "2,2,2"], capsys)
    assert rc == 0
    assert "30 vs 30" in out
    assert "nonnegative and divisible" in out


def test_bailey_default(capsys):
    rc, out, _ = run_cli(["bailey", "--n-max", "3", "--n", "1", "--trunc", "25"],
                         capsys)
    assert rc == 0
    for label in ("unit-x1 ", "unit-x1-bilateral", "unit-xq-bilateral",
                  "lattice-seed"):
        assert any(l.startswith(label) and l.endswith("n=0..3: 4/4")
                   for l in out.splitlines())
    for target in ("ABCDE1", "ABCDE2", "ABCDE3"):
        assert f"chain({target})  reproduced for N=0..1" in out


def test_bailey_chain(capsys):
    rc, out, _ = run_cli(
        ["bailey", "--chain", "abcde1", "--n", "1", "--exps", "1,1,2,1",
         "--trunc", "25"], capsys)
    assert rc == 0
    assert "ABCDE1" in out and "EQUAL" in out


# ---------------------------------------------------------------------------
# truncation resolution
# ---------------------------------------------------------------------------


def test_env_truncation_is_honoured(monkeypatch, capsys):
    monkeypatch.setenv("QRR_TRUNC", "17")
    rc, out, _ = run_cli(
        ["verify", "--id", "ANDREWS1", "--range", "n=0..1", "--format", "json"],
        capsys)
    assert rc == 0
    assert json.loads(out)["reports"][0]["trunc"] == 17


def test_flag_beats_env_truncation(monkeypatch, capsys):
    monkeypatch.setenv("QRR_TRUNC", "17")
    rc, out, _ = run_cli(
        ["verify", "--id", "ANDREWS1", "--range", "n=0..1",
         "--trunc", "19", "--format", "json"], capsys)
    assert rc == 0
    assert json.loads(out)["reports"][0]["trunc"] == 19


def test_bad_env_truncation(monkeypatch, capsys):
    monkeypatch.setenv("QRR_TRUNC", "0")
    rc, _, err = run_cli(["verify", "--id", "ANDREWS1", "--range", "n=0..1"],
                         capsys)
    assert rc == 2
    assert "QRR_TRUNC" in err
