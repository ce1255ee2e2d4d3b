import contextlib
import csv
import io
import json
import os

import pytest

from algolab.cli import CSV_COLUMNS, run_command, verify_target


def run(argv):
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = run_command(argv)
    return code, buf.getvalue(), err.getvalue()


def test_nakayama_command():
    code, out, _ = run(["nakayama", "--n", "6", "--l", "3", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["gldim"] == 3
    assert payload["domdim"] == 3
    assert payload["higher_auslander"] is True


def test_nakayama_serre_formal_fields():
    code, out, _ = run(["nakayama", "--n", "7", "--l", "3", "--json"])
    payload = json.loads(out)
    assert payload["serre_formal"] is True and payload["d"] == 4


def test_output_is_deterministic():
    _, out1, _ = run(["nakayama", "--n", "9", "--l", "4", "--json"])
    _, out2, _ = run(["nakayama", "--n", "9", "--l", "4", "--json"])
    assert out1 == out2


def test_usage_error_exit_code():
    code, _, err = run(["nakayama", "--n", "x", "--l", "3"])
    assert code == 1 and "usage error" in err
    code, _, err = run(["verify", "--target", "nonsense"])
    assert code == 1


def test_domain_error_exit_code():
    code, _, err = run(["nakayama", "--n", "3", "--l", "9"])
    assert code == 1 and "InvalidParams" in err


def test_hereditary_command():
    code, out, _ = run(["hereditary", "--type", "A3", "--horizon", "6", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["coxeter_number"] == 4
    assert payload["profile"]["twisted_cy"] == [4, 2]


def test_replicate_verify():
    code, out, _ = run(["replicate", "--base", "A2:linear", "--m", "2", "--verify", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verified"] is True
    assert payload["domdim"] == 3 and payload["gldim"] == 3
    assert payload["schedule"]["h"] == 3


def test_replicate_kronecker():
    code, out, _ = run(["replicate", "--base", "kronecker", "--m", "2", "--json"])
    payload = json.loads(out)
    assert (payload["domdim"], payload["gldim"]) == (4, 5)
    assert payload["schedule"] == {"periodic": False, "members": []}


def test_sgc_verify():
    code, out, _ = run(["sgc", "--n", "4", "--l", "3", "--m", "1", "--verify", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["kupisch"] == "[3,3,3,3,2,1]"
    assert payload["verified"] is True


def test_check_serre_formal_with_oracle():
    code, out, _ = run(
        ["check-serre-formal", "--kupisch", "[3,3,3,2,1]", "--oracle", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"]["serre_formal"] is False
    assert payload["oracle"] == "not_serre_formal"
    assert payload["verified"] is True


def test_gl_command():
    code, out, _ = run(["gl", "--weights", "2,2,2,2", "--d", "1", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["torsion"] is True and payload["scan"] == "certified"
    code, out, _ = run(["gl", "--weights", "2,3,7", "--d", "1", "--json"])
    assert json.loads(out)["torsion"] is False


def test_sweep_nakayama_csv(tmp_path):
    out_path = str(tmp_path / "catalog.csv")
    code, out, _ = run(
        ["sweep", "--family", "nakayama", "--n-max", "6", "--m-max", "2",
         "--out", out_path, "--json"]
    )
    assert code == 0
    with open(out_path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == CSV_COLUMNS
    assert rows[-1][0] == "#status" and rows[-1][1] == "complete"
    body = rows[1:-1]
    assert all(r[11] == "oracle-verified" for r in body)
    # HA column matches the l = 2 or l | |n - m| criterion
    for r in body:
        params = dict(p.split("=") for p in r[2].split(";"))
        n, l, m = int(params["n"]), int(params["l"]), int(r[3])
        expected = l == 2 or abs(n - m) % l == 0
        assert (r[7] == "true") == expected


def test_sweep_deterministic(tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    run(["sweep", "--family", "nakayama", "--n-max", "5", "--m-max", "2", "--out", a])
    run(["sweep", "--family", "nakayama", "--n-max", "5", "--m-max", "2", "--out", b])
    assert open(a).read() == open(b).read()


def test_sweep_dynkin_schedule():
    code, out, _ = run(
        ["sweep", "--family", "dynkin", "--types", "A2,A3", "--m-max", "8", "--json"]
    )
    assert code == 0
    assert json.loads(out)["mismatches"] == 0


def test_sweep_empty_range():
    code, out, _ = run(
        ["sweep", "--family", "nakayama", "--n-max", "1", "--m-max", "0", "--json"]
    )
    assert code == 0
    assert json.loads(out)["rows"] == 0


def test_sweep_dynkin_min_ag_pattern(tmp_path):
    # minimal AG rows sit exactly at m = t h - 1 (A_2: h = 3, so 2, 5, 8)
    out_path = str(tmp_path / "dynkin.csv")
    code, _, _ = run(
        ["sweep", "--family", "dynkin", "--types", "A2", "--m-max", "8",
         "--out", out_path]
    )
    assert code == 0
    with open(out_path) as fh:
        rows = [r for r in csv.reader(fh)][1:-1]
    hits = sorted({int(r[3]) for r in rows if r[8] == "true"})
    assert hits == [2, 5, 8]
    # both orientations of A2 carry the same schedule
    assert sum(1 for r in rows if r[8] == "true") == 6


def test_catalog_interrupt_flush(tmp_path):
    from algolab.cli import CatalogRow, write_catalog

    def rows():
        yield CatalogRow("x", "f", "p", 0, 1, 1, 1, True, True, True, None, "formula-only")
        raise KeyboardInterrupt

    out_path = str(tmp_path / "partial.csv")
    written, status = write_catalog(rows(), out_path)
    assert status == "interrupted" and written == 1
    with open(out_path) as fh:
        lines = list(csv.reader(fh))
    assert lines[-1][0] == "#status" and lines[-1][1] == "interrupted"


def test_resolution_bound_env(monkeypatch):
    from algolab.cli import resolution_bound

    monkeypatch.setenv("ALGOLAB_BOUND", "17")
    assert resolution_bound() == 17
    monkeypatch.setenv("ALGOLAB_BOUND", "junk")
    assert resolution_bound() == 64
    monkeypatch.delenv("ALGOLAB_BOUND")
    assert resolution_bound() == 64


def test_verify_targets_pass():
    for target in ["naka-tiny", "coxeter", "gl", "replicated-linearA", "serre-naka"]:
        assert verify_target(target, 64) == []


def test_verify_corrupt_fixture_fails():
    diffs = verify_target("selftest-corrupt", 64)
    assert diffs and "corrupted" in diffs[0]
    code, out, _ = run(["verify", "--target", "selftest-corrupt", "--json"])
    assert code == 2
    assert json.loads(out)["pass"] is False
