import json
import subprocess
import sys

import pytest

from tqf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_typenum_json(capsys):
    code, out, _ = run(capsys, "typenum", "--n1", "2", "--n2", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "tqf-typenum/1"
    assert doc["rows"] == [{"level": 2, "n1": 2, "n2": 1, "h": 1, "t": 1}]


def test_typenum_text(capsys):
    code, out, _ = run(capsys, "typenum", "--n1", "11", "--n2", "4")
    assert code == 0
    assert out.strip() == "h=5 T=3"


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "typenum", "--n1", "4", "--n2", "3")
    assert code == 3
    assert "even" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["typenum", "--n1", "x", "--n2", "3"])
    assert exc.value.code == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--max-level", "100", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "level,n1,n2,h,t"
    assert len(lines) == 145
    assert "70,70,1,2,1" in lines


def test_table_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "table", "--max-level", "60", "--format", "json")
    _, parallel, _ = run(capsys, "table", "--max-level", "60", "--format", "json", "--jobs", "2")
    assert json.loads(serial) == json.loads(parallel)


def test_hclass_and_hurwitz(capsys):
    assert run(capsys, "hclass", "--n1", "2", "--n2", "1", "--d", "3")[1].strip() == "2/3"
    code, out, _ = run(capsys, "hurwitz", "--d", "23", "--format", "json")
    assert json.loads(out)["rows"] == [{"d": 23, "value": "3"}]


def test_density_both_agree(capsys):
    code, out, _ = run(capsys, "density", "--form", "-1,0,0,-1,0,0", "--p", "3", "--n", "1", "--mode", "both", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0
    assert row["closed"] == row["count"] == "2/3" and row["agree"]


def test_density_without_closed_form(capsys):
    code, _, err = run(capsys, "density", "--form", "1,1,1,0,0,0", "--p", "3", "--n", "1", "--mode", "closed")
    assert code == 3
    code, out, _ = run(capsys, "density", "--form", "1,1,1,0,0,0", "--p", "5", "--n", "1", "--mode", "count")
    assert code == 0 and out.strip() == "6/5"


def test_forms(capsys):
    assert run(capsys, "repnum", "--form", "1,1,1,0,0,0", "--n", "2")[1].strip() == "12"
    assert run(capsys, "aut", "--form", "1,1,2,0,0,0")[1].strip() == "16"
    code, out, _ = run(capsys, "genus", "--n1", "11", "--n2", "1", "--format", "json")
    assert code == 0 and len(json.loads(out)["rows"]) == 2
    code, out, _ = run(capsys, "genus", "--level", "4", "--disc", "4", "--aniso", "2")
    assert code == 0 and "1,1,1,0,0,0" in out
    code, out, _ = run(capsys, "clifford", "--form", "1,1,1,0,0,0")
    assert code == 0 and "associated" in out


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mass", "--max-level", "10")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.strip().splitlines())
    code, out, _ = run(capsys, "verify", "--suite", "theta", "--max-level", "6", "--dmax", "30", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["subject"] for r in rows] == ["(2,1)", "(3,1)", "(5,1)", "(2,3)", "(3,2)"]
    assert all(r["pass"] and r["count"] == 31 for r in rows)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tqf", "typenum", "--n1", "3", "--n2", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0
