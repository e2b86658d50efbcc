import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from partsums.cli import main

SCHEMA = {
    "type": "object",
    "required": ["run", "results", "summary"],
    "properties": {
        "run": {
            "type": "object",
            "required": ["ids", "n_min", "n_max"],
            "properties": {
                "ids": {"type": "array", "items": {"type": "string"}},
                "n_min": {"type": "integer"},
                "n_max": {"type": "integer"},
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "n", "lhs", "rhs", "relation", "verdict", "terms"],
                "properties": {
                    "id": {"type": "string"},
                    "n": {"type": "integer"},
                    "lhs": {"type": "string", "pattern": r"^-?\d+/\d+$"},
                    "rhs": {"type": "string", "pattern": r"^-?\d+/\d+$"},
                    "relation": {"enum": ["=", "<", ">"]},
                    "verdict": {"enum": ["PASS", "FAIL", "EQUALITY_AT_BOUNDARY"]},
                    "terms": {"type": "integer"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "boundary"],
            "properties": {k: {"type": "integer"} for k in ("pass", "fail", "boundary")},
        },
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_t11(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T1.1", "--n-min", "1", "--n-max", "15", "--workers", "1", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert code == 0
    assert len(doc["results"]) == 15
    assert all(r["verdict"] == "PASS" for r in doc["results"])
    assert doc["results"][4] == {
        "id": "T1.1", "n": 5, "lhs": "16/1", "rhs": "16/1", "relation": "=", "verdict": "PASS", "terms": 7,
    }


def test_verify_boundary_failure(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T1A.5", "--n-min", "2", "--n-max", "5", "--format", "json")
    verdicts = [(r["n"], r["verdict"], r["lhs"], r["rhs"]) for r in json.loads(out)["results"]]
    assert code == 1
    assert verdicts[0] == (2, "FAIL", "1/3", "1/2")
    assert [v[1] for v in verdicts[1:]] == ["PASS"] * 3


def test_verify_fine(capsys):
    code, out, _ = run(capsys, "verify", "--id", "FINE", "--n-max", "10", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    pairs = [(r["n"], r["k"]) for r in doc["results"]]
    assert code == 0
    assert pairs == [(n, k) for n in range(1, 11) for k in range(1, n + 1)]


def test_unknown_id(capsys):
    code, out, err = run(capsys, "verify", "--id", "T7.7", "--n-max", "3")
    assert code == 2
    assert out == ""
    assert "T1.1" in err and "DELTA" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_bad_workers(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n-max", "3", "--workers", "0"])
    assert exc.value.code == 2


def test_clipping_notice(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T1A.1", "--id", "T1.1", "--n-min", "1", "--n-max", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["run"]["notices"] == ["T1A.1: n_min clipped from 1 to 2"]
    assert [(r["id"], r["n"]) for r in doc["results"]] == [("T1.1", 1), ("T1.1", 2), ("T1.1", 3), ("T1A.1", 2), ("T1A.1", 3)]


def test_formats_carry_identical_values(capsys):
    argv = ["verify", "--id", "T2.2", "--id", "C1.3", "--id", "FINE", "--n-max", "6", "--workers", "1"]
    _, js, _ = run(capsys, *argv, "--format", "json")
    _, cs, _ = run(capsys, *argv, "--format", "csv")
    _, tb, _ = run(capsys, *argv, "--format", "table")
    records = json.loads(js)["results"]
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert len(rows) == len(records)
    for rec, row in zip(records, rows):
        for key in ("id", "lhs", "rhs", "relation", "verdict"):
            assert row[key] == rec[key]
        assert int(row["n"]) == rec["n"] and int(row["terms"]) == rec["terms"]
        assert any(rec["lhs"] in line and rec["verdict"] in line and line.startswith(rec["id"]) for line in tb.splitlines())
    assert tb.splitlines()[-1].startswith("summary: ")


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n-max", "12", "--workers", "1", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    by = {}
    for r in doc["results"]:
        by.setdefault(r["id"], []).append(r)
    assert code == 1
    for identity in ("C.1", "C.2", "C2.1", "C2.2"):
        assert [r["verdict"] for r in by[identity]] == ["PASS"] * 11
    for identity in ("C1.1", "C1.2", "C1.3", "C1.4"):
        assert by[identity][0]["n"] == 2 and by[identity][0]["verdict"] != "PASS"
        assert all(r["verdict"] == "PASS" for r in by[identity][1:])


def test_scan_minimal(capsys):
    code, out, _ = run(capsys, "scan", "--n-max", "2", "--workers", "1")
    assert code == 1
    assert "EQUALITY_AT_BOUNDARY" in out
    assert run(capsys, "scan", "--n-max", "1")[0] == 2


def test_partitions(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["5", "4+1", "3+2", "3+1+1", "2+2+1", "2+1+1+1", "1+1+1+1+1"]
    _, out, _ = run(capsys, "partitions", "--n", "4", "--ferrers")
    blocks = out.strip("\n").split("\n\n")
    assert len(blocks) == 5
    assert blocks[1] == "3+1\n• • •\n•"
    _, out, _ = run(capsys, "partitions", "--n", "0")
    assert out == "(empty partition)\n"
    _, out, _ = run(capsys, "partitions", "--n", "3", "--conjugate")
    assert out.splitlines() == ["3  conjugate: 1+1+1", "2+1  conjugate: 2+1", "1+1+1  conjugate: 3"]


def test_series_check(capsys):
    code, out, _ = run(capsys, "series-check", "--order", "30")
    assert code == 0
    assert out.count(": PASS") == 7 and "FAIL" not in out
    assert "delta_product: PASS (order 30; leading coefficients 1/1, 0/1, 0/1" in out
    assert run(capsys, "series-check", "--order", "1")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partsums", "partitions", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n1+1\n"
