import csv
import io
import json

import pytest

from harmonic_congruences.catalog import builtin_catalog, mutate_rhs, select
from harmonic_congruences.residue import PrimePowerModulus, Residue
from harmonic_congruences.results import VerificationReport, VerificationResult, emit_report
from harmonic_congruences.verify import verify_range


def _empty():
    return VerificationReport(8, 10, ())


def test_empty_json():
    doc = json.loads(emit_report(_empty(), "json"))
    assert doc == {"version": 1, "range": {"lo": 8, "hi": 10}, "results": [],
                   "summary": {"pass": 0, "fail": 0, "skipped": 0, "error": 0}}


def test_one_row_csv():
    report = verify_range(select(builtin_catalog(), ["con7"]), 7, 7)
    lines = emit_report(report, "csv").decode().splitlines()
    assert lines[0] == "id,p,status,lhs,rhs"
    assert lines[1].startswith("con7,7,pass,")
    assert len(lines) == 2


def test_json_rows_and_summary_agree():
    report = verify_range(builtin_catalog(), 5, 60)
    doc = json.loads(emit_report(report, "json"))
    tallies = {s: sum(r["status"] == s for r in doc["results"]) for s in doc["summary"]}
    assert tallies == doc["summary"]
    for row in doc["results"]:
        if row["status"] in ("pass", "fail"):
            assert row["lhs"].isdigit() and row["rhs"].isdigit()


def test_order_is_catalog_then_prime():
    report = verify_range(builtin_catalog(), 7, 40)
    order = {s.id: i for i, s in enumerate(builtin_catalog())}
    keys = [(order[r.congruence_id], r.p) for r in report.results]
    assert keys == sorted(keys)


def test_csv_parses_back():
    report = verify_range(builtin_catalog(), 7, 30)
    rows = list(csv.DictReader(io.StringIO(emit_report(report, "csv").decode())))
    assert len(rows) == len(report.results)
    assert rows[0]["id"] == "con2"


def test_text_lists_failures():
    cat = [mutate_rhs(s) if s.id == "con16" else s for s in select(builtin_catalog(), ["con16", "con11"])]
    text = emit_report(verify_range(cat, 7, 20), "text").decode()
    assert "FAIL con16 p=7" in text
    assert text.rstrip().endswith("summary: pass=5 fail=5 skipped=0 error=0")


@pytest.mark.parametrize("fmt", ["json", "csv", "text"])
def test_deterministic(fmt):
    a = emit_report(verify_range(builtin_catalog(), 5, 50), fmt)
    b = emit_report(verify_range(builtin_catalog(), 5, 50), fmt)
    assert a == b


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(_empty(), "xml")


def test_result_invariants():
    m = PrimePowerModulus(7, 1)
    with pytest.raises(ValueError):
        VerificationResult("x", 7, "pass", Residue(1, m), Residue(2, m))
    with pytest.raises(ValueError):
        VerificationResult("x", 7, "fail", Residue(1, m), Residue(1, m))
    with pytest.raises(ValueError):
        VerificationResult("x", 7, "maybe")
