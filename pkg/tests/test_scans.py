import json
from pathlib import Path

import pytest

from lmrttg import (
    DomainError,
    band_bounds_report,
    band_decomposition_violations,
    brute_record,
    identity_suite,
    scan_tie_band,
    scan_uniqueness,
    sturm_report,
)

GOLDEN = Path(__file__).parent / "golden"


def test_seven_pairs_report(seven_pairs_report):
    rep = seven_pairs_report
    assert rep.verdict
    assert rep.pairs_scanned == 7
    by_pair = {(r["n"], r["m"]): r for r in rep.records if "n" in r}
    assert by_pair[(6, 8)]["h_by_tag"]["s1"] == 61
    assert by_pair[(6, 8)]["h_by_tag"]["c1"] == 59
    assert by_pair[(7, 9)]["h_by_tag"]["s2"] == 81
    assert by_pair[(7, 9)]["h_by_tag"]["c1"] == 78
    assert by_pair[(6, 7)]["tag"] == "s2"
    assert all(r["margin"] > 0 for r in by_pair.values())


def test_seven_pairs_report_matches_golden(seven_pairs_report):
    got = seven_pairs_report.to_json_obj(meta=False)
    want = json.loads((GOLDEN / "seven_pairs.json").read_text())
    assert got == want


def test_tie_band_scan_small():
    rep = scan_tie_band(8, 40)
    assert rep.verdict
    assert rep.pairs_scanned > 0
    assert all(r["margin"] > 0 for r in rep.records)
    # the boundary ties at n = 8 are band members and must be covered
    covered = {(r["n"], r["m"]) for r in rep.records}
    assert (8, 10) in covered and (8, 18) in covered
    with pytest.raises(DomainError):
        scan_tie_band(5, 10)


def test_tie_band_scan_deterministic():
    a = scan_tie_band(8, 20).to_json_obj(meta=False)
    b = scan_tie_band(8, 20).to_json_obj(meta=False)
    assert a == b


def test_uniqueness_scan_serial_equals_parallel():
    serial = scan_uniqueness(5, jobs=1)
    parallel = scan_uniqueness(5, jobs=2)
    assert serial.verdict and parallel.verdict
    assert serial.records == parallel.records


def test_brute_record_fields():
    rec = brute_record(4, 5)
    assert rec["unique"] and rec["matches_construction"] and rec["ok"]
    assert rec["classes_examined"] == 5  # C(5,4) labeled candidates carrying the terminal edge
    assert set(rec["winner_canonical"]) == {"n", "terminals", "edges"}
    assert "elapsed" in rec
    assert rec["unique_ordered"] is True


def test_brute_record_boundary_note():
    rec = brute_record(5, 7)
    assert rec.get("note") == "sparse/dense boundary"
    assert rec["ok"]


def test_identity_suite_deterministic_and_green():
    a = identity_suite(seed=7, samples=40, max_family_n=6)
    b = identity_suite(seed=7, samples=40, max_family_n=6)
    assert a.verdict and b.verdict
    assert a.pairs_scanned == b.pairs_scanned
    assert a.records == b.records == []


def test_band_decomposition_violations_empty():
    assert band_decomposition_violations(8, 60) == []


def test_band_bounds_report_small():
    rep = band_bounds_report(8, 15)
    assert rep.verdict and rep.pairs_scanned > 0


def test_sturm_report_contents():
    from fractions import Fraction

    rep = sturm_report()
    assert rep["roots_in_436_437"] == 1
    assert rep["roots_in_437_1e6"] == 0
    assert rep["sign_at_437"] == 1
    lo, hi = (Fraction(x) for x in rep["greatest_root_bracket"])
    assert 436 < lo < hi <= 437
    assert hi - lo < Fraction(1, 10**6)


def test_report_markdown_render(seven_pairs_report):
    md = seven_pairs_report.to_markdown()
    assert "verdict: **pass**" in md
    assert "| n | m |" in md or "| check |" in md
