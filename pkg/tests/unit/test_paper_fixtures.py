#!/usr/bin/env python3
"""
Unit tests for the tabulated fixture harness
"""

import json

import pytest

from src.multiplets import verify_paper_fixtures
from src.paper_fixtures import load_fixture_table, run_fixtures
from src.rootsys import RootSystem


@pytest.mark.unit
class TestFixtureSuite:
    """🧪 Engine against the tabulated data"""

    def test_all_pass(self):
        report = run_fixtures()
        assert report.all_passed, [r.details for r in report.failed]
        assert report.total >= 14
        assert report.summary() == f"all fixtures passed ({report.total}/{report.total})"

    def test_declaration_order(self):
        names = [f["name"] for f in load_fixture_table()["fixtures"]]
        assert [r.name for r in run_fixtures().results] == names

    def test_multiplets_entry_point(self):
        assert verify_paper_fixtures().all_passed

    def test_report_rows(self):
        row = run_fixtures().to_list()[0]
        assert set(row) == {"name", "status", "expected", "actual"}
        assert row["status"] == "PASS"


@pytest.mark.unit
class TestFailureReporting:
    """⚠️ Mismatches come back as data"""

    def test_perturbed_form_fails_root_data(self):
        report = run_fixtures(RootSystem(((2, -2), (-2, 6))))
        failed = {r.name for r in report.failed}
        assert {"inner_products", "weyl_group"} <= failed
        assert not report.all_passed
        assert report.summary().endswith("fixtures failed")

    def test_wrong_expectation(self, tmp_path):
        table = load_fixture_table()
        table["fixtures"] = [
            {"name": "bad_dimension", "kind": "weyl_dim", "expected": {"1,1": "2"}},
            {"name": "no_such_kind", "kind": "unknown", "expected": None},
        ]
        path = tmp_path / "fixtures.json"
        path.write_text(json.dumps(table), encoding="utf-8")

        report = run_fixtures(path=path)
        assert [r.status for r in report.results] == ["FAIL", "FAIL"]
        assert report.results[0].actual == {"1,1": "1"}
        assert "error" in report.results[1].actual
        assert report.summary() == "2 of 2 fixtures failed"
