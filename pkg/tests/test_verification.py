import pytest

from services import verification


def test_suite_registry_covers_all_names():
    assert set(verification.SUITES) == set(verification.SUITE_NAMES)


def test_core_suite_passes():
    reports = verification.run_suite("core", seed=11)
    failed = [r.name for r in reports if not r.passed]
    assert failed == []
    assert {r.suite for r in reports} == {"core"}


def test_workers_do_not_change_reports():
    serial = verification.run_suite("rings", seed=3, workers=1)
    pooled = verification.run_suite("rings", seed=3, workers=3)
    assert [r.model_dump() for r in serial] == [r.model_dump() for r in pooled]


def test_report_records_mismatch():
    report = verification.report("demo", "core", [1, 2], [1, 3], m=3)
    assert not report.passed
    assert report.parameters == {"m": "3"}
    assert report.computed == "[1, 3]"


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["kerdock", "preparata", "goethals", "graphs"])
def test_heavy_suites_pass(suite):
    reports = verification.run_suite(suite, seed=2024)
    assert [r.name for r in reports if not r.passed] == []
