import csv
import io
import json
from pathlib import Path

import pytest

from cameronlab.report import DERIVED, PROVENANCES, SuiteConfig, VerificationReport, merge_reports
from cameronlab.suite import run_suite

GOLDEN = Path(__file__).parent / "golden" / "oa_ba_n3.json"
PINNED = SuiteConfig(categories=("OA", "BA"), suites=("core", "graphs", "homs"), n_max=3, threads=1)


def _strip(report: dict) -> dict:
    for check in report["checks"]:
        check.pop("runtime_ms", None)
    return report


def test_golden_report():
    assert _strip(run_suite(PINNED).to_dict()) == json.loads(GOLDEN.read_text(encoding="utf-8"))


def test_parallel_run_matches_serial():
    cfg = SuiteConfig(categories=("OA", "BA"), suites=("core", "graphs", "homs"), n_max=3, threads=2)
    assert _strip(run_suite(cfg).to_dict()) == json.loads(GOLDEN.read_text(encoding="utf-8"))


def test_schema_keys():
    data = run_suite(PINNED).to_dict()
    assert set(data) == {"suite", "category", "checks", "summary"}
    for check in data["checks"]:
        assert {"id", "params", "expected", "provenance", "computed", "pass"} <= set(check)
        assert check["provenance"] in PROVENANCES


def test_pass_means_exact_equality():
    rep = VerificationReport("x", "OA")
    assert rep.record("a", {}, 1, 1).passed
    assert not rep.record("b", {}, [1, 2], [2, 1]).passed
    assert rep.record("c", {}, None, 3, passed=None).status == "inconclusive"
    assert rep.summary() == {"total": 3, "passed": 1, "failed": 1, "inconclusive": 1}
    assert not rep.ok


def test_inconclusive_does_not_fail_the_run():
    rep = VerificationReport("x", "FA")
    rep.record("a", {}, 13, 12, passed=None)
    assert rep.ok


def test_unknown_provenance_rejected():
    with pytest.raises(ValueError):
        VerificationReport("x", "OA").record("a", {}, 1, 1, provenance="folklore")


def test_csv_is_rfc4180():
    rep = VerificationReport("homs", "BA")
    rep.record("pairs", {"n": 2}, [["sgn", "sgn"]], [["sgn", "sgn"]], DERIVED)
    text = rep.to_csv()
    assert text.endswith("\r\n")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["suite", "category", "id", "params", "expected", "provenance", "computed", "pass"]
    assert rows[1][3] == '{"n": 2}'
    assert json.loads(rows[1][4]) == [["sgn", "sgn"]]
    assert rows[1][7] == "pass"


def test_text_summary_line():
    rep = VerificationReport("core", "OA")
    rep.record("a", {"n": 1}, 1, 1)
    assert rep.to_text().splitlines()[-1] == "core/OA: 1 passed, 0 failed, 0 inconclusive"


def test_merge_keeps_order():
    a, b = VerificationReport("s", "OA"), VerificationReport("s", "CA")
    a.record("x", {}, 1, 1)
    b.record("y", {}, 1, 2)
    merged = merge_reports("s", "all", [a, b])
    assert [c.id for c in merged.checks] == ["x", "y"]
    assert not merged.ok


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(suites=("nope",))
    with pytest.raises(ValueError):
        SuiteConfig(n_max=2)  # the ext suite needs n_max >= 3
    with pytest.raises(ValueError):
        SuiteConfig(output_format="xml")
    cfg = SuiteConfig(categories=("FA", "CA"))
    assert cfg.max_n(cfg.categories[0]) == 5 and cfg.max_n(cfg.categories[1]) == 6
    assert cfg.effective_t_max == 8


def test_thread_env_override(monkeypatch):
    monkeypatch.setenv("CAMERONLAB_THREADS", "3")
    assert SuiteConfig().worker_count == 3
    assert SuiteConfig(threads=1).worker_count == 1
    monkeypatch.setenv("CAMERONLAB_THREADS", "many")
    with pytest.raises(ValueError):
        SuiteConfig().worker_count
