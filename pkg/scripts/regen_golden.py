"""Rewrite the golden JSON report used by tests/test_report.py.

Run after an intentional change to the report schema or to the checks of the
pinned configuration, then review the diff.
"""

import json
from pathlib import Path

from cameronlab.report import SuiteConfig
from cameronlab.suite import run_suite

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden" / "oa_ba_n3.json"
PINNED = SuiteConfig(categories=("OA", "BA"), suites=("core", "graphs", "homs"), n_max=3, threads=1)


def stripped(report: dict) -> dict:
    for check in report["checks"]:
        check.pop("runtime_ms", None)
    return report


def main() -> None:
    data = stripped(run_suite(PINNED).to_dict())
    GOLDEN.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(data['checks'])} checks to {GOLDEN}")


if __name__ == "__main__":
    main()
