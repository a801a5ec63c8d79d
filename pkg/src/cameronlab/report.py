"""Structured expected-versus-computed records and the suite configuration."""

from __future__ import annotations

import json
import os
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .core import ALL_CATEGORIES, Category

# where an expected value comes from
CLOSED_FORM = "closed-form"  # a stated structural formula or table
TRIVIAL = "trivial"  # immediate from definitions
DERIVED = "derived-oracle"  # an independent brute-force recomputation
INCONCLUSIVE = "inconclusive"

PROVENANCES = (CLOSED_FORM, TRIVIAL, DERIVED)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Category):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    id: str
    params: dict
    expected: Any
    provenance: str
    computed: Any
    passed: bool | None  # None marks an inconclusive experimental check
    reference: str = ""
    runtime_ms: float = 0.0
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": _jsonable(self.params),
            "expected": _jsonable(self.expected),
            "provenance": self.provenance,
            "reference": self.reference,
            "computed": _jsonable(self.computed),
            "pass": self.passed,
            "runtime_ms": round(self.runtime_ms, 3),
            **({"note": self.note} if self.note else {}),
        }

    @property
    def status(self) -> str:
        if self.passed is None:
            return "inconclusive"
        return "pass" if self.passed else "FAIL"


@dataclass
class VerificationReport:
    suite: str
    category: str
    checks: list[Check] = field(default_factory=list)

    def record(
        self,
        id: str,
        params: dict,
        expected: Any,
        computed: Any,
        provenance: str = CLOSED_FORM,
        reference: str = "",
        passed: bool | None = ...,  # type: ignore[assignment]
        runtime_ms: float = 0.0,
        note: str = "",
    ) -> Check:
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        if passed is ...:
            passed = expected == computed
        check = Check(id, dict(params), expected, provenance, computed, passed, reference, runtime_ms, note)
        self.checks.append(check)
        return check

    @contextmanager
    def timed(self):
        """Yield a dict; the elapsed milliseconds are stored under ``ms`` on exit."""
        box = {"ms": 0.0}
        start = time.perf_counter()
        try:
            yield box
        finally:
            box["ms"] = (time.perf_counter() - start) * 1000

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(c.passed is True for c in self.checks),
            "failed": sum(c.passed is False for c in self.checks),
            "inconclusive": sum(c.passed is None for c in self.checks),
        }

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "category": self.category,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["suite", "category", "id", "params", "expected", "provenance", "computed", "pass"])
        for c in self.checks:
            d = c.to_dict()
            w.writerow(
                [
                    self.suite,
                    self.category,
                    d["id"],
                    json.dumps(d["params"], sort_keys=True),
                    json.dumps(d["expected"]),
                    d["provenance"],
                    json.dumps(d["computed"]),
                    c.status,
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            params = ", ".join(f"{k}={_jsonable(v)}" for k, v in c.params.items())
            lines.append(f"[{c.status:>12}] {c.id}({params}) expected={c.expected!r} computed={c.computed!r}")
        s = self.summary()
        lines.append(
            f"{self.suite}/{self.category}: {s['passed']} passed, {s['failed']} failed, "
            f"{s['inconclusive']} inconclusive"
        )
        return "\n".join(lines)


def merge_reports(suite: str, category: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(suite, category)
    for r in reports:
        out.extend(r)
    return out


SUITES = ("core", "graphs", "homs", "ext", "dk", "fa")


@dataclass
class SuiteConfig:
    categories: tuple[Category, ...] = ALL_CATEGORIES
    suites: tuple[str, ...] = SUITES
    n_max: int = 6
    fa_n_max: int = 5
    t_max: int | None = None
    fa_ext_cutoff: int | None = None  # None means n + 2
    output_format: str = "json"
    dot_path: str | None = None
    threads: int | None = None

    def __post_init__(self) -> None:
        self.categories = tuple(Category.parse(c) for c in self.categories)
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites {sorted(unknown)}; choose from {', '.join(SUITES)}")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError("output format must be json, csv or text")
        if self.n_max < 1:
            raise ValueError("n_max must be positive")
        if "ext" in self.suites and self.n_max < 3:
            raise ValueError("the ext suite needs n_max >= 3")

    @property
    def effective_t_max(self) -> int:
        return self.t_max if self.t_max is not None else self.n_max + 2

    def max_n(self, category: Category) -> int:
        return min(self.n_max, self.fa_n_max) if category is Category.FA else self.n_max

    @property
    def worker_count(self) -> int:
        if self.threads is not None:
            return max(1, self.threads)
        env = os.environ.get("CAMERONLAB_THREADS")
        if env:
            try:
                return max(1, int(env))
            except ValueError:
                raise ValueError(f"CAMERONLAB_THREADS must be an integer, got {env!r}") from None
        return max(1, min(4, os.cpu_count() or 1))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["categories"] = [c.value for c in self.categories]
        return d
