"""Verification reports shared by every identity check."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Iterable

from .laurent import LaurentPoly

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    passed: bool
    detail: str = ""
    elapsed: float = 0.0
    identity: str = ""

    def __post_init__(self):
        if not self.passed and not self.detail:
            raise ValueError(f"Failing report for {self.check} has no witness")

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 4),
            "identity": self.identity,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def params_text(self) -> str:
        return " ".join(f"{key}={value}" for key, value in self.params.items())


def _difference(lhs: LaurentPoly, rhs: LaurentPoly) -> LaurentPoly:
    if lhs.table != rhs.table:
        table = lhs.table.merge(rhs.table)
        lhs, rhs = lhs.rebase(table), rhs.rebase(table)
    return lhs - rhs


class CheckRun:
    """Collects the cases of one check and turns them into a report.

    The first failing case is kept as the witness; later cases still run so
    the case count in the detail is complete.
    """

    def __init__(self, check: str, identity: str = "", **params):
        self.check = check
        self.identity = identity
        self.params = params
        self.cases = 0
        self.failures = 0
        self.witness = ""
        self._started = time.perf_counter()

    def expect(self, label: str, condition: bool, witness: str = "") -> bool:
        self.cases += 1
        if not condition:
            self.failures += 1
            if not self.witness:
                self.witness = f"{label}: {witness or 'condition failed'}"
        return condition

    def expect_equal(self, label: str, lhs, rhs) -> bool:
        if isinstance(lhs, LaurentPoly) and isinstance(rhs, LaurentPoly):
            diff = _difference(lhs, rhs)
            return self.expect(label, diff.is_zero(), f"lhs - rhs has terms {diff.leading_terms()}")
        return self.expect(label, lhs == rhs, f"lhs = {lhs}, rhs = {rhs}")

    def report(self) -> VerificationReport:
        elapsed = time.perf_counter() - self._started
        passed = self.failures == 0
        if passed:
            detail = f"{self.cases} case(s) agree"
        else:
            detail = f"{self.failures} of {self.cases} case(s) differ; first {self.witness}"
        result = VerificationReport(
            check=self.check,
            params=self.params,
            passed=passed,
            detail=detail,
            elapsed=elapsed,
            identity=self.identity,
        )
        if passed:
            logger.info("%s [%s] passed %d case(s) in %.2fs", self.check, result.params_text(), self.cases, elapsed)
        else:
            logger.warning("%s [%s] FAILED: %s", self.check, result.params_text(), detail)
        return result


def summary_table(reports: Iterable[VerificationReport]) -> str:
    rows = [("check", "params", "status", "seconds", "detail")]
    for r in reports:
        rows.append((r.check, r.params_text(), r.status, f"{r.elapsed:.2f}", r.detail))
    widths = [max(len(row[k]) for row in rows) for k in range(4)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row[:4], widths)]
        lines.append("  ".join(cells + [row[4]]).rstrip())
    return "\n".join(lines)
