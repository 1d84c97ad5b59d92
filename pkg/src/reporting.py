"""
Report records, the JSON-Lines writer and the run summary table
"""

import json
import math
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from src.logging_config import get_module_logger
from src.results import CheckResult, CheckStatus

logger = get_module_logger("reporting")


@dataclass(frozen=True)
class ReportRecord:
    """One check as written to the report."""

    suite: str
    result: CheckResult

    @property
    def sort_key(self) -> tuple[str, int, str, str]:
        context = self.result.context
        manifold = context.manifold if context else ""
        index = context.point_index if context else -1
        return (manifold, index, self.result.id, self.suite)

    def to_dict(self) -> dict[str, Any]:
        context = self.result.context
        return {
            "suite": self.suite,
            "manifold": context.manifold if context else None,
            "params": dict(context.params) if context else {},
            "point_index": context.point_index if context else None,
            "coords": list(context.coords) if context else [],
            "identity": self.result.id,
            "residual": self.result.residual,
            "tol": self.result.tol,
            "status": self.result.status.value,
            "skip_reason": self.result.skip_reason,
        }


@dataclass
class IdentitySummary:
    identity: str
    run: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    max_residual: float | None = None

    def add(self, result: CheckResult) -> None:
        self.run += 1
        if result.status is CheckStatus.PASS:
            self.passed += 1
        elif result.status is CheckStatus.FAIL:
            self.failed += 1
        else:
            self.skipped += 1
        # Skipped conditions still carry a residual; only evaluated checks count
        if result.residual is not None and result.status is not CheckStatus.SKIPPED:
            if self.max_residual is None or result.residual > self.max_residual:
                self.max_residual = result.residual


def summarize(records: Iterable[ReportRecord]) -> list[IdentitySummary]:
    """Per-identity counts, sorted by identity name."""
    table: dict[str, IdentitySummary] = {}
    for record in records:
        identity = record.result.id
        table.setdefault(identity, IdentitySummary(identity)).add(record.result)
    return [table[k] for k in sorted(table)]


def _format_residual(value: float | None) -> str:
    if value is None:
        return "-"
    if math.isinf(value):
        return "inf"
    return f"{value:.2e}"


def print_summary(summaries: list[IdentitySummary], title: str = "VERIFICATION SUMMARY") -> None:
    """
    Log the summary table

    Args:
        summaries: Output of summarize()
        title: Banner line
    """
    total = IdentitySummary("TOTAL")
    for s in summaries:
        total.run += s.run
        total.passed += s.passed
        total.failed += s.failed
        total.skipped += s.skipped

    logger.info("")
    logger.info("=" * 78)
    logger.info(title)
    logger.info("=" * 78)
    logger.info(
        f"{'Identity':<28} {'Run':>7} {'Pass':>7} {'Fail':>7} {'Skip':>7} {'Max residual':>14}"
    )
    logger.info("-" * 78)
    for s in summaries:
        marker = "✗ " if s.failed else "  "
        logger.info(
            f"{marker}{s.identity:<26} {s.run:>7} {s.passed:>7} {s.failed:>7} {s.skipped:>7} "
            f"{_format_residual(s.max_residual):>14}"
        )
    logger.info("-" * 78)
    logger.info(
        f"  {'TOTAL':<26} {total.run:>7} {total.passed:>7} {total.failed:>7} {total.skipped:>7}"
    )
    logger.info("=" * 78)


def write_report(path: Path, records: list[ReportRecord], header: dict[str, Any]) -> Path:
    """
    Write the JSON-Lines report: one header record, then one record per check.

    Everything that varies between identical runs (the timestamp) lives in
    the header.

    Args:
        path: Output file; parent directories are created
        records: Records in their final order
        header: Run metadata

    Returns:
        The path written
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps({"record": "header", **header}, sort_keys=True) + "\n")
        for record in records:
            f.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
    logger.info(f"Report written: {path} ({len(records)} records)")
    return path


def read_report(path: Path) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    """Header and check records of a report written by write_report."""
    with open(path, encoding="utf-8") as f:
        lines = [json.loads(line) for line in f if line.strip()]
    if not lines or lines[0].get("record") != "header":
        raise ValueError(f"{path} does not start with a header record")
    return lines[0], lines[1:]
