"""
Verification run: suites x manifolds x sampled points
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any

from src.catalog import ManifoldInstance, resolve, sample_points
from src.config import config
from src.exceptions import ConfigurationError, SamplingExhaustedError
from src.logging_config import get_module_logger
from src.reporting import ReportRecord, print_summary, summarize, write_report
from src.results import CheckContext, CheckResult, CheckStatus
from src.suites import BaseSuite, PointContext, get_suite

logger = get_module_logger("runner")


@dataclass(frozen=True)
class ManifoldRequest:
    """A manifold name with raw parameter overrides."""

    name: str
    params: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...]
    manifolds: tuple[ManifoldRequest, ...]
    points: int
    seed: int
    tol: float
    report_path: Path | None = None

    @classmethod
    def from_defaults(cls, **overrides: Any) -> "RunConfig":
        """Defaults from run_config.yaml and catalog_config.yaml, then overrides."""
        values: dict[str, Any] = {
            "suites": tuple(config.get_required("run.defaults.suites")),
            "manifolds": tuple(
                ManifoldRequest(entry["name"], dict(entry.get("params") or {}))
                for entry in config.get_required("catalog.default_run")
            ),
            "points": int(config.get("run.defaults.points", 25)),
            "seed": int(config.get("run.defaults.seed", 1)),
            "tol": config.get_float("run.defaults.tol", 1e-8),
            "report_path": None,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate(self) -> None:
        """
        Raises:
            ConfigurationError: On an empty selection or out-of-range numbers
            UnknownSuiteError: On an unregistered suite name
        """
        if self.points < 1:
            raise ConfigurationError(f"points must be >= 1, got {self.points}", "points")
        if not self.tol > 0:
            raise ConfigurationError(f"tol must be positive, got {self.tol}", "tol")
        if not self.suites:
            raise ConfigurationError("no suites selected", "suites")
        if not self.manifolds:
            raise ConfigurationError("no manifolds selected", "manifolds")
        for name in self.suites:
            get_suite(name)

    def header(self) -> dict[str, Any]:
        return {
            "timestamp": datetime.now().isoformat(),
            "suites": list(self.suites),
            "manifolds": [{"name": m.name, "params": m.params} for m in self.manifolds],
            "points": self.points,
            "seed": self.seed,
            "tol": self.tol,
        }


@dataclass
class RunOutcome:
    records: list[ReportRecord]

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if r.result.status is CheckStatus.FAIL)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


def resolve_thread_count() -> int:
    """min(run.parallelism.max_threads, TORSION_LAB_THREADS), at least 1."""
    limit = int(config.get("run.parallelism.max_threads", 4))
    override = os.environ.get("TORSION_LAB_THREADS")
    if override:
        try:
            limit = min(limit, int(override))
        except ValueError as e:
            raise ConfigurationError(
                f"TORSION_LAB_THREADS must be an integer, got '{override}'", "TORSION_LAB_THREADS"
            ) from e
    return max(1, limit)


def _visit(suites: list[BaseSuite], ctx: PointContext) -> list[ReportRecord]:
    records: list[ReportRecord] = []
    for suite in suites:
        records.extend(suite.run_point(ctx))
    return records


def _sampling_failure(
    instance: ManifoldInstance, suites: list[BaseSuite], error: SamplingExhaustedError, tol: float
) -> list[ReportRecord]:
    context = CheckContext(instance.name, instance.report_params())
    return [
        ReportRecord(s.name, CheckResult.skipped("SAMPLING", str(error), tol).with_context(context))
        for s in suites
    ]


def execute(run_config: RunConfig) -> RunOutcome:
    """
    Run every selected suite at every sampled point of every manifold.

    Points are visited in parallel; records come back ordered by manifold (in
    request order), point index, identity and suite, whatever the scheduling.

    Raises:
        UnknownManifoldError, InvalidParamsError: For a bad manifold request
        UnknownSuiteError, ConfigurationError: For a bad run configuration
    """
    run_config.validate()
    instances = [resolve(m.name, m.params) for m in run_config.manifolds]
    suites = [get_suite(name)(run_config.tol) for name in run_config.suites]

    jobs: list[tuple[int, PointContext]] = []
    early: list[tuple[int, ReportRecord]] = []
    for order, instance in enumerate(instances):
        try:
            points = sample_points(instance, run_config.points, run_config.seed)
        except SamplingExhaustedError as e:
            logger.warning(str(e))
            early.extend((order, r) for r in _sampling_failure(instance, suites, e, run_config.tol))
            continue
        jobs.extend((order, PointContext(instance, p, i)) for i, p in enumerate(points))

    threads = resolve_thread_count()
    logger.info(
        f"Running {len(suites)} suite(s) on {len(instances)} manifold(s), "
        f"{len(jobs)} point(s), {threads} thread(s)"
    )

    ordered = list(early)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [(order, pool.submit(_visit, suites, ctx)) for order, ctx in jobs]
        for order, future in futures:
            ordered.extend((order, record) for record in future.result())

    ordered.sort(key=lambda item: (item[0], item[1].sort_key))
    _log_inapplicable(instances, suites, [r for _, r in ordered], bool(jobs))
    return RunOutcome([record for _, record in ordered])


def _log_inapplicable(
    instances: list[ManifoldInstance],
    suites: list[BaseSuite],
    records: list[ReportRecord],
    sampled: bool,
) -> None:
    if not sampled:
        return
    visited = {(r.suite, r.result.context.manifold) for r in records if r.result.context}
    for instance in instances:
        for suite in suites:
            if (suite.name, instance.name) not in visited:
                logger.info(f"{suite.name} does not apply to {instance.label()}")


def run(run_config: RunConfig) -> int:
    """
    Execute the run, log the summary and write the report.

    Returns:
        0 when no check failed, 1 otherwise
    """
    outcome = execute(run_config)
    print_summary(summarize(outcome.records))
    if run_config.report_path is not None:
        write_report(run_config.report_path, outcome.records, run_config.header())
    if outcome.failed:
        logger.warning(f"{outcome.failed} check(s) failed")
    return outcome.exit_code
