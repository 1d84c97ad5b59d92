"""
Base suite - abstract base class for all verification suites
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable
from functools import cached_property
from typing import ClassVar

from src.catalog import ManifoldInstance
from src.config import config
from src.connection import ConnectionAtPoint
from src.exceptions import TorsionLabError
from src.geometry import ChartPoint, PointGeometry, point_geometry
from src.identities import IdentityId, eval_identity
from src.logging_config import get_module_logger
from src.oracle import OracleSolution, comparison_gate, solve_einstein_pointwise
from src.reporting import ReportRecord
from src.results import CheckContext, CheckResult

logger = get_module_logger("suites")

NO_CONNECTION = "no Einstein connection at this point"


class PointContext:
    """
    One sampled point of one manifold instance.

    The geometry and the oracle solution are computed on first use and shared
    by every suite that visits the point.
    """

    def __init__(self, instance: ManifoldInstance, point: ChartPoint, point_index: int):
        self.instance = instance
        self.point = point
        self.point_index = point_index

    @cached_property
    def geom(self) -> PointGeometry:
        return point_geometry(self.instance.fields, self.point)

    @cached_property
    def oracle(self) -> OracleSolution:
        return solve_einstein_pointwise(self.geom)

    @cached_property
    def connection(self) -> ConnectionAtPoint:
        return self.oracle.connection(self.geom)

    @property
    def check_context(self) -> CheckContext:
        return CheckContext(
            manifold=self.instance.name,
            params=self.instance.report_params(),
            point_index=self.point_index,
            coords=self.point.coords,
        )


class BaseSuite(ABC):
    """
    Abstract base class for verification suites

    All suites follow the same pattern per point:
    1. Decide whether the suite applies at the point
    2. Evaluate the suite's checks (each guarded separately)
    3. Attach the point context to every result
    """

    name: ClassVar[str]
    description: ClassVar[str]

    def __init__(self, tol: float | None = None):
        """
        Args:
            tol: Pass threshold (defaults to numerics.tolerances.identity)
        """
        if tol is None:
            tol = config.get_float("numerics.tolerances.identity", 1e-8)
        self.tol = tol

    def applicable(self, ctx: PointContext) -> str | None:
        """Reason the suite does not apply at this point, or None."""
        return None

    @abstractmethod
    def process(self, ctx: PointContext) -> Iterable[CheckResult]:
        """
        Evaluate the suite's checks at one point

        Args:
            ctx: Point being visited

        Returns:
            Results without context; run_point attaches it
        """
        pass

    def guarded(self, check_id: str, compute: Callable[[], CheckResult]) -> CheckResult:
        """Run one check; a TorsionLabError turns into a skipped result."""
        try:
            return compute()
        except TorsionLabError as e:
            logger.debug(f"{self.name}/{check_id} skipped: {e}")
            return CheckResult.skipped(check_id, str(e), self.tol)

    def identities(
        self, ctx: PointContext, ids: Iterable[IdentityId], with_oracle: bool = True
    ) -> list[CheckResult]:
        """Evaluate registry identities, feeding them the oracle connection when asked."""
        if with_oracle and not ctx.oracle.consistent:
            return [CheckResult.skipped(i.value, NO_CONNECTION, self.tol) for i in ids]

        def evaluate(identity: IdentityId) -> CheckResult:
            if not with_oracle:
                return eval_identity(identity, ctx.geom, tol=self.tol)
            return eval_identity(
                identity,
                ctx.geom,
                T=ctx.oracle.T,
                K=ctx.oracle.K,
                conn=ctx.connection,
                tol=self.tol,
            )

        return [self.guarded(i.value, lambda i=i: evaluate(i)) for i in ids]

    def oracle_gate(self, ctx: PointContext, require_f2: bool = True) -> str | None:
        return comparison_gate(ctx.oracle, require_f2)

    def run_point(self, ctx: PointContext) -> list[ReportRecord]:
        """
        Visit one point and return its report records

        Errors that prevent the point from being assembled at all (degenerate
        metric, non-finite fields) produce a single skipped POINT record.
        """
        context = ctx.check_context
        try:
            reason = self.applicable(ctx)
            if reason is not None:
                logger.debug(
                    f"{self.name} not applicable at {ctx.instance.name}#{ctx.point_index}: "
                    f"{reason}"
                )
                return []
            results = list(self.process(ctx))
        except TorsionLabError as e:
            logger.warning(
                f"{self.name} could not visit {ctx.instance.name}#{ctx.point_index}: {e}"
            )
            results = [CheckResult.skipped("POINT", str(e), self.tol)]
        return [ReportRecord(self.name, r.with_context(context)) for r in results]
