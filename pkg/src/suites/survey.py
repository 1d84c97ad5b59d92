"""
Oracle survey - existence, uniqueness and scale behavior of the pointwise
Einstein connection.
"""

from collections.abc import Iterator

import numpy as np

from src.config import config
from src.geometry import PointGeometry, point_geometry_from_jet
from src.oracle import OracleSolution, solve_einstein_pointwise
from src.results import CheckResult
from src.tensors import sup_norm

from .base import BaseSuite, PointContext


def scaled_geometry(geom: PointGeometry, c: float) -> PointGeometry:
    """The same point with g and F both multiplied by c."""
    return point_geometry_from_jet(
        c * geom.g.components, c * geom.dg, c * geom.F.components, c * geom.dFp, geom.coords
    )


def scale_residual(geom: PointGeometry, oracle: OracleSolution, c: float) -> tuple[float, bool]:
    """
    Change of the oracle solution under G -> cG.

    The raised contorsion g⁻¹K and the connection coefficients are invariant,
    so the lowered K scales by c. Returns the worst deviation and whether the
    scaled system was also uniquely solvable.
    """
    scaled = scaled_geometry(geom, c)
    other = solve_einstein_pointwise(scaled)
    raised = np.einsum("kc,abc->abk", geom.ginv, oracle.K.K)
    raised_scaled = np.einsum("kc,abc->abk", scaled.ginv, other.K.K)
    gamma = oracle.connection(geom).gamma_total
    gamma_scaled = other.connection(scaled).gamma_total
    residual = max(
        sup_norm(raised_scaled - raised),
        sup_norm(gamma_scaled - gamma),
        sup_norm(other.K.K - c * oracle.K.K),
    )
    return residual, other.unique and other.consistent


class OracleSurveySuite(BaseSuite):
    name = "oracle-survey"
    description = "existence and uniqueness of the pointwise Einstein connection; scaling"

    def scale_invariance(self, ctx: PointContext) -> CheckResult:
        oracle = ctx.oracle
        if not (oracle.unique and oracle.consistent):
            return CheckResult.skipped(
                "SCALE_INVARIANCE", "oracle solution not unique or inconsistent", self.tol
            )
        c = config.get_float("run.survey.scale_factor", 2.5)
        residual, solvable = scale_residual(ctx.geom, oracle, c)
        if not solvable:
            return CheckResult.skipped(
                "SCALE_INVARIANCE", "scaled system not uniquely solvable", self.tol
            )
        return CheckResult.evaluate("SCALE_INVARIANCE", residual, self.tol)

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        oracle = ctx.oracle
        yield CheckResult.condition(
            "ORACLE_CONSISTENT",
            oracle.system_residual,
            config.get_float("numerics.tolerances.no_connection", 1e-8),
        )
        deficiency = ctx.geom.dim**3 - oracle.rank
        yield CheckResult.condition("ORACLE_UNIQUE", float(deficiency), self.tol)
        yield self.guarded("SCALE_INVARIANCE", lambda: self.scale_invariance(ctx))
