"""
Almost contact metric theorem - f² = -I + η⊗ξ with a parallel Reeb field.
"""

from collections.abc import Iterator

import numpy as np

from src.config import config
from src.connection import (
    assemble_connection,
    contorsion_from_torsion,
    metricity_residual,
    torsion_acm,
    torsion_hermitian,
)
from src.exceptions import ReebNotParallelError
from src.geometry import factor_geometry
from src.identities import IdentityId
from src.identities.contact import reeb_slot_nabla_F, reeb_slot_torsion
from src.oracle import compare_with_formula
from src.results import CheckResult
from src.tensors import sup_norm

from .base import NO_CONNECTION, BaseSuite, PointContext

CONTACT_IDENTITIES = (
    IdentityId.EQ31,
    IdentityId.EQ32B,
    IdentityId.EQ32C,
    IdentityId.EQ3_5,
)

REEB_HERMITIAN_IDENTITIES = (
    IdentityId.EQ_2_4,
    IdentityId.EQ_2_9,
    IdentityId.EQ_2_12,
)


def reeb_coordinate(xi: np.ndarray) -> int | None:
    """Index k when ξ is the coordinate vector e_k, else None."""
    k = int(np.argmax(np.abs(xi)))
    unit = np.zeros_like(xi)
    unit[k] = 1.0
    return k if np.allclose(xi, unit, rtol=0.0, atol=1e-12) else None


class AcmTheoremSuite(BaseSuite):
    name = "acm-theorem"
    description = "almost contact metric torsion, horizontality and the Reeb-field identities"

    def applicable(self, ctx: PointContext) -> str | None:
        if ctx.geom.reeb is None:
            return "no Reeb data"
        return None

    def reeb_drift(self, ctx: PointContext) -> float:
        """
        sup|∇^g ξ|.

        Raises:
            ReebNotParallelError: If ξ is not parallel even at the loose threshold
        """
        assert ctx.geom.reeb is not None
        threshold = config.get_float("numerics.thresholds.reeb_parallel", 1e-9)
        drift = sup_norm(ctx.geom.reeb.nabla_xi)
        if drift > threshold:
            raise ReebNotParallelError(drift, threshold)
        return drift

    def reeb_parallel(self, ctx: PointContext) -> CheckResult:
        return CheckResult.evaluate(
            "ACM_REEB_PARALLEL",
            self.reeb_drift(ctx),
            config.get_float("numerics.tolerances.parallel_reeb", 1e-12),
        )

    def horizontal_block(self, ctx: PointContext) -> CheckResult:
        """torsion_acm on the ξ-orthogonal coordinates against the factor's Hermitian torsion."""
        geom = ctx.geom
        assert geom.reeb is not None
        T = torsion_acm(geom)
        k = reeb_coordinate(geom.reeb.xi)
        if k is None:
            return CheckResult.skipped(
                "ACM_HORIZONTAL", "Reeb field is not a coordinate direction", self.tol
            )
        rest = tuple(i for i in range(geom.dim) if i != k)
        factor = torsion_hermitian(factor_geometry(geom, rest))
        idx = np.asarray(rest)
        return CheckResult.evaluate(
            "ACM_HORIZONTAL",
            sup_norm(T.components[np.ix_(idx, idx, idx)] - factor.components),
            self.tol,
        )

    def xi_torsion(self, ctx: PointContext) -> CheckResult:
        """torsion_acm has no component with ξ in the first or last slot."""
        T = torsion_acm(ctx.geom).components
        return CheckResult.evaluate("ACM_XI_TORSION", reeb_slot_torsion(T, ctx.geom), self.tol)

    def xi_nabla_F(self, ctx: PointContext) -> CheckResult:
        self.reeb_drift(ctx)
        return CheckResult.evaluate(
            "ACM_XI_NABLA_F",
            reeb_slot_nabla_F(ctx.geom),
            config.get_float("numerics.thresholds.reeb_parallel", 1e-9),
        )

    def formula_metricity(self, ctx: PointContext) -> CheckResult:
        """
        The connection built from torsion_acm solves the metricity equation.

        Needs only a consistent system: on products with a parallel ξ the
        solution is not unique, so this is the check that decides.
        """
        torsion = torsion_acm(ctx.geom)
        if not ctx.oracle.consistent:
            return CheckResult.skipped("METRICITY_FORMULA", NO_CONNECTION, self.tol)
        conn = assemble_connection(ctx.geom, contorsion_from_torsion(torsion, ctx.geom))
        return metricity_residual(conn, ctx.geom, self.tol, check_id="METRICITY_FORMULA")

    def oracle_comparison(self, ctx: PointContext) -> CheckResult:
        """
        torsion_acm against the oracle torsion.

        When the solution is not unique the minimum-norm solution is only one
        member of the family, so the distance is recorded without a verdict.
        """
        torsion = torsion_acm(ctx.geom)
        oracle = ctx.oracle
        if oracle.consistent and not oracle.unique:
            return CheckResult.reported(
                "ACM_VS_ORACLE",
                sup_norm(torsion.components - oracle.T.components),
                self.tol,
                "oracle solution not unique; minimum-norm solution compared",
            )
        return compare_with_formula(
            oracle, torsion, self.tol, require_f2=False, check_id="ACM_VS_ORACLE"
        )

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        yield from self.identities(ctx, CONTACT_IDENTITIES, with_oracle=False)
        yield self.guarded("ACM_REEB_PARALLEL", lambda: self.reeb_parallel(ctx))
        yield self.guarded("ACM_VS_ORACLE", lambda: self.oracle_comparison(ctx))
        yield self.guarded("METRICITY_FORMULA", lambda: self.formula_metricity(ctx))
        yield self.guarded("ACM_HORIZONTAL", lambda: self.horizontal_block(ctx))
        yield self.guarded("ACM_XI_TORSION", lambda: self.xi_torsion(ctx))
        yield self.guarded("ACM_XI_NABLA_F", lambda: self.xi_nabla_F(ctx))
        yield from self.identities(ctx, REEB_HERMITIAN_IDENTITIES)
