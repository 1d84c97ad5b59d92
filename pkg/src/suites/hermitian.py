"""
Hermitian theorem - the closed-form torsion on almost Hermitian points
against the oracle, and the consequences of f² = -I.
"""

from collections.abc import Iterator

from src.config import config
from src.connection import (
    assemble_connection,
    contorsion_from_torsion,
    metricity_residual,
    special_residual,
    torsion_hermitian,
    torsion_special,
)
from src.identities import IdentityId
from src.oracle import compare_with_formula
from src.results import CheckResult
from src.tensors import sup_norm

from .base import NO_CONNECTION, BaseSuite, PointContext

HERMITIAN_IDENTITIES = (
    IdentityId.EQ_2_4,
    IdentityId.EQ_2_9,
    IdentityId.EQ_2_12,
    IdentityId.COMPACT_J_FORM,
)


class HermitianTheoremSuite(BaseSuite):
    name = "hermitian-theorem"
    description = "closed-form torsion for f^2 = -I against the oracle; Hermitian identities"

    def applicable(self, ctx: PointContext) -> str | None:
        residual = ctx.geom.almost_hermitian_residual()
        if residual > config.get_float("numerics.thresholds.almost_hermitian", 1e-10):
            return f"f^2 + I = {residual:.2e}"
        return None

    def formula_metricity(self, ctx: PointContext) -> CheckResult:
        if not ctx.oracle.consistent:
            return CheckResult.skipped("METRICITY_FORMULA", NO_CONNECTION, self.tol)
        torsion = torsion_hermitian(ctx.geom)
        conn = assemble_connection(ctx.geom, contorsion_from_torsion(torsion, ctx.geom))
        return metricity_residual(conn, ctx.geom, self.tol, check_id="METRICITY_FORMULA")

    def special_comparison(self, ctx: PointContext) -> CheckResult:
        """
        Distance between the special-connection torsion formula and the oracle.

        Recorded, never asserted: where the connection is special the suite
        asserts K = T/2 through S1_SPECIAL, and elsewhere the formula does not
        apply.
        """
        reason = self.oracle_gate(ctx)
        if reason is not None:
            return CheckResult.skipped("SPECIAL_VS_ORACLE", reason, self.tol)
        hypothesis = config.get_float("numerics.tolerances.hypothesis", 1e-10)
        special = special_residual(ctx.oracle.K.K) < hypothesis
        distance = sup_norm(torsion_special(ctx.geom).components - ctx.oracle.T.components)
        return CheckResult.reported(
            "SPECIAL_VS_ORACLE",
            distance,
            self.tol,
            "difference reported" if special else "connection is not special",
        )

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        yield self.guarded(
            "HERMITIAN_VS_ORACLE",
            lambda: compare_with_formula(
                ctx.oracle, torsion_hermitian(ctx.geom), self.tol, check_id="HERMITIAN_VS_ORACLE"
            ),
        )
        yield self.guarded("METRICITY_FORMULA", lambda: self.formula_metricity(ctx))
        yield self.guarded("SPECIAL_VS_ORACLE", lambda: self.special_comparison(ctx))
        yield from self.identities(ctx, HERMITIAN_IDENTITIES)
