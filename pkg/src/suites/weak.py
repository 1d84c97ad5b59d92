"""
Weak theorem - torsion under the f²-torsion condition for f² != -I,
including weighted products and the ker f branch.
"""

from collections.abc import Iterator

import numpy as np

from src.config import config
from src.connection import (
    TorsionAtPoint,
    assemble_connection,
    contorsion_from_torsion,
    metricity_residual,
    torsion_weak,
    torsion_weighted_factor,
)
from src.connection.formulas import WEAK_SINGULAR
from src.exceptions import TorsionLabError
from src.geometry import FactorBlock, factor_geometry
from src.oracle import compare_with_formula
from src.results import CheckResult
from src.tensors import sup_norm

from .base import NO_CONNECTION, BaseSuite, PointContext


def off_factor_residual(T: np.ndarray, factors: tuple[FactorBlock, ...]) -> float:
    """Largest torsion component whose three indices do not share a factor."""
    mask = np.ones(T.shape, dtype=bool)
    for factor in factors:
        idx = np.asarray(factor.indices)
        mask[np.ix_(idx, idx, idx)] = False
    return float(np.max(np.abs(T[mask]), initial=0.0))


class WeakTheoremSuite(BaseSuite):
    name = "weak-theorem"
    description = "weak almost Hermitian torsion, weighted products and the ker f branch"

    def applicable(self, ctx: PointContext) -> str | None:
        geom = ctx.geom
        if "Pi" not in geom.operators:
            return "I - f^2 is singular"
        if geom.split is None:
            return "no ker f^2 splitting"
        return None

    def weak_checks(self, ctx: PointContext, torsion: TorsionAtPoint) -> list[CheckResult]:
        reason = self.oracle_gate(ctx)
        if reason is not None:
            asymmetry = CheckResult.skipped("WEAK_ASYMMETRY", reason, self.tol)
        else:
            asymmetry = CheckResult.evaluate("WEAK_ASYMMETRY", torsion.asymmetry, self.tol)
        results = [
            compare_with_formula(ctx.oracle, torsion, self.tol, check_id="WEAK_VS_ORACLE"),
            asymmetry,
        ]
        if not ctx.oracle.consistent:
            results.append(CheckResult.skipped("METRICITY_FORMULA", NO_CONNECTION, self.tol))
            return results
        conn = assemble_connection(ctx.geom, contorsion_from_torsion(torsion, ctx.geom))
        metricity = metricity_residual(conn, ctx.geom, self.tol, check_id="METRICITY_FORMULA")
        if reason is not None and metricity.residual is not None:
            # asserted only under the f²-torsion condition
            metricity = CheckResult.reported(
                "METRICITY_FORMULA", metricity.residual, self.tol, reason
            )
        results.append(metricity)
        return results

    def singular_branch(self, ctx: PointContext) -> CheckResult:
        """Oracle T(Y,Z,W) = 2(∇^g_W F)(Y,Z) + dF(Y,Z,W) for W in ker f."""
        geom = ctx.geom
        oracle = ctx.oracle
        f2_tol = config.get_float("numerics.tolerances.f2_condition", 1e-9)
        if not oracle.consistent:
            return CheckResult.skipped("WEAK_SINGULAR_BRANCH", NO_CONNECTION, self.tol)
        if oracle.f2_condition_residual >= f2_tol:
            return CheckResult.skipped(
                "WEAK_SINGULAR_BRANCH",
                "oracle torsion violates the f^2-torsion condition",
                self.tol,
            )
        kernel = geom.require_split().kernel_basis
        operands = {"N": geom.nablaF.components, "dF": geom.dF.components}
        # S[a, b, c] = T(e_b, e_c, e_a) predicted for e_a in ker f
        S = WEAK_SINGULAR.evaluate(operands, geom.operators)
        predicted = np.einsum("abc,aw->wbc", S, kernel)
        observed = np.einsum("bca,aw->wbc", oracle.T.components, kernel)
        return CheckResult.evaluate(
            "WEAK_SINGULAR_BRANCH", sup_norm(predicted - observed), self.tol
        )

    def factor_checks(self, ctx: PointContext) -> list[CheckResult]:
        factors = ctx.instance.fields.factors
        reason = self.oracle_gate(ctx)
        if reason is not None:
            return [
                CheckResult.skipped("WEIGHTED_FACTOR_VS_ORACLE", reason, self.tol),
                CheckResult.skipped("WEIGHTED_OFF_FACTOR", reason, self.tol),
            ]
        T = ctx.oracle.T.components
        worst = 0.0
        for factor in factors:
            idx = np.asarray(factor.indices)
            block = torsion_weighted_factor(factor_geometry(ctx.geom, factor.indices), factor.lam)
            worst = max(worst, sup_norm(block.components - T[np.ix_(idx, idx, idx)]))
        return [
            CheckResult.evaluate("WEIGHTED_FACTOR_VS_ORACLE", worst, self.tol),
            CheckResult.evaluate(
                "WEIGHTED_OFF_FACTOR",
                off_factor_residual(T, factors),
                config.get_float("numerics.tolerances.f2_condition", 1e-9),
            ),
        ]

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        try:
            torsion = torsion_weak(ctx.geom)
        except TorsionLabError as e:
            yield CheckResult.skipped("WEAK_VS_ORACLE", str(e), self.tol)
        else:
            yield from self.weak_checks(ctx, torsion)
        if ctx.geom.require_split().kernel_dim:
            yield self.guarded("WEAK_SINGULAR_BRANCH", lambda: self.singular_branch(ctx))
        if ctx.instance.fields.factors:
            try:
                yield from self.factor_checks(ctx)
            except TorsionLabError as e:
                yield CheckResult.skipped("WEIGHTED_FACTOR_VS_ORACLE", str(e), self.tol)
