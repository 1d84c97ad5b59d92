"""
Pointwise oracle: solve the metricity equation for the contorsion directly.

The equation is linear in the n³ components of K. Its matrix is built by
applying the metricity operator to every unit contorsion at once, and the
system is solved by SVD least squares. The minimum-norm solution is taken when
the kernel is nontrivial.
"""

from dataclasses import dataclass

import numpy as np

from src.config import config
from src.connection import (
    ContorsionAtPoint,
    TorsionAtPoint,
    assemble_connection,
    f2_torsion_residual,
    f_torsion_residual,
    metricity_operator,
    s1_residual,
    torsion_from_contorsion,
)
from src.connection.types import ConnectionAtPoint
from src.geometry import PointGeometry
from src.logging_config import get_module_logger
from src.results import CheckResult
from src.tensors import Array, solve_dense, sup_norm

logger = get_module_logger("oracle")


@dataclass(frozen=True)
class OracleSolution:
    K: ContorsionAtPoint
    T: TorsionAtPoint
    unique: bool
    rank: int
    system_residual: float
    f2_condition_residual: float
    f_condition_residual: float
    s1_residual: float

    @property
    def consistent(self) -> bool:
        """False means there is no Einstein connection at this point."""
        return self.system_residual < config.get_float(
            "numerics.tolerances.no_connection", 1e-8
        )

    def connection(self, geom: PointGeometry) -> ConnectionAtPoint:
        return assemble_connection(geom, self.K)


def metricity_matrix(f: Array) -> Array:
    """Matrix of the metricity operator on row-major flattened contorsions."""
    n = f.shape[0]
    size = n**3
    units = np.eye(size).reshape(size, n, n, n)
    images = metricity_operator(units, f).reshape(size, size)
    # Row j of `images` is the image of the j-th unit, i.e. column j of the matrix
    return images.T


def solve_einstein_pointwise(
    geom: PointGeometry, sv_threshold: float | None = None
) -> OracleSolution:
    """
    Solve for the contorsion of the Einstein connection at one point.

    Args:
        geom: Point geometry
        sv_threshold: Relative singular value cutoff (defaults to config)

    Returns:
        OracleSolution; check `consistent` before treating it as a connection
    """
    n = geom.dim
    A = metricity_matrix(geom.fm)
    b = -geom.nablaF.components.reshape(n**3)
    solution = solve_dense(A, b, rcond=sv_threshold)

    K = solution.x.reshape(n, n, n)
    T = torsion_from_contorsion(K)

    oracle = OracleSolution(
        K=ContorsionAtPoint(K),
        T=T,
        unique=solution.unique,
        rank=solution.rank,
        system_residual=solution.residual,
        f2_condition_residual=f2_torsion_residual(T.components, geom),
        f_condition_residual=f_torsion_residual(T.components, geom),
        s1_residual=s1_residual(geom),
    )
    logger.debug(
        f"oracle at {geom.coords}: rank {solution.rank}/{n**3}, "
        f"residual {solution.residual:.2e}, f2 {oracle.f2_condition_residual:.2e}"
    )
    return oracle


def comparison_gate(oracle: OracleSolution, require_f2: bool = True) -> str | None:
    """Reason the oracle cannot serve as ground truth here, or None."""
    if not oracle.unique:
        return "oracle solution not unique"
    if oracle.system_residual >= config.get_float("numerics.tolerances.oracle_consistency", 1e-10):
        return "no Einstein connection at this point"
    if require_f2 and oracle.f2_condition_residual >= config.get_float(
        "numerics.tolerances.f2_condition", 1e-9
    ):
        return "oracle torsion violates the f^2-torsion condition"
    return None


def compare_with_formula(
    oracle: OracleSolution,
    formula: TorsionAtPoint | Array,
    tol: float | None = None,
    require_f2: bool = True,
    check_id: str = "FORMULA_VS_ORACLE",
) -> CheckResult:
    """
    Sup-norm distance between a closed-form torsion and the oracle torsion.

    Skipped (not failed) when the oracle is not unique, the system is
    inconsistent, or the f²-torsion condition the formula assumes is absent.
    """
    if tol is None:
        tol = config.get_float("numerics.tolerances.identity", 1e-8)
    reason = comparison_gate(oracle, require_f2)
    if reason is not None:
        return CheckResult.skipped(check_id, reason, tol)
    T = formula.components if isinstance(formula, TorsionAtPoint) else formula
    return CheckResult.evaluate(check_id, sup_norm(T - oracle.T.components), tol)
