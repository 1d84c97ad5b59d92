"""
Finite-difference validation of closed-form partials
"""

import numpy as np

from src.config import config
from src.results import CheckResult
from src.tensors import sup_norm

from .fields import ChartPoint, StructureFields


def _central_difference(fn, x: np.ndarray, h: float) -> np.ndarray:
    """out[l, ...] = (fn(x + h e_l) - fn(x - h e_l)) / 2h"""
    rows = []
    for direction in np.eye(x.shape[0]):
        rows.append((fn(x + h * direction) - fn(x - h * direction)) / (2.0 * h))
    return np.stack(rows)


def fd_validate(
    fields: StructureFields,
    p: ChartPoint,
    h: float | None = None,
    tol: float | None = None,
) -> CheckResult:
    """
    Compare the supplied partials of g and F with central differences.

    The residual is the sup-norm of the mismatch relative to max(1, sup of the
    partials).

    Args:
        fields: Closed-form structure fields
        p: Chart point
        h: Step (defaults to numerics.finite_differences.step)
        tol: Pass threshold (defaults to numerics.tolerances.fd_relative)
    """
    if h is None:
        h = config.get_float("numerics.finite_differences.step", 1e-5)
    if tol is None:
        tol = config.get_float("numerics.tolerances.fd_relative", 1e-6)

    x = p.array
    dg = fields.dg_at(x)
    dFp = fields.dFp_at(x)
    mismatch = max(
        sup_norm(_central_difference(fields.g_at, x, h) - dg),
        sup_norm(_central_difference(fields.F_at, x, h) - dFp),
    )
    scale = max(1.0, sup_norm(dg), sup_norm(dFp))
    return CheckResult.evaluate("FD_VALIDATE", mismatch / scale, tol)
