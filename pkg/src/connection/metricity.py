"""
The metricity equation (∇_X G)(Y,Z) + G(T(X,Y),Z) = 0 for G = g + F
"""

import numpy as np

from src.config import config
from src.geometry import PointGeometry, covariant_two_form
from src.results import CheckResult
from src.tensors import Array, sup_norm

from .types import ConnectionAtPoint


def metricity_operator(K: Array, f: Array) -> Array:
    """
    Linear part of the metricity equation in the contorsion.

    With ∇ = ∇^g + K the equation reads
        (∇^g_X F)(Y,Z) - G(K_X Y, Z) - G(Y, K_X Z) + G(T(X,Y), Z) = 0,
    and this returns the last three terms. Leading axes of K are batch axes.

    Args:
        K: Contorsion components [..., a, b, c]
        f: Endomorphism f
    """
    T = K - np.einsum("...bac->...abc", K)
    g_k_first = K + np.einsum("kc,...abk->...abc", f, K)
    g_k_second = np.einsum("...acb->...abc", K) - np.einsum("kb,...ack->...abc", f, K)
    g_torsion = T + np.einsum("kc,...abk->...abc", f, T)
    return -g_k_first - g_k_second + g_torsion


def connection_derivatives(conn: ConnectionAtPoint, geom: PointGeometry) -> tuple[Array, Array]:
    """(∇g, ∇F) of the assembled connection, each indexed [X, Y, Z]."""
    nabla_g = covariant_two_form(conn.gamma_total, geom.g.components, geom.dg)
    nabla_F = covariant_two_form(conn.gamma_total, geom.F.components, geom.dFp)
    return nabla_g, nabla_F


def metricity_tensor(conn: ConnectionAtPoint, geom: PointGeometry) -> Array:
    """(∇_X G)(Y,Z) + G(T(X,Y),Z) computed from the connection coefficients alone."""
    G = geom.g.components + geom.F.components
    dG = geom.dg + geom.dFp
    nabla_G = covariant_two_form(conn.gamma_total, G, dG)
    torsion = conn.gamma_total - np.einsum("kji->kij", conn.gamma_total)
    return nabla_G + np.einsum("kab,kc->abc", torsion, G)


def metricity_residual(
    conn: ConnectionAtPoint,
    geom: PointGeometry,
    tol: float | None = None,
    check_id: str = "METRICITY",
) -> CheckResult:
    """
    Sup-norm of the metricity equation for an assembled connection.

    Args:
        conn: Connection with coefficients Γ_total
        geom: Point geometry the connection lives on
        tol: Pass threshold (defaults to numerics.tolerances.identity)
        check_id: Identity name written to the result
    """
    if tol is None:
        tol = config.get_float("numerics.tolerances.identity", 1e-8)
    return CheckResult.evaluate(check_id, sup_norm(metricity_tensor(conn, geom)), tol)
