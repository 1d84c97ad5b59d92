"""
Torsion <-> contorsion conversions and connection assembly
"""

import numpy as np

from src.geometry import PointGeometry
from src.tensors import Array, Expression, Symmetry3, Tensor3

from .types import ConnectionAtPoint, ContorsionAtPoint, TorsionAtPoint, TorsionSource

# 2K(X,Y,Z) = T(X,Y,Z) - T(Z,X,fY) + T(Y,Z,fX)
CONTORSION_FROM_TORSION = Expression.parse(
    "contorsion",
    "+1/2 T(X,Y,Z) -1/2 T(Z,X,fY) +1/2 T(Y,Z,fX)",
)

# K_X Y = ½{T(fX,Y) - T(X,fY) + T(X,Y)}, valid for totally skew torsion
CONTORSION_SKEW = Expression.parse(
    "contorsion_skew",
    "+1/2 T(fX,Y,Z) -1/2 T(X,fY,Z) +1/2 T(X,Y,Z)",
)


def contorsion_from_torsion(torsion: TorsionAtPoint | Array, geom: PointGeometry) -> ContorsionAtPoint:
    """
    Contorsion of the Einstein connection with the given torsion.

    Only meaningful when an Einstein connection with this torsion exists; the
    result is then unique.
    """
    T = torsion.components if isinstance(torsion, TorsionAtPoint) else torsion
    return ContorsionAtPoint(CONTORSION_FROM_TORSION.evaluate({"T": T}, geom.operators))


def contorsion_skew(torsion: TorsionAtPoint | Array, geom: PointGeometry) -> ContorsionAtPoint:
    T = torsion.components if isinstance(torsion, TorsionAtPoint) else torsion
    return ContorsionAtPoint(CONTORSION_SKEW.evaluate({"T": T}, geom.operators))


def torsion_from_contorsion(
    K: ContorsionAtPoint | Array, source: TorsionSource = TorsionSource.ORACLE
) -> TorsionAtPoint:
    """T(X,Y) = K_X Y - K_Y X."""
    k = K.K if isinstance(K, ContorsionAtPoint) else K
    return TorsionAtPoint(Tensor3(k - np.einsum("bac->abc", k), Symmetry3.SKEW12), source)


def assemble_connection(geom: PointGeometry, K: ContorsionAtPoint) -> ConnectionAtPoint:
    """Γ_total^k_ij = Γ^k_ij + g^{kc} K_ijc."""
    return ConnectionAtPoint(
        gamma_total=geom.gamma + np.einsum("kc,ijc->kij", geom.ginv, K.K),
        K=K,
    )


def connection_torsion(conn: ConnectionAtPoint, geom: PointGeometry) -> Array:
    """Lowered torsion read off the coefficients: T_ijc = g_kc (Γ^k_ij - Γ^k_ji)."""
    raw = conn.gamma_total - np.einsum("kji->kij", conn.gamma_total)
    return np.einsum("kij,kc->ijc", raw, geom.g.components)
