"""
Residuals of pointwise conditions on torsion, contorsion and ∇^g F
"""

import numpy as np

from src.geometry import PointGeometry
from src.tensors import Array, Expression, sup_norm, transform_slots


def f2_torsion_residual(T: Array, geom: PointGeometry) -> float:
    """T(f²X,Y,Z) = T(X,f²Y,Z) = T(X,Y,f²Z)."""
    f2 = geom.operators["f2"]
    first = transform_slots(T, first=f2)
    second = transform_slots(T, second=f2)
    third = transform_slots(T, third=f2)
    return max(sup_norm(first - second), sup_norm(second - third))


def f_torsion_residual(T: Array, geom: PointGeometry) -> float:
    """T(fX,Y) = T(X,fY) = -fT(X,Y), lowered: T(fX,Y,Z) = T(X,fY,Z) = T(X,Y,fZ)."""
    f = geom.fm
    first = transform_slots(T, first=f)
    second = transform_slots(T, second=f)
    third = transform_slots(T, third=f)
    return max(sup_norm(first - second), sup_norm(second - third))


def s1_residual(geom: PointGeometry) -> float:
    """(∇_X F)(Y,Z) + (∇_Y F)(X,Z) = (∇_{fX}F)(fY,Z) + (∇_{fY}F)(fX,Z)."""
    N = geom.nablaF.components
    rotated = transform_slots(N, first=geom.fm, second=geom.fm)
    symmetric = N + np.einsum("bac->abc", N)
    return sup_norm(symmetric - rotated - np.einsum("bac->abc", rotated))


E2_CONDITION = Expression.parse(
    "E_COND_E2",
    "+T(X,Y,Z) -T(Z,X,Y) -T(Z,X,fY) +T(X,Y,fZ)",
)


def e2_residual(T: Array, geom: PointGeometry) -> float:
    """Condition under which the Einstein connection has totally skew torsion."""
    return sup_norm(E2_CONDITION.evaluate({"T": T}, geom.operators))


def special_residual(K: Array) -> float:
    """K(X,Y,Z) + K(Y,X,Z) = 0, i.e. K = T/2."""
    return sup_norm(K + np.einsum("bac->abc", K))


def codazzi_residual(geom: PointGeometry) -> float:
    """∇^g F totally skew: cyclic invariance and ∇^g F = dF/3."""
    N = geom.nablaF.components
    return max(
        sup_norm(N - np.einsum("bca->abc", N)),
        sup_norm(np.einsum("bca->abc", N) - np.einsum("cab->abc", N)),
        sup_norm(N - geom.dF.components / 3.0),
    )


def acm_structure_residual(geom: PointGeometry) -> float:
    """f² = -I + η⊗ξ, η(ξ) = 1 and g(fX,fY) = g(X,Y) - η(X)η(Y)."""
    if geom.reeb is None:
        return float("inf")
    xi, eta = geom.reeb.xi, geom.reeb.eta
    n = geom.dim
    g = geom.g.components
    f = geom.fm
    algebraic = geom.operators["f2"] + np.eye(n) - np.outer(xi, eta)
    compatible = f.T @ g @ f - g + np.outer(eta, eta)
    return max(sup_norm(algebraic), sup_norm(compatible), abs(float(eta @ xi) - 1.0))
