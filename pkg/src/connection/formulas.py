"""
Closed-form torsion of Einstein connections.

Each formula is an operator-word expression over N = ∇^g F and dF (see
src.tensors.expressions). Expressions written for T(Y,Z,X) are rearranged to
the T[a, b, c] = T(e_a, e_b, e_c) layout and projected onto skew12; the size
of the discarded symmetric part is kept as `asymmetry`.
"""

import math

import numpy as np

from src.config import config
from src.exceptions import (
    InvalidLambdaError,
    NotAlmostHermitianError,
    ReebNotParallelError,
    StructureMismatchError,
)
from src.geometry import PointGeometry
from src.logging_config import get_module_logger
from src.tensors import Array, Expression, Symmetry3, Tensor3, Term, sup_norm, transform_slots

from .conditions import acm_structure_residual
from .types import TorsionAtPoint, TorsionSource

logger = get_module_logger("connection.formulas")

# 2T(Y,Z,X) for an almost Hermitian structure (f² = -I)
HERMITIAN = Expression.parse(
    "hermitian",
    """
    +2 N(fX,fY,Z) -N(fY,fZ,X) -N(fZ,X,fY) -N(Y,Z,X) -N(Z,X,Y)
    """,
)

# 2T(Y,Z,f⁶X) under the f²-torsion condition with P = I - f² invertible
WEAK = Expression.parse(
    "weak",
    """
    -N(X,fY,fZ) -N(X,f3Y,fZ) -N(Y,f2Z,X) -N(Z,f2X,Y)
    +N(fX,f3Y,Z) +N(fX,f2Y,fZ) -N(fY,f3Z,X) -N(fZ,f2X,fY)
    -3 N(PiQf2X,fY,Z) -2 N(PiQ2f2X,fY,Z) +3 N(PiQf2X,Y,fZ) +2 N(PiQ2f2X,Y,fZ)
    -N(PiQf4X,fY,Z) +N(PiQf4X,Y,fZ) +N(Qf2X,Y,Z)
    -2 dF(Y,Z,Qf2X) -3/2 dF(Y,Z,Q2f2X) +1/2 dF(Y,fZ,Qf3X) +1/2 dF(fY,Z,Qf3X)
    +dF(fY,fZ,QX) +dF(fY,fZ,Q2X)
    """,
)

# T(Y,Z,X) for X in ker f
WEAK_SINGULAR = Expression.parse("weak_singular", "+2 N(X,Y,Z) +dF(Y,Z,X)")

# 2T(X,Y,Z) when K = T/2
SPECIAL = Expression.parse("special", "+N(X,Y,Z) -N(fZ,fX,Y) -N(fY,fX,Z)")


def _skew12(T: Array) -> tuple[Array, float]:
    symmetric = 0.5 * (T + np.einsum("bac->abc", T))
    return T - symmetric, sup_norm(symmetric)


def _from_yzx(R: Array) -> Array:
    """R[a, b, c] = value of T(e_b, e_c, e_a) -> T[b, c, a]."""
    return np.einsum("abc->bca", R)


def _torsion(T: Array, source: TorsionSource) -> TorsionAtPoint:
    projected, asymmetry = _skew12(T)
    return TorsionAtPoint(Tensor3(projected, Symmetry3.SKEW12), source, asymmetry)


def _geometry_operands(geom: PointGeometry) -> dict[str, Array]:
    return {"N": geom.nablaF.components, "dF": geom.dF.components}


def _require_almost_hermitian(geom: PointGeometry) -> None:
    residual = geom.almost_hermitian_residual()
    if residual > config.get_float("numerics.thresholds.almost_hermitian", 1e-10):
        raise NotAlmostHermitianError(residual)


def torsion_hermitian(geom: PointGeometry) -> TorsionAtPoint:
    """
    Torsion of the Einstein connection of an almost Hermitian manifold.

    Raises:
        NotAlmostHermitianError: If f² != -I at the point
    """
    _require_almost_hermitian(geom)
    R = HERMITIAN.evaluate(_geometry_operands(geom), geom.operators)
    return _torsion(0.5 * _from_yzx(R), TorsionSource.HERMITIAN)


def torsion_weak(geom: PointGeometry) -> TorsionAtPoint:
    """
    Torsion under the f²-torsion condition, for arbitrary f with I - f² invertible.

    On the complement of ker f the formula gives T(Y,Z,f⁶X), which is inverted
    through the cached f⁶ inverse; on ker f the singular branch applies.

    Raises:
        SingularPError: If P = I - f² is singular
        KernelSplitUnavailableError: If the ker f splitting is unavailable
    """
    operators = dict(geom.operators)
    operators["Pi"] = geom.Pinv
    operands = _geometry_operands(geom)

    complement_inverse = geom.f6_complement_inverse
    kernel_projector = geom.kernel_projector

    # R[a, b, c] = 2T(e_b, e_c, f⁶ e_a);  S[a, b, c] = T(e_b, e_c, e_a) for e_a in ker f
    R = WEAK.evaluate(operands, operators)
    T = 0.5 * np.einsum("aw,abc->bcw", complement_inverse, R)
    if geom.require_split().kernel_dim:
        S = WEAK_SINGULAR.evaluate(operands, operators)
        T = T + np.einsum("aw,abc->bcw", kernel_projector, S)

    torsion = _torsion(T, TorsionSource.WEAK)
    logger.debug(f"weak formula asymmetry {torsion.asymmetry:.3e} at {geom.coords}")
    return torsion


def _weighted_coefficients(lam: float) -> tuple[float, float, float, float]:
    root = math.sqrt(lam)
    c1 = (lam - 1.0) * (5.0 - 3.0 * lam) / (4.0 * lam**2)
    c2 = 1.0 / lam + (lam - 1.0) / (2.0 * root)
    c3 = -((3.0 * lam**2 - 2.0 * lam + 1.0) / (4.0 * lam**2) + (lam - 1.0) / (4.0 * root))
    c4 = (lam - 1.0) / (4.0 * root) - 1.0 / (2.0 * lam) - (lam - 1.0) / (2.0 * lam**2)
    return c1, c2, c3, c4


def weighted_factor_expression(lam: float, form: str = "simplified") -> Expression:
    """T(Y,Z,X) on one weighted factor, written with J = f/sqrt(lam)."""
    if form == "simplified":
        c1, c2, c3, c4 = _weighted_coefficients(lam)
        terms = [
            Term.of(c1, "N", "X", "Y", "Z"),
            Term.of(c2, "N", "JX", "Y", "JZ"),
            Term.of(c3, "N", "Z", "X", "Y"),
            Term.of(c3, "N", "Y", "Z", "X"),
            Term.of(c4, "N", "JY", "JZ", "X"),
            Term.of(c4, "N", "JZ", "X", "JY"),
        ]
    elif form == "expanded":
        root = math.sqrt(lam)
        shifted = lam - 1.0
        terms = [
            Term.of(shifted / lam**2, "N", "X", "Y", "Z"),
            Term.of(-0.5 / lam**2, "N", "Y", "Z", "X"),
            Term.of(-0.5 / lam**2, "N", "Z", "X", "Y"),
            Term.of(1.0 / lam, "N", "JX", "Y", "JZ"),
            Term.of(-0.5 / lam, "N", "JY", "JZ", "X"),
            Term.of(-0.5 / lam, "N", "JZ", "X", "JY"),
            Term.of(-0.25 * shifted * (3.0 * lam + 1.0) / lam**2, "dF", "Y", "Z", "X"),
            Term.of(0.25 * shifted / root, "dF", "Y", "JZ", "JX"),
            Term.of(0.25 * shifted / root, "dF", "JY", "Z", "JX"),
            Term.of(-0.5 * shifted / lam**2, "dF", "JY", "JZ", "X"),
        ]
    else:
        raise ValueError(f"Unknown weighted-factor form '{form}'")
    return Expression.from_terms(f"weighted_{form}", terms)


def torsion_weighted_factor(
    factor: PointGeometry, lam: float, form: str = "simplified"
) -> TorsionAtPoint:
    """
    Torsion on one factor of a weighted product f = ⊕ sqrt(λ_j) J_j.

    Args:
        factor: Geometry of the factor, with F_j = g_j(·, sqrt(λ) J_j ·)
        lam: The factor weight λ
        form: "simplified" or "expanded"; both agree on almost Hermitian factors

    Raises:
        InvalidLambdaError: If lam <= 0
        NotAlmostHermitianError: If J = f/sqrt(lam) is not a complex structure
    """
    if lam <= 0:
        raise InvalidLambdaError(lam)
    J = factor.fm / math.sqrt(lam)
    residual = sup_norm(J @ J + np.eye(factor.dim))
    if residual > config.get_float("numerics.thresholds.almost_hermitian", 1e-10):
        raise NotAlmostHermitianError(residual)

    operators = {**factor.operators, "J": J}
    R = weighted_factor_expression(lam, form).evaluate(_geometry_operands(factor), operators)
    return _torsion(_from_yzx(R), TorsionSource.WEIGHTED_FACTOR)


def torsion_special(geom: PointGeometry) -> TorsionAtPoint:
    """
    Torsion when the contorsion is half the torsion.

    Raises:
        StructureMismatchError: Unless f² = -I, or f² = -I + η⊗ξ with Reeb data
    """
    tol = config.get_float("numerics.thresholds.almost_hermitian", 1e-10)
    if geom.almost_hermitian_residual() > tol and acm_structure_residual(geom) > tol:
        raise StructureMismatchError(
            "special torsion formula needs an almost Hermitian or almost contact metric structure"
        )
    R = SPECIAL.evaluate(_geometry_operands(geom), geom.operators)
    return _torsion(0.5 * R, TorsionSource.SPECIAL)


def torsion_acm(geom: PointGeometry) -> TorsionAtPoint:
    """
    Torsion on an almost contact metric manifold with parallel Reeb field.

    The Hermitian expression is evaluated with f and every slot is projected
    with h = I - ξ⊗η, so T vanishes whenever ξ is an argument.

    Raises:
        StructureMismatchError: If there is no almost contact metric structure
        ReebNotParallelError: If ∇^g ξ does not vanish
    """
    if geom.reeb is None:
        raise StructureMismatchError("almost contact metric formula needs Reeb data")
    structure = acm_structure_residual(geom)
    if structure > config.get_float("numerics.thresholds.almost_hermitian", 1e-10):
        raise StructureMismatchError(
            f"f^2 = -I + eta(x)xi fails: residual {structure:.3e}"
        )
    threshold = config.get_float("numerics.thresholds.reeb_parallel", 1e-9)
    drift = sup_norm(geom.reeb.nabla_xi)
    if drift > threshold:
        raise ReebNotParallelError(drift, threshold)

    R = HERMITIAN.evaluate(_geometry_operands(geom), geom.operators)
    h = geom.reeb.horizontal_projector
    T = transform_slots(0.5 * _from_yzx(R), h, h, h)
    return _torsion(T, TorsionSource.ACM)


def torsion_from_dF(geom: PointGeometry, scale: float = -1.0 / 3.0) -> TorsionAtPoint:
    """T = scale · dF (the nearly-Kähler case uses scale = -1/3)."""
    return TorsionAtPoint(
        Tensor3(scale * geom.dF.components, Symmetry3.SKEW12), TorsionSource.FROM_DF
    )
