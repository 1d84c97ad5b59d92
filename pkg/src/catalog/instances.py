"""
Analytic example structures with closed-form fields and partials.

All builders return StructureFields whose partials are exact; the
finite-difference check in src.geometry.validation guards the algebra.
"""

import math

import numpy as np

from src.exceptions import InvalidParamsError
from src.geometry import FactorBlock, ReebFields, StructureFields
from src.tensors import Array

from .registry import ParamSpec, register


def complex_structure(n: int) -> Array:
    """J₀ on R^n: J₀ e_{2k} = e_{2k+1}."""
    J = np.zeros((n, n))
    for k in range(0, n, 2):
        J[k + 1, k] = 1.0
        J[k, k + 1] = -1.0
    return J


def plane_generator(n: int, i: int, j: int) -> Array:
    """Skew generator of rotations in the (e_i, e_j) plane."""
    A = np.zeros((n, n))
    A[j, i] = 1.0
    A[i, j] = -1.0
    return A


def rotated_complex_structure(theta: float) -> tuple[Array, Array]:
    """
    R J₀ Rᵀ on R⁴ with R = exp(θA) rotating the (e₀, e₂) plane, and its
    θ-derivative A·RJ₀Rᵀ - RJ₀Rᵀ·A.
    """
    A = plane_generator(4, 0, 2)
    R = np.eye(4) + math.sin(theta) * A + (1.0 - math.cos(theta)) * (A @ A)
    rotated = R @ complex_structure(4) @ R.T
    return rotated, A @ rotated - rotated @ A


def _zeros3(n: int):
    return lambda x: np.zeros((n, n, n))


def _constant(value: Array):
    return lambda x: value.copy()


def _require_even(dim: int, manifold: str) -> None:
    if dim < 2 or dim % 2:
        raise InvalidParamsError(f"dim must be even and >= 2, got {dim}", manifold)


@register(
    "kaehler_flat",
    "Euclidean R^n with the constant complex structure; nabla F = 0",
    params=(ParamSpec("dim", 4, "even dimension", positive=True),),
    almost_hermitian=True,
)
def kaehler_flat(dim: int) -> StructureFields:
    _require_even(dim, "kaehler_flat")
    return StructureFields(
        dim=dim,
        g_at=_constant(np.eye(dim)),
        dg_at=_zeros3(dim),
        F_at=_constant(complex_structure(dim)),
        dFp_at=_zeros3(dim),
        signature=(dim, 0),
    )


@register(
    "hermitian_rotated_J",
    "R^4, euclidean g, f = R(x) J0 R(x)^T with R rotating (e0, e2) by frequency*x0",
    params=(ParamSpec("frequency", 1.0, "rotation rate along x0"),),
    almost_hermitian=True,
)
def hermitian_rotated_J(frequency: float) -> StructureFields:
    def F_at(x: Array) -> Array:
        return rotated_complex_structure(frequency * x[0])[0]

    def dFp_at(x: Array) -> Array:
        out = np.zeros((4, 4, 4))
        out[0] = frequency * rotated_complex_structure(frequency * x[0])[1]
        return out

    return StructureFields(
        dim=4,
        g_at=_constant(np.eye(4)),
        dg_at=_zeros3(4),
        F_at=F_at,
        dFp_at=dFp_at,
        signature=(4, 0),
    )


@register(
    "weighted_product",
    "product of rotated-J factors R^4 x ... with f = sqrt(lambda_1) J_1 + ... (one per lambda)",
    params=(
        ParamSpec("lambdas", (2.0, 3.0), "factor weights, one per R^4 factor", positive=True),
        ParamSpec("frequency", 1.0, "rotation rate of every factor"),
    ),
)
def weighted_product(lambdas: tuple[float, ...], frequency: float) -> StructureFields:
    if not lambdas:
        raise InvalidParamsError("at least one factor weight is needed", "weighted_product")
    n = 4 * len(lambdas)
    blocks = [slice(4 * j, 4 * j + 4) for j in range(len(lambdas))]
    roots = [math.sqrt(lam) for lam in lambdas]

    def F_at(x: Array) -> Array:
        out = np.zeros((n, n))
        for block, root in zip(blocks, roots):
            out[block, block] = root * rotated_complex_structure(frequency * x[block.start])[0]
        return out

    def dFp_at(x: Array) -> Array:
        out = np.zeros((n, n, n))
        for block, root in zip(blocks, roots):
            derivative = rotated_complex_structure(frequency * x[block.start])[1]
            out[block.start, block, block] = root * frequency * derivative
        return out

    factors = tuple(
        FactorBlock(tuple(range(b.start, b.stop)), float(lam)) for b, lam in zip(blocks, lambdas)
    )
    return StructureFields(
        dim=n,
        g_at=_constant(np.eye(n)),
        dg_at=_zeros3(n),
        F_at=F_at,
        dFp_at=dFp_at,
        signature=(n, 0),
        factors=factors,
    )


@register(
    "acm_product",
    "R x hermitian_rotated_J with xi = d/dt, eta = dt; xi is parallel",
    params=(ParamSpec("frequency", 1.0, "rotation rate of the Hermitian factor along x1"),),
)
def acm_product(frequency: float) -> StructureFields:
    horizontal = slice(1, 5)
    e0 = np.eye(5)[0]

    def F_at(x: Array) -> Array:
        out = np.zeros((5, 5))
        out[horizontal, horizontal] = rotated_complex_structure(frequency * x[1])[0]
        return out

    def dFp_at(x: Array) -> Array:
        out = np.zeros((5, 5, 5))
        out[1, horizontal, horizontal] = (
            frequency * rotated_complex_structure(frequency * x[1])[1]
        )
        return out

    reeb = ReebFields(
        xi_at=_constant(e0),
        dxi_at=_constant(np.zeros((5, 5))),
        eta_at=_constant(e0),
        deta_at=_constant(np.zeros((5, 5))),
    )
    return StructureFields(
        dim=5,
        g_at=_constant(np.eye(5)),
        dg_at=_zeros3(5),
        F_at=F_at,
        dFp_at=dFp_at,
        signature=(5, 0),
        reeb=reeb,
    )


# contact_R5 coordinates: (x1, x2, y1, y2, z)
_Z = 4


def _contact_eta(x: Array) -> Array:
    """η = ½(dz - y1 dx1 - y2 dx2)."""
    return 0.5 * np.array([-x[2], -x[3], 0.0, 0.0, 1.0])


def _contact_deta() -> Array:
    out = np.zeros((5, 5))
    out[2, 0] = -0.5
    out[3, 1] = -0.5
    return out


@register(
    "contact_R5",
    "standard contact metric structure on R^5; xi is not parallel (negative control)",
)
def contact_R5() -> StructureFields:
    flat = 0.25 * np.diag([1.0, 1.0, 1.0, 1.0, 0.0])
    # φ∂x_i = -∂y_i, φ∂y_i = ∂x_i + y_i∂z, φ∂z = 0; F = g φ = ¼(flat part of φ)
    F = np.zeros((5, 5))
    F[0, 2] = F[1, 3] = 0.25
    F[2, 0] = F[3, 1] = -0.25
    deta = _contact_deta()

    def g_at(x: Array) -> Array:
        eta = _contact_eta(x)
        return flat + np.outer(eta, eta)

    def dg_at(x: Array) -> Array:
        eta = _contact_eta(x)
        return np.einsum("li,j->lij", deta, eta) + np.einsum("i,lj->lij", eta, deta)

    xi = np.zeros(5)
    xi[_Z] = 2.0
    reeb = ReebFields(
        xi_at=_constant(xi),
        dxi_at=_constant(np.zeros((5, 5))),
        eta_at=_contact_eta,
        deta_at=_constant(deta),
    )
    return StructureFields(
        dim=5,
        g_at=g_at,
        dg_at=dg_at,
        F_at=_constant(F),
        dFp_at=_zeros3(5),
        signature=(5, 0),
        reeb=reeb,
    )


def _scaled_complex_structure(n: int, rate: float, manifold: str):
    """F = exp(rate·x0) J₀ on R^n and its x0-partial."""
    _require_even(n, manifold)
    J = complex_structure(n)

    def F_at(x: Array) -> Array:
        return math.exp(rate * x[0]) * J

    def dF_block(x: Array) -> Array:
        return rate * math.exp(rate * x[0]) * J

    return F_at, dF_block


@register(
    "weak_conformal_f",
    "R^4, euclidean g, f = a(x) J0 with a = exp(rate*x0); f^2 = -a^2 I",
    params=(ParamSpec("rate", 0.3, "growth rate of a along x0"),),
)
def weak_conformal_f(rate: float) -> StructureFields:
    F_block, dF_block = _scaled_complex_structure(4, rate, "weak_conformal_f")

    def dFp_at(x: Array) -> Array:
        out = np.zeros((4, 4, 4))
        out[0] = dF_block(x)
        return out

    return StructureFields(
        dim=4,
        g_at=_constant(np.eye(4)),
        dg_at=_zeros3(4),
        F_at=F_block,
        dFp_at=dFp_at,
        signature=(4, 0),
    )


@register(
    "f_with_kernel",
    "R^6, euclidean g, f = a(x) J0 on the first four coordinates and 0 on the last two",
    params=(ParamSpec("rate", 0.3, "growth rate of a along x0"),),
)
def f_with_kernel(rate: float) -> StructureFields:
    F_block, dF_block = _scaled_complex_structure(4, rate, "f_with_kernel")
    block = slice(0, 4)

    def F_at(x: Array) -> Array:
        out = np.zeros((6, 6))
        out[block, block] = F_block(x)
        return out

    def dFp_at(x: Array) -> Array:
        out = np.zeros((6, 6, 6))
        out[0, block, block] = dF_block(x)
        return out

    return StructureFields(
        dim=6,
        g_at=_constant(np.eye(6)),
        dg_at=_zeros3(6),
        F_at=F_at,
        dFp_at=dFp_at,
        signature=(6, 0),
    )


@register(
    "lorentz_flat",
    "Minkowski R^4 with a constant two-form F01, F23",
    params=(
        ParamSpec("f01", 0.5, "component F_01"),
        ParamSpec("f23", 0.8, "component F_23"),
    ),
)
def lorentz_flat(f01: float, f23: float) -> StructureFields:
    F = np.zeros((4, 4))
    F[0, 1], F[1, 0] = f01, -f01
    F[2, 3], F[3, 2] = f23, -f23
    return StructureFields(
        dim=4,
        g_at=_constant(np.diag([-1.0, 1.0, 1.0, 1.0])),
        dg_at=_zeros3(4),
        F_at=_constant(F),
        dFp_at=_zeros3(4),
        signature=(3, 1),
    )


@register(
    "conformal_kaehler",
    "R^4 with g = exp(2 c.x) delta and F = exp(2 c.x) J0; Hermitian, nabla F != 0",
    params=(ParamSpec("c", (0.2, -0.1, 0.15, 0.05), "conformal exponent, one entry per axis"),),
    almost_hermitian=True,
)
def conformal_kaehler(c: tuple[float, ...]) -> StructureFields:
    if len(c) != 4:
        raise InvalidParamsError(f"c needs 4 entries, got {len(c)}", "conformal_kaehler")
    rates = np.asarray(c)
    J = complex_structure(4)

    def factor(x: Array) -> float:
        return math.exp(2.0 * float(rates @ x))

    return StructureFields(
        dim=4,
        g_at=lambda x: factor(x) * np.eye(4),
        dg_at=lambda x: 2.0 * factor(x) * np.einsum("l,ij->lij", rates, np.eye(4)),
        F_at=lambda x: factor(x) * J,
        dFp_at=lambda x: 2.0 * factor(x) * np.einsum("l,ij->lij", rates, J),
        signature=(4, 0),
    )


@register(
    "polar_plane",
    "the plane in polar coordinates, g = diag(1, r^2), F = r dr^dtheta; Kaehler",
    almost_hermitian=True,
)
def polar_plane() -> StructureFields:
    def g_at(x: Array) -> Array:
        return np.diag([1.0, x[0] ** 2])

    def dg_at(x: Array) -> Array:
        out = np.zeros((2, 2, 2))
        out[0, 1, 1] = 2.0 * x[0]
        return out

    def F_at(x: Array) -> Array:
        return np.array([[0.0, x[0]], [-x[0], 0.0]])

    unit = np.zeros((2, 2, 2))
    unit[0] = [[0.0, 1.0], [-1.0, 0.0]]

    return StructureFields(
        dim=2,
        g_at=g_at,
        dg_at=dg_at,
        F_at=F_at,
        dFp_at=_constant(unit),
        signature=(2, 0),
    )
