"""
Pointwise geometry: Levi-Civita connection, ∇^g F, dF and the operator
algebra generated by f at a single chart point.

Index conventions (all arrays in the chart basis):
    dg[l, i, j]     = ∂_l g_ij
    gamma[k, i, j]  = Γ^k_ij
    nablaF[l, i, j] = (∇^g_l F)_ij
    dF[i, j, k]     = dF(e_i, e_j, e_k) = ∂_i F_jk + ∂_j F_ki + ∂_k F_ij
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from src.config import config
from src.exceptions import (
    DegenerateMetricError,
    KernelSplitUnavailableError,
    NonFiniteError,
    NotSelfAdjointError,
    SingularPError,
)
from src.logging_config import get_module_logger
from src.tensors import (
    Array,
    Endo,
    SpectralSplit,
    Symmetry2,
    Symmetry3,
    Tensor2,
    Tensor3,
    raise_endo,
    spectral_split,
    sup_norm,
)

from .fields import ChartPoint, StructureFields

logger = get_module_logger("geometry")


@dataclass(frozen=True)
class ReebAtPoint:
    """ξ, η and their Levi-Civita derivatives: nabla_xi[l, k] = (∇_l ξ)^k, nabla_eta[l, j]."""

    xi: Array
    eta: Array
    nabla_xi: Array
    nabla_eta: Array

    @property
    def horizontal_projector(self) -> Array:
        """h = I - ξ ⊗ η, as an endomorphism."""
        return np.eye(self.xi.shape[0]) - np.outer(self.xi, self.eta)


@dataclass(frozen=True)
class PointGeometry:
    """Everything the torsion formulas need at one point."""

    coords: tuple[float, ...]
    g: Tensor2
    ginv: Array
    dg: Array
    F: Tensor2
    dFp: Array
    f: Endo
    gamma: Array
    nablaF: Tensor3
    dF: Tensor3
    nabla_f: Array
    split: SpectralSplit | None
    reeb: ReebAtPoint | None = None
    operators: dict[str, Array] = field(default_factory=dict, compare=False)
    p_determinant: float = 1.0

    @property
    def dim(self) -> int:
        return self.g.dim

    @property
    def Qtilde(self) -> Array:
        return self.operators["Q"]

    @property
    def P(self) -> Array:
        return self.operators["P"]

    @property
    def Pinv(self) -> Array:
        """
        Raises:
            SingularPError: If I - f² is not invertible at this point
        """
        if "Pi" not in self.operators:
            raise SingularPError(self.p_determinant)
        return self.operators["Pi"]

    @property
    def fm(self) -> Array:
        return self.f.components

    def require_split(self) -> SpectralSplit:
        if self.split is None:
            raise KernelSplitUnavailableError(
                "ker f^2 splitting unavailable at this point (f^2 not g-self-adjoint)"
            )
        return self.split

    @cached_property
    def f6_complement_inverse(self) -> Array:
        """
        Matrix sending W to the X on the complement with f⁶X = W's complement part.

        Zero on ker f².
        """
        split = self.require_split()
        nc = split.complement_basis.shape[1]
        if nc == 0:
            return np.zeros((self.dim, self.dim))
        basis = split.change_of_basis
        dual = np.linalg.inv(basis)
        cb = split.complement_basis
        restricted = (dual @ self.operators["f6"] @ cb)[:nc]
        return cb @ np.linalg.inv(restricted) @ dual[:nc]

    @cached_property
    def kernel_projector(self) -> Array:
        """Projection onto ker f² along the complement."""
        split = self.require_split()
        nc = split.complement_basis.shape[1]
        dual = np.linalg.inv(split.change_of_basis)
        return split.kernel_basis @ dual[nc:]

    def almost_hermitian_residual(self) -> float:
        return sup_norm(self.operators["f2"] + np.eye(self.dim))


def christoffel(ginv: Array, dg: Array) -> Array:
    """Γ^k_ij = ½ g^{kl}(∂_i g_jl + ∂_j g_il - ∂_l g_ij)."""
    lowered = np.einsum("ijl->lij", dg) + np.einsum("jil->lij", dg) - dg
    return 0.5 * np.einsum("kl,lij->kij", ginv, lowered)


def covariant_two_form(gamma: Array, tensor: Array, partials: Array) -> Array:
    """(∇_l B)_ij = ∂_l B_ij - Γ^m_li B_mj - Γ^m_lj B_im for a (0,2) tensor B."""
    return (
        partials
        - np.einsum("mli,mj->lij", gamma, tensor)
        - np.einsum("mlj,im->lij", gamma, tensor)
    )


def cyclic_sum(array: Array) -> Array:
    """out[i, j, k] = A[i, j, k] + A[j, k, i] + A[k, i, j]."""
    return array + np.einsum("jki->ijk", array) + np.einsum("kij->ijk", array)


def _operator_algebra(f: Array, singular_p: float) -> tuple[dict[str, Array], float]:
    n = f.shape[0]
    identity = np.eye(n)
    ops: dict[str, Array] = {"f": f}
    power = f
    for k in range(2, 7):
        power = power @ f
        ops[f"f{k}"] = power
    q = -ops["f2"] - identity
    ops["Q"] = q
    ops["Q2"] = q @ q
    ops["Q3"] = ops["Q2"] @ q
    ops["P"] = identity - ops["f2"]
    det_p = float(np.linalg.det(ops["P"]))
    if abs(det_p) >= singular_p:
        ops["Pi"] = np.linalg.inv(ops["P"])
    return ops, det_p


def point_geometry_from_jet(
    g: Array,
    dg: Array,
    F: Array,
    dFp: Array,
    coords: tuple[float, ...] = (),
    reeb: tuple[Array, Array, Array, Array] | None = None,
) -> PointGeometry:
    """
    Assemble a PointGeometry from the 1-jet of (g, F) at a point.

    Args:
        g: Metric components
        dg: dg[l, i, j] = ∂_l g_ij
        F: Two-form components
        dFp: dFp[l, i, j] = ∂_l F_ij
        coords: Chart coordinates (for reporting)
        reeb: Optional (xi, dxi, eta, deta) as in ReebFields

    Raises:
        NonFiniteError: If an input contains NaN or infinity
        DegenerateMetricError: If det g is numerically zero
    """
    for name, value in (("g", g), ("dg", dg), ("F", F), ("dF partials", dFp)):
        if not np.all(np.isfinite(value)):
            raise NonFiniteError(name)

    n = g.shape[0]
    scale = max(float(np.max(np.abs(g))), np.finfo(float).tiny)
    threshold = config.get_float("numerics.thresholds.degenerate_metric", 1e-12) * scale**n
    det = float(np.linalg.det(g))
    if abs(det) < threshold:
        raise DegenerateMetricError(det, threshold)

    metric = Tensor2(g, Symmetry2.SYMMETRIC)
    two_form = Tensor2(F, Symmetry2.SKEW)
    ginv = np.linalg.inv(metric.components)
    f = raise_endo(two_form, metric, ginv)

    gamma = christoffel(ginv, dg)
    nabla = covariant_two_form(gamma, two_form.components, dFp)
    exterior = cyclic_sum(dFp)

    # ∂_l f = g^{-1}(∂_l F - ∂_l g f)
    df = np.einsum("km,lmj->lkj", ginv, dFp - np.einsum("lmn,nj->lmj", dg, f.components))
    nabla_f = (
        df
        + np.einsum("klm,mj->lkj", gamma, f.components)
        - np.einsum("mlj,km->lkj", gamma, f.components)
    )

    ops, det_p = _operator_algebra(
        f.components, config.get_float("numerics.thresholds.singular_p", 1e-12)
    )

    try:
        split: SpectralSplit | None = spectral_split(ops["f2"], metric)
    except NotSelfAdjointError as e:
        logger.debug(f"No kernel split at {coords}: {e}")
        split = None

    reeb_point = None
    if reeb is not None:
        xi, dxi, eta, deta = reeb
        reeb_point = ReebAtPoint(
            xi=xi,
            eta=eta,
            nabla_xi=dxi + np.einsum("klm,m->lk", gamma, xi),
            nabla_eta=deta - np.einsum("mlj,m->lj", gamma, eta),
        )

    return PointGeometry(
        coords=coords,
        g=metric,
        ginv=ginv,
        dg=dg,
        F=two_form,
        dFp=dFp,
        f=f,
        gamma=gamma,
        nablaF=Tensor3(nabla, Symmetry3.SKEW23),
        dF=Tensor3(exterior, Symmetry3.TOTALLY_SKEW),
        nabla_f=nabla_f,
        split=split,
        reeb=reeb_point,
        operators=ops,
        p_determinant=det_p,
    )


def point_geometry(fields: StructureFields, p: ChartPoint) -> PointGeometry:
    """Evaluate the closed-form fields at p and assemble the point geometry."""
    x = p.array
    reeb = None
    if fields.reeb is not None:
        reeb = (
            fields.reeb.xi_at(x),
            fields.reeb.dxi_at(x),
            fields.reeb.eta_at(x),
            fields.reeb.deta_at(x),
        )
    return point_geometry_from_jet(
        fields.g_at(x), fields.dg_at(x), fields.F_at(x), fields.dFp_at(x), p.coords, reeb
    )


def factor_geometry(geom: PointGeometry, indices: tuple[int, ...]) -> PointGeometry:
    """Restrict a product geometry to one factor's coordinate block."""
    idx = np.asarray(indices)
    block2 = np.ix_(idx, idx)
    block3 = np.ix_(idx, idx, idx)
    return point_geometry_from_jet(
        geom.g.components[block2],
        geom.dg[block3],
        geom.F.components[block2],
        geom.dFp[block3],
        tuple(geom.coords[i] for i in indices) if geom.coords else (),
    )


def nabla_g_residual(geom: PointGeometry) -> float:
    """sup |∇^g g|; zero up to rounding for the Levi-Civita connection."""
    return sup_norm(covariant_two_form(geom.gamma, geom.g.components, geom.dg))


def dF_cyclic(geom: PointGeometry) -> Array:
    """dF computed as the cyclic sum of ∇^g F."""
    return cyclic_sum(geom.nablaF.components)


def nablaF_via_f(geom: PointGeometry) -> Array:
    """g(X, (∇_Z f) Y) arranged as [Z, X, Y], to compare with nablaF."""
    return np.einsum("ik,lkj->lij", geom.g.components, geom.nabla_f)
