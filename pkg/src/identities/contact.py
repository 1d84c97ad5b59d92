"""
Identities of almost contact metric structures, f² = -I + η⊗ξ.

They involve ξ, η and their Levi-Civita derivatives, so they are written as
einsum contractions instead of operator-word expressions. Every function
returns the residual array indexed [X, Y, Z].
"""

import numpy as np

from src.exceptions import MissingInputError
from src.geometry import PointGeometry, ReebAtPoint
from src.tensors import Array, transform_slots


def require_reeb(geom: PointGeometry, identity: str) -> ReebAtPoint:
    if geom.reeb is None:
        raise MissingInputError(identity, "Reeb data (xi, eta)")
    return geom.reeb


def derivative_of_f_squared(geom: PointGeometry) -> Array:
    """
    (∇_X f)fY + f(∇_X f)Y - (∇_X η)(Y)ξ - η(Y)∇_X ξ, lowered on its vector slot.

    Raises:
        MissingInputError: Without Reeb data
    """
    reeb = require_reeb(geom, "EQ31")
    f = geom.fm
    nabla_f = geom.nabla_f
    vector = (
        np.einsum("xkm,my->xyk", nabla_f, f)
        + np.einsum("km,xmy->xyk", f, nabla_f)
        - np.einsum("xy,k->xyk", reeb.nabla_eta, reeb.xi)
        - np.einsum("y,xk->xyk", reeb.eta, reeb.nabla_xi)
    )
    return np.einsum("xyk,kz->xyz", vector, geom.g.components)


def _reeb_slots(N: Array, xi: Array) -> tuple[Array, Array]:
    """N(X, ξ, Z) as [x, z] and N(X, Y, ξ) as [x, y]."""
    return np.einsum("xkz,k->xz", N, xi), np.einsum("xyk,k->xy", N, xi)


def twisted_pair_residual(geom: PointGeometry) -> Array:
    """N(X,fY,fZ) + N(X,Y,Z) - η(Y)N(X,ξ,Z) - η(Z)N(X,Y,ξ)."""
    reeb = require_reeb(geom, "EQ32B")
    N = geom.nablaF.components
    f = geom.fm
    xi_second, xi_third = _reeb_slots(N, reeb.xi)
    return (
        transform_slots(N, second=f, third=f)
        + N
        - np.einsum("y,xz->xyz", reeb.eta, xi_second)
        - np.einsum("z,xy->xyz", reeb.eta, xi_third)
    )


def mixed_pair_residual(geom: PointGeometry) -> Array:
    """N(X,fY,Z) - N(X,Y,fZ) - η(Z)N(X,fY,ξ) + η(Y)N(X,ξ,fZ)."""
    reeb = require_reeb(geom, "EQ32C")
    N = geom.nablaF.components
    f = geom.fm
    N_fy = transform_slots(N, second=f)
    N_fz = transform_slots(N, third=f)
    _, fy_xi = _reeb_slots(N_fy, reeb.xi)
    xi_fz, _ = _reeb_slots(N_fz, reeb.xi)
    return (
        N_fy
        - N_fz
        - np.einsum("z,xy->xyz", reeb.eta, fy_xi)
        + np.einsum("y,xz->xyz", reeb.eta, xi_fz)
    )


def reeb_expansion_residual(geom: PointGeometry) -> Array:
    """
    N(X,fY,fZ) + g(Y,(∇_X f)Z) - η(Y)η((∇_X f)Z) - η(Z)g(fY,∇_X ξ).
    """
    reeb = require_reeb(geom, "EQ3_5")
    N = geom.nablaF.components
    f = geom.fm
    g = geom.g.components
    nabla_f = geom.nabla_f
    metric_term = np.einsum("yk,xkz->xyz", g, nabla_f)
    eta_term = np.einsum("y,k,xkz->xyz", reeb.eta, reeb.eta, nabla_f)
    # g(fY, V) = V^k F_ky
    xi_term = np.einsum("z,xk,ky->xyz", reeb.eta, reeb.nabla_xi, geom.F.components)
    return transform_slots(N, second=f, third=f) + metric_term - eta_term - xi_term


def reeb_slot_torsion(T: Array, geom: PointGeometry) -> float:
    """Largest torsion component with ξ in the first or last slot."""
    reeb = require_reeb(geom, "ACM_XI_TORSION")
    first = np.einsum("k,kbc->bc", reeb.xi, T)
    last = np.einsum("abk,k->ab", T, reeb.xi)
    return float(max(np.max(np.abs(first)), np.max(np.abs(last))))


def reeb_slot_nabla_F(geom: PointGeometry) -> float:
    """Largest (∇^g F)(ξ,·,·) or (∇^g F)(·,·,ξ) component."""
    reeb = require_reeb(geom, "ACM_XI_NABLA_F")
    N = geom.nablaF.components
    first = np.einsum("k,kbc->bc", reeb.xi, N)
    last = np.einsum("abk,k->ab", N, reeb.xi)
    return float(max(np.max(np.abs(first)), np.max(np.abs(last))))
