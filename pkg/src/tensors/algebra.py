"""
Index raising/lowering and slot contractions
"""

import numpy as np

from .types import Array, Endo, Symmetry2, Tensor2


def lower_endo(f: Endo, g: Tensor2) -> Tensor2:
    """
    F(X, Y) = g(X, fY), i.e. F_ij = g_ik f^k_j.

    Args:
        f: Endomorphism
        g: Metric

    Returns:
        The (0,2) tensor F (no symmetry is imposed; callers validate skewness)
    """
    return Tensor2(g.components @ f.components)


def raise_endo(F: Tensor2, g: Tensor2, ginv: Array | None = None) -> Endo:
    """
    Inverse of lower_endo: f^k_j = g^{kl} F_lj.

    Args:
        F: (0,2) tensor
        g: Metric
        ginv: Precomputed inverse of g (optional)
    """
    if ginv is None:
        ginv = np.linalg.inv(g.components)
    return Endo(ginv @ F.components)


def skew_part(F: Tensor2) -> Tensor2:
    return Tensor2(0.5 * (F.components - F.components.T), Symmetry2.SKEW)


def transform_slots(
    tensor: Array,
    first: Array | None = None,
    second: Array | None = None,
    third: Array | None = None,
) -> Array:
    """
    Evaluate a (0,3) array on transformed basis vectors.

    out[a, b, c] = T(A e_a, B e_b, C e_c), where A, B, C are the given
    endomorphisms (identity when None).
    """
    out = tensor
    if first is not None:
        out = np.einsum("ka,kbc->abc", first, out)
    if second is not None:
        out = np.einsum("kb,akc->abc", second, out)
    if third is not None:
        out = np.einsum("kc,abk->abc", third, out)
    return out


def contract_vectors(tensor: Array, x: Array, y: Array, z: Array) -> float:
    """T(x, y, z) for component vectors x, y, z."""
    return float(np.einsum("abc,a,b,c->", tensor, x, y, z))


def sup_norm(array: Array) -> float:
    """Largest absolute component (0.0 for an empty array)."""
    return float(np.max(np.abs(array))) if np.size(array) else 0.0
