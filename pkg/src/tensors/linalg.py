"""
Dense least squares and the spectral splitting of f²
"""

from dataclasses import dataclass

import numpy as np

from src.config import config
from src.exceptions import NotSelfAdjointError
from src.logging_config import get_module_logger

from .types import Array, Tensor2, _require_finite

logger = get_module_logger("tensors.linalg")


@dataclass(frozen=True)
class DenseSolution:
    """Minimum-norm least-squares solution of A x = b."""

    x: Array
    residual: float
    singular_values: Array
    rank: int
    unique: bool

    @property
    def condition_number(self) -> float:
        s = self.singular_values
        if s.size == 0 or s[-1] == 0.0:
            return float("inf")
        return float(s[0] / s[-1])


def solve_dense(A: Array, b: Array, rcond: float | None = None) -> DenseSolution:
    """
    Solve A x = b in the least-squares sense through the SVD.

    Singular values below rcond * s_max are treated as zero; the returned x is
    the minimum-norm minimiser.

    Args:
        A: Matrix of shape (m, n)
        b: Right-hand side of shape (m,)
        rcond: Relative singular value cutoff (defaults to numerics.thresholds.sv_relative)

    Returns:
        DenseSolution with the sup-norm residual |A x - b|

    Raises:
        NonFiniteError: If A or b contains NaN or infinity
    """
    _require_finite(A, "system matrix")
    _require_finite(b, "right-hand side")
    if rcond is None:
        rcond = config.get_float("numerics.thresholds.sv_relative", 1e-10)

    U, s, Vh = np.linalg.svd(A, full_matrices=False)
    if s.size == 0:
        x = np.zeros(A.shape[1])
        return DenseSolution(x=x, residual=float(np.max(np.abs(b), initial=0.0)),
                             singular_values=s, rank=0, unique=A.shape[1] == 0)

    cutoff = rcond * s[0]
    keep = s > cutoff
    s_inv = np.zeros_like(s)
    s_inv[keep] = 1.0 / s[keep]

    x = Vh.T @ (s_inv * (U.T @ b))
    residual = float(np.max(np.abs(A @ x - b), initial=0.0))
    rank = int(np.count_nonzero(keep))
    # Unique only when A has full column rank
    unique = rank == A.shape[1]

    return DenseSolution(x=x, residual=residual, singular_values=s, rank=rank, unique=unique)


@dataclass(frozen=True)
class SpectralSplit:
    """
    Decomposition T_pM = ker(f²) ⊕ complement.

    Columns of `kernel_basis` and `complement_basis` are g-orthogonal, and the
    two subspaces are g-orthogonal to each other.
    """

    kernel_basis: Array
    complement_basis: Array
    eigenvalues: Array

    @property
    def kernel_dim(self) -> int:
        return int(self.kernel_basis.shape[1])

    @property
    def change_of_basis(self) -> Array:
        """Columns: complement basis first, then kernel basis."""
        return np.hstack([self.complement_basis, self.kernel_basis])


def _real_span(vectors: Array, rank: int) -> Array:
    """Orthonormal (Euclidean) real basis of the span of possibly complex vectors."""
    if rank == 0:
        return np.zeros((vectors.shape[0], 0))
    stacked = np.hstack([vectors.real, vectors.imag])
    U, _, _ = np.linalg.svd(stacked, full_matrices=False)
    return U[:, :rank]


def _g_orthogonalize(basis: Array, g: Array) -> Array:
    """Rotate the columns of basis to be g-orthogonal with unit |g|-norm."""
    if basis.shape[1] == 0:
        return basis
    gram = basis.T @ g @ basis
    w, v = np.linalg.eigh(0.5 * (gram + gram.T))
    scale = 1.0 / np.sqrt(np.abs(w))
    return basis @ v * scale


def spectral_split(
    f2: Array,
    g: Tensor2,
    eps: float | None = None,
    self_adjoint_tol: float | None = None,
) -> SpectralSplit:
    """
    Split the tangent space into ker f² and its f²-invariant complement.

    Args:
        f2: Components of f² (an endomorphism)
        g: Metric
        eps: Eigenvalues with |mu| < eps are treated as zero
        self_adjoint_tol: Tolerance on g f² - (g f²)^T

    Raises:
        NotSelfAdjointError: If f² is not g-self-adjoint
    """
    if eps is None:
        eps = config.get_float("numerics.thresholds.kernel_eps", 1e-10)
    if self_adjoint_tol is None:
        self_adjoint_tol = config.get_float("numerics.thresholds.self_adjoint", 1e-10)

    gm = g.components
    lowered = gm @ f2
    residual = float(np.max(np.abs(lowered - lowered.T)))
    if residual > self_adjoint_tol:
        raise NotSelfAdjointError(residual, self_adjoint_tol)

    eigenvalues, eigenvectors = np.linalg.eig(f2)
    in_kernel = np.abs(eigenvalues) < eps
    k = int(np.count_nonzero(in_kernel))
    n = f2.shape[0]

    kernel = _real_span(eigenvectors[:, in_kernel], k)
    complement = _real_span(eigenvectors[:, ~in_kernel], n - k)

    logger.debug(f"spectral split: dim ker f^2 = {k} of {n}")

    return SpectralSplit(
        kernel_basis=_g_orthogonalize(kernel, gm),
        complement_basis=_g_orthogonalize(complement, gm),
        eigenvalues=np.sort(eigenvalues.real),
    )
