"""
Component containers for pointwise tensors in a chart basis.

All arrays are float64 numpy arrays indexed as follows:

- Tensor2[i, j]: a (0,2) tensor evaluated on (e_i, e_j)
- Endo[k, j]: the k-th component of f(e_j)
- Tensor3[a, b, c]: a (0,3) tensor evaluated on (e_a, e_b, e_c)
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from src.config import config
from src.exceptions import NonFiniteError, SymmetryError

Array = npt.NDArray[np.float64]


class Symmetry2(str, Enum):
    NONE = "none"
    SYMMETRIC = "symmetric"
    SKEW = "skew"


class Symmetry3(str, Enum):
    NONE = "none"
    SKEW12 = "skew12"
    SKEW23 = "skew23"
    TOTALLY_SKEW = "totally_skew"


def _symmetry_tol(components: Array) -> float:
    scale = max(1.0, float(np.max(np.abs(components))) if components.size else 1.0)
    return config.get_float("numerics.thresholds.symmetry", 1e-10) * scale


def _require_finite(components: Array, what: str) -> None:
    if not np.all(np.isfinite(components)):
        raise NonFiniteError(what)


def _require_square(components: Array, what: str) -> None:
    if components.ndim != 2 or components.shape[0] != components.shape[1]:
        raise ValueError(f"{what} must be square, got shape {components.shape}")


@dataclass(frozen=True)
class Tensor2:
    """A (0,2) tensor with a declared symmetry."""

    components: Array
    symmetry: Symmetry2 = Symmetry2.NONE

    def __post_init__(self):
        c = np.asarray(self.components, dtype=np.float64)
        _require_square(c, "Tensor2")
        _require_finite(c, "Tensor2")
        if self.symmetry is Symmetry2.SYMMETRIC:
            residual = float(np.max(np.abs(c - c.T)))
            if residual > _symmetry_tol(c):
                raise SymmetryError("symmetric", residual)
            c = 0.5 * (c + c.T)
        elif self.symmetry is Symmetry2.SKEW:
            residual = float(np.max(np.abs(c + c.T)))
            if residual > _symmetry_tol(c):
                raise SymmetryError("skew", residual)
            c = 0.5 * (c - c.T)
        object.__setattr__(self, "components", c)

    @property
    def dim(self) -> int:
        return int(self.components.shape[0])


@dataclass(frozen=True)
class Endo:
    """A (1,1) tensor: components[k, j] is the k-th component of f(e_j)."""

    components: Array

    def __post_init__(self):
        c = np.asarray(self.components, dtype=np.float64)
        _require_square(c, "Endo")
        _require_finite(c, "Endo")
        object.__setattr__(self, "components", c)

    @property
    def dim(self) -> int:
        return int(self.components.shape[0])

    def power(self, k: int) -> Array:
        return np.linalg.matrix_power(self.components, k)


@dataclass(frozen=True)
class Tensor3:
    """A (0,3) tensor with a declared symmetry, enforced on construction."""

    components: Array
    symmetry: Symmetry3 = Symmetry3.NONE

    def __post_init__(self):
        c = np.asarray(self.components, dtype=np.float64)
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise ValueError(f"Tensor3 must be n x n x n, got shape {c.shape}")
        _require_finite(c, "Tensor3")

        if self.symmetry is Symmetry3.SKEW12:
            projected = 0.5 * (c - np.einsum("bac->abc", c))
        elif self.symmetry is Symmetry3.SKEW23:
            projected = 0.5 * (c - np.einsum("acb->abc", c))
        elif self.symmetry is Symmetry3.TOTALLY_SKEW:
            projected = antisymmetrize(c)
        else:
            projected = c

        residual = float(np.max(np.abs(c - projected))) if c.size else 0.0
        if residual > _symmetry_tol(c):
            raise SymmetryError(self.symmetry.value, residual)
        object.__setattr__(self, "components", projected)

    @property
    def dim(self) -> int:
        return int(self.components.shape[0])


def antisymmetrize(c: Array) -> Array:
    """Total antisymmetrization over the last three indices."""
    return (
        np.einsum("...abc->...abc", c)
        + np.einsum("...bca->...abc", c)
        + np.einsum("...cab->...abc", c)
        - np.einsum("...bac->...abc", c)
        - np.einsum("...acb->...abc", c)
        - np.einsum("...cba->...abc", c)
    ) / 6.0
