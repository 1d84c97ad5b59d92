"""
Structure fields on a coordinate chart: closed-form g, F, their partials, and
optional Reeb data.
"""

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from src.tensors import Array

FieldFn = Callable[[Array], Array]


@dataclass(frozen=True)
class ChartPoint:
    """A point of the coordinate box."""

    coords: tuple[float, ...]

    @classmethod
    def of(cls, values) -> "ChartPoint":
        return cls(tuple(float(v) for v in np.asarray(values, dtype=np.float64).ravel()))

    @property
    def array(self) -> Array:
        return np.asarray(self.coords, dtype=np.float64)

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class ReebFields:
    """
    Closed-form almost contact data.

    xi_at(x)[k] = ξ^k, dxi_at(x)[l, k] = ∂_l ξ^k,
    eta_at(x)[j] = η_j, deta_at(x)[l, j] = ∂_l η_j.
    """

    xi_at: FieldFn
    dxi_at: FieldFn
    eta_at: FieldFn
    deta_at: FieldFn


@dataclass(frozen=True)
class FactorBlock:
    """One factor of a product chart: its coordinate indices and weight."""

    indices: tuple[int, ...]
    lam: float = 1.0


@dataclass(frozen=True)
class StructureFields:
    """
    Closed-form fields of one catalog instance.

    g_at(x)[i, j] = g_ij,  dg_at(x)[l, i, j] = ∂_l g_ij,
    F_at(x)[i, j] = F_ij,  dFp_at(x)[l, i, j] = ∂_l F_ij.
    """

    dim: int
    g_at: FieldFn
    dg_at: FieldFn
    F_at: FieldFn
    dFp_at: FieldFn
    signature: tuple[int, int]
    reeb: ReebFields | None = None
    factors: tuple[FactorBlock, ...] = field(default_factory=tuple)
