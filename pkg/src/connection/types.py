"""
Torsion, contorsion and assembled connections at a point
"""

from dataclasses import dataclass
from enum import Enum

from src.tensors import Array, Tensor3


class TorsionSource(str, Enum):
    HERMITIAN = "hermitian"
    WEAK = "weak"
    WEIGHTED_FACTOR = "weighted_factor"
    SPECIAL = "special"
    ACM = "acm"
    FROM_DF = "from_dF"
    ORACLE = "oracle"


@dataclass(frozen=True)
class TorsionAtPoint:
    """T[a, b, c] = g(T(e_a, e_b), e_c); skew in the first two slots."""

    T: Tensor3
    source: TorsionSource
    # Pre-antisymmetrization asymmetry, reported by formulas that solve for T
    asymmetry: float = 0.0

    @property
    def components(self) -> Array:
        return self.T.components


@dataclass(frozen=True)
class ContorsionAtPoint:
    """K[a, b, c] = g(K_{e_a} e_b, e_c) where ∇ = ∇^g + K."""

    K: Array


@dataclass(frozen=True)
class ConnectionAtPoint:
    """Coefficients gamma_total[k, i, j] of ∇_{e_i} e_j = Γ^k_ij e_k."""

    gamma_total: Array
    K: ContorsionAtPoint
