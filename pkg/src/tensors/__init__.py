"""Pointwise tensor algebra: component containers, contractions and dense solves."""

from .algebra import contract_vectors, lower_endo, raise_endo, sup_norm, transform_slots
from .expressions import Argument, Expression, Term
from .linalg import DenseSolution, SpectralSplit, solve_dense, spectral_split
from .types import Array, Endo, Symmetry2, Symmetry3, Tensor2, Tensor3, antisymmetrize

__all__ = [
    "Argument",
    "Array",
    "DenseSolution",
    "Endo",
    "Expression",
    "SpectralSplit",
    "Symmetry2",
    "Symmetry3",
    "Tensor2",
    "Tensor3",
    "Term",
    "antisymmetrize",
    "contract_vectors",
    "lower_endo",
    "raise_endo",
    "solve_dense",
    "spectral_split",
    "sup_norm",
    "transform_slots",
]
