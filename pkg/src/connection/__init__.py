"""Einstein connections: closed-form torsion, contorsion and metricity."""

from .conditions import (
    acm_structure_residual,
    codazzi_residual,
    e2_residual,
    f2_torsion_residual,
    f_torsion_residual,
    s1_residual,
    special_residual,
)
from .contorsion import (
    assemble_connection,
    connection_torsion,
    contorsion_from_torsion,
    contorsion_skew,
    torsion_from_contorsion,
)
from .formulas import (
    torsion_acm,
    torsion_from_dF,
    torsion_hermitian,
    torsion_special,
    torsion_weak,
    torsion_weighted_factor,
    weighted_factor_expression,
)
from .metricity import (
    connection_derivatives,
    metricity_operator,
    metricity_residual,
    metricity_tensor,
)
from .types import ConnectionAtPoint, ContorsionAtPoint, TorsionAtPoint, TorsionSource

__all__ = [
    "ConnectionAtPoint",
    "ContorsionAtPoint",
    "TorsionAtPoint",
    "TorsionSource",
    "acm_structure_residual",
    "assemble_connection",
    "codazzi_residual",
    "connection_derivatives",
    "connection_torsion",
    "contorsion_from_torsion",
    "contorsion_skew",
    "e2_residual",
    "f2_torsion_residual",
    "f_torsion_residual",
    "metricity_operator",
    "metricity_residual",
    "metricity_tensor",
    "s1_residual",
    "special_residual",
    "torsion_acm",
    "torsion_from_contorsion",
    "torsion_from_dF",
    "torsion_hermitian",
    "torsion_special",
    "torsion_weak",
    "torsion_weighted_factor",
    "weighted_factor_expression",
]
