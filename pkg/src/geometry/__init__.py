"""Structure fields on charts and the pointwise geometry they induce."""

from .fields import ChartPoint, FactorBlock, ReebFields, StructureFields
from .point import (
    PointGeometry,
    ReebAtPoint,
    christoffel,
    covariant_two_form,
    cyclic_sum,
    dF_cyclic,
    factor_geometry,
    nabla_g_residual,
    nablaF_via_f,
    point_geometry,
    point_geometry_from_jet,
)
from .validation import fd_validate

__all__ = [
    "ChartPoint",
    "FactorBlock",
    "PointGeometry",
    "ReebAtPoint",
    "ReebFields",
    "StructureFields",
    "christoffel",
    "covariant_two_form",
    "cyclic_sum",
    "dF_cyclic",
    "factor_geometry",
    "fd_validate",
    "nablaF_via_f",
    "nabla_g_residual",
    "point_geometry",
    "point_geometry_from_jet",
]
