"""Named example structures and seeded point sampling."""

from . import instances  # noqa: F401  (registers the builders)
from .instances import complex_structure, rotated_complex_structure
from .registry import (
    ManifoldInstance,
    ManifoldSpec,
    ParamSpec,
    get_spec,
    instantiate,
    list_manifolds,
    parse_manifold_arg,
    resolve,
)
from .sampling import rejection_reason, sample_points

__all__ = [
    "ManifoldInstance",
    "ManifoldSpec",
    "ParamSpec",
    "complex_structure",
    "get_spec",
    "instantiate",
    "list_manifolds",
    "parse_manifold_arg",
    "rejection_reason",
    "resolve",
    "rotated_complex_structure",
    "sample_points",
]
