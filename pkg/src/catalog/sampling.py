"""
Seeded rejection sampling of chart points
"""

import numpy as np

from src.config import config
from src.exceptions import InvalidParamsError, SamplingExhaustedError
from src.geometry import ChartPoint, StructureFields
from src.logging_config import get_module_logger

from .registry import ManifoldInstance

logger = get_module_logger("catalog.sampling")


def rejection_reason(fields: StructureFields, x: np.ndarray) -> str | None:
    """Why a chart point is unusable, or None if it is admissible."""
    g = fields.g_at(x)
    F = fields.F_at(x)
    if not (np.all(np.isfinite(g)) and np.all(np.isfinite(F))):
        return "non-finite fields"

    det = float(np.linalg.det(g))
    if abs(det) < config.get_float("numerics.sampling.min_abs_det", 1e-4):
        return f"|det g| = {abs(det):.2e}"

    f = np.linalg.solve(g, F)
    magnitudes = np.abs(np.linalg.eigvals(f @ f))
    kernel_eps = config.get_float("numerics.thresholds.kernel_eps", 1e-10)
    rank_gap = config.get_float("numerics.sampling.rank_gap", 1e-6)
    ambiguous = magnitudes[(magnitudes >= kernel_eps) & (magnitudes < rank_gap)]
    if ambiguous.size:
        return f"f^2 nearly rank-deficient (eigenvalue {ambiguous.min():.2e})"
    return None


def sample_points(
    target: ManifoldInstance | StructureFields,
    count: int,
    seed: int,
    box: float | None = None,
    name: str | None = None,
) -> list[ChartPoint]:
    """
    Draw `count` admissible points uniformly from [-box, box]^n.

    The first k points for a seed do not depend on `count`.

    Args:
        target: Catalog instance, or bare fields
        count: Number of points (>= 1)
        seed: Seed for numpy's default generator
        box: Half-width of the box (instance box, else catalog.sampling.box)
        name: Manifold name for diagnostics when passing bare fields

    Raises:
        InvalidParamsError: If count < 1
        SamplingExhaustedError: After count * max_oversampling draws
    """
    if isinstance(target, ManifoldInstance):
        fields = target.fields
        name = name or target.name
        box = box if box is not None else target.spec.box
    else:
        fields = target
    name = name or "fields"
    if count < 1:
        raise InvalidParamsError(f"count must be >= 1, got {count}", name)
    if box is None:
        box = config.get_float("catalog.sampling.box", 1.0)

    max_draws = count * int(config.get("numerics.sampling.max_oversampling", 10))
    rng = np.random.default_rng(seed)
    accepted: list[ChartPoint] = []
    draws = 0
    while len(accepted) < count and draws < max_draws:
        x = rng.uniform(-box, box, size=fields.dim)
        draws += 1
        reason = rejection_reason(fields, x)
        if reason is not None:
            logger.debug(f"{name}: rejected draw {draws} ({reason})")
            continue
        accepted.append(ChartPoint.of(x))

    if len(accepted) < count:
        raise SamplingExhaustedError(name, len(accepted), count, draws)
    if draws > count:
        logger.debug(f"{name}: {draws - count} of {draws} draws rejected")
    return accepted
