"""
Pytest configuration and fixtures for the torsion-lab tests
"""

import itertools
import os

import numpy as np
import pytest

from src.catalog import complex_structure, resolve, sample_points
from src.geometry import PointGeometry, point_geometry, point_geometry_from_jet


def _permutation_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def nearly_kaehler_three_form() -> np.ndarray:
    """
    Re(dz1 ∧ dz2 ∧ dz3) on R⁶ with z_k = x_{2k} + i x_{2k+1}.

    Totally skew and of type (3,0)+(0,3) for the standard complex structure,
    i.e. ψ(JX,JY,Z) = -ψ(X,Y,Z).
    """
    psi = np.zeros((6, 6, 6))
    terms = {(0, 2, 4): 1.0, (0, 3, 5): -1.0, (1, 2, 5): -1.0, (1, 3, 4): -1.0}
    for base, value in terms.items():
        for perm in itertools.permutations(range(3)):
            index = tuple(base[p] for p in perm)
            psi[index] = value * _permutation_sign(perm)
    return psi


@pytest.fixture
def test_config():
    """Minimal configuration dictionary"""
    return {
        "numerics": {
            "thresholds": {"almost_hermitian": 1e-10, "singular_p": 1e-12},
            "tolerances": {"identity": 1e-8, "hypothesis": "1e-10"},
        },
        "run": {"defaults": {"points": 3, "seed": 7}},
    }


@pytest.fixture
def rng():
    """Seeded generator for random tensors"""
    return np.random.default_rng(20240601)


@pytest.fixture
def sampled_geometry():
    """
    Factory: point geometry at the index-th sampled point of a catalog manifold.

    Usage:
        def test_something(sampled_geometry):
            geom = sampled_geometry("hermitian_rotated_J", index=2)
    """

    def build(
        name: str, params: dict | None = None, index: int = 0, seed: int = 1
    ) -> PointGeometry:
        instance = resolve(name, params)
        points = sample_points(instance, index + 1, seed)
        return point_geometry(instance.fields, points[index])

    return build


@pytest.fixture
def kaehler_geometry(sampled_geometry):
    return sampled_geometry("kaehler_flat")


@pytest.fixture
def hermitian_geometry(sampled_geometry):
    """Non-Kähler almost Hermitian point (rotated complex structure)"""
    return sampled_geometry("hermitian_rotated_J", index=1)


@pytest.fixture
def nearly_kaehler_psi():
    return nearly_kaehler_three_form()


@pytest.fixture
def nearly_kaehler_geometry(nearly_kaehler_psi):
    """
    Planted 1-jet on R⁶: g = I, F = J, ∂F = ψ.

    ∇^g F = ψ is totally skew, so the point is nearly Kähler; its Einstein
    connection has T = -dF/3 = -ψ and K = T/2.
    """
    return point_geometry_from_jet(
        np.eye(6),
        np.zeros((6, 6, 6)),
        complex_structure(6),
        nearly_kaehler_psi,
        coords=(0.0,) * 6,
    )


@pytest.fixture
def cli_test_env(tmp_path, monkeypatch):
    """
    Environment for CLI tests.

    Sets TORSION_LAB_LOG_DIR to a temporary directory to keep run.log out of
    the project's data directory, and runs single-threaded.

    Usage:
        def test_something(cli_test_env):
            result = subprocess.run(
                [sys.executable, "main.py", ...],
                env=cli_test_env,
                ...
            )
    """
    monkeypatch.setenv("TORSION_LAB_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("TORSION_LAB_THREADS", "1")
    env = os.environ.copy()
    return env
