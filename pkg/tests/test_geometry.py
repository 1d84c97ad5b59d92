"""
Tests for the pointwise geometry: Christoffel symbols, ∇^g F, dF, the operator
algebra and finite-difference validation
"""

from dataclasses import replace

import numpy as np
import pytest

from src.catalog import instantiate
from src.exceptions import (
    DegenerateMetricError,
    NonFiniteError,
    SingularPError,
)
from src.geometry import (
    ChartPoint,
    dF_cyclic,
    factor_geometry,
    fd_validate,
    nabla_g_residual,
    nablaF_via_f,
    point_geometry,
    point_geometry_from_jet,
)
from src.results import CheckStatus
from src.tensors import sup_norm


class TestJetAssembly:
    """Test point_geometry_from_jet input handling"""

    def test_degenerate_metric_raises(self):
        """A numerically singular metric is rejected"""
        with pytest.raises(DegenerateMetricError):
            point_geometry_from_jet(
                np.diag([1.0, 1e-20]),
                np.zeros((2, 2, 2)),
                np.zeros((2, 2)),
                np.zeros((2, 2, 2)),
            )

    def test_non_finite_partials_raise(self):
        """NaN in a partial derivative is reported by name"""
        dFp = np.zeros((2, 2, 2))
        dFp[0, 0, 1] = np.nan
        with pytest.raises(NonFiniteError) as exc_info:
            point_geometry_from_jet(np.eye(2), np.zeros((2, 2, 2)), np.zeros((2, 2)), dFp)
        assert "dF partials" in str(exc_info.value)

    def test_kaehler_point_has_parallel_F(self, kaehler_geometry):
        """Constant g and F give ∇^g F = 0 and dF = 0"""
        assert sup_norm(kaehler_geometry.nablaF.components) == 0.0
        assert sup_norm(kaehler_geometry.dF.components) == 0.0
        assert kaehler_geometry.almost_hermitian_residual() < 1e-15

    def test_operator_algebra(self, hermitian_geometry):
        """f² = -I gives Q = 0, P = 2I, P⁻¹ = I/2"""
        ops = hermitian_geometry.operators
        n = hermitian_geometry.dim
        assert sup_norm(ops["Q"]) < 1e-14
        assert sup_norm(hermitian_geometry.P - 2.0 * np.eye(n)) < 1e-14
        assert sup_norm(hermitian_geometry.Pinv - 0.5 * np.eye(n)) < 1e-14
        assert sup_norm(ops["f4"] - np.eye(n)) < 1e-14


class TestChristoffel:
    """Test Levi-Civita connection coefficients"""

    def test_polar_coordinates(self):
        """Γ^r_θθ = -r and Γ^θ_rθ = 1/r on the plane in polar coordinates"""
        fields = instantiate("polar_plane")
        geom = point_geometry(fields, ChartPoint.of([2.0, 0.3]))
        assert geom.gamma[0, 1, 1] == pytest.approx(-2.0)
        assert geom.gamma[1, 0, 1] == pytest.approx(0.5)
        assert geom.gamma[1, 1, 0] == pytest.approx(0.5)
        assert geom.gamma[0, 0, 0] == 0.0

    def test_polar_plane_is_kaehler(self):
        """r dr∧dθ is parallel for the flat metric"""
        fields = instantiate("polar_plane")
        geom = point_geometry(fields, ChartPoint.of([-0.7, 1.1]))
        assert sup_norm(geom.nablaF.components) < 1e-12

    @pytest.mark.parametrize("name", ["conformal_kaehler", "contact_R5", "polar_plane"])
    def test_levi_civita_is_metric(self, sampled_geometry, name):
        """∇^g g vanishes up to rounding"""
        geom = sampled_geometry(name, index=2)
        scale = max(1.0, sup_norm(geom.dg), sup_norm(geom.g.components))
        assert nabla_g_residual(geom) / scale < 1e-12


class TestRoutes:
    """Independent routes to dF and ∇^g F must agree"""

    @pytest.mark.parametrize(
        "name", ["hermitian_rotated_J", "conformal_kaehler", "contact_R5", "weak_conformal_f"]
    )
    def test_dF_routes(self, sampled_geometry, name):
        geom = sampled_geometry(name, index=1)
        assert sup_norm(geom.dF.components - dF_cyclic(geom)) < 1e-9

    @pytest.mark.parametrize(
        "name", ["hermitian_rotated_J", "conformal_kaehler", "contact_R5", "f_with_kernel"]
    )
    def test_nabla_F_routes(self, sampled_geometry, name):
        geom = sampled_geometry(name, index=1)
        assert sup_norm(geom.nablaF.components - nablaF_via_f(geom)) < 1e-9

    def test_hermitian_point_is_not_kaehler(self, hermitian_geometry):
        """The rotated complex structure has ∇^g F != 0"""
        assert sup_norm(hermitian_geometry.nablaF.components) > 1e-3


class TestOperators:
    """Test P, Q and the kernel splitting on non-Hermitian structures"""

    def test_singular_P_on_lorentz_boost(self, sampled_geometry):
        """F01 = 1 on Minkowski space gives f² = I on the (t, x) plane"""
        geom = sampled_geometry("lorentz_flat", {"f01": 1.0, "f23": 0.8})
        assert "Pi" not in geom.operators
        with pytest.raises(SingularPError):
            _ = geom.Pinv

    def test_kernel_split_of_f_with_kernel(self, sampled_geometry):
        """ker f² is the last two coordinates"""
        geom = sampled_geometry("f_with_kernel")
        split = geom.require_split()
        assert split.kernel_dim == 2
        projector = geom.kernel_projector
        assert sup_norm(projector @ projector - projector) < 1e-12
        assert np.allclose(np.diag(projector), [0, 0, 0, 0, 1, 1], atol=1e-12)

    def test_f6_complement_inverse(self, sampled_geometry):
        """The cached inverse undoes f⁶ on the complement"""
        geom = sampled_geometry("f_with_kernel", index=1)
        inverse = geom.f6_complement_inverse
        complement = np.eye(6) - geom.kernel_projector
        assert sup_norm(inverse @ geom.operators["f6"] - complement) < 1e-10

    def test_split_operators_are_computed_once(self, sampled_geometry):
        geom = sampled_geometry("f_with_kernel", index=2)
        assert geom.f6_complement_inverse is geom.f6_complement_inverse
        assert geom.kernel_projector is geom.kernel_projector

    def test_weighted_factor_restriction(self, sampled_geometry):
        """A factor block of the weighted product has f² = -λ I"""
        geom = sampled_geometry("weighted_product", {"lambdas": (2.0, 3.0)})
        first = factor_geometry(geom, (0, 1, 2, 3))
        second = factor_geometry(geom, (4, 5, 6, 7))
        assert sup_norm(first.operators["f2"] + 2.0 * np.eye(4)) < 1e-12
        assert sup_norm(second.operators["f2"] + 3.0 * np.eye(4)) < 1e-12
        assert first.dim == 4


class TestReeb:
    """Test Reeb data at a point"""

    def test_product_reeb_field_is_parallel(self, sampled_geometry):
        geom = sampled_geometry("acm_product")
        assert geom.reeb is not None
        assert sup_norm(geom.reeb.nabla_xi) == 0.0
        h = geom.reeb.horizontal_projector
        assert sup_norm(h @ geom.reeb.xi) < 1e-15

    def test_contact_reeb_field_is_not_parallel(self, sampled_geometry):
        geom = sampled_geometry("contact_R5")
        assert geom.reeb is not None
        assert sup_norm(geom.reeb.nabla_xi) > 1e-3


class TestFiniteDifferences:
    """Test fd_validate"""

    def test_detects_wrong_partials(self):
        """Dropping the x0-partial of the rotated structure is caught"""
        fields = instantiate("hermitian_rotated_J")
        broken = replace(fields, dFp_at=lambda x: np.zeros((4, 4, 4)))
        result = fd_validate(broken, ChartPoint.of([0.3, 0.1, -0.2, 0.5]))
        assert result.status is CheckStatus.FAIL

    def test_accepts_closed_form_partials(self):
        fields = instantiate("conformal_kaehler")
        result = fd_validate(fields, ChartPoint.of([0.3, 0.1, -0.2, 0.5]))
        assert result.status is CheckStatus.PASS
