"""
Tests for the identity registry, the δ terms and the proof chains
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.connection import (
    ContorsionAtPoint,
    TorsionAtPoint,
    TorsionSource,
    assemble_connection,
)
from src.exceptions import HypothesisNotMetError, MissingInputError, TorsionLabError
from src.identities import (
    CHAIN_IDS,
    IDENTITIES,
    Delta5Form,
    IdentityId,
    IdentityKind,
    delta_expression,
    delta_tensor,
    eval_chain,
    eval_delta,
    eval_identity,
    identity_table,
)
from src.oracle import solve_einstein_pointwise
from src.results import CONDITION_INACTIVE, CheckStatus
from src.tensors import Symmetry3, Tensor3, sup_norm

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)
fixture_settings = settings(
    max_examples=20, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)

CONTACT_IDS = {IdentityId.EQ31, IdentityId.EQ32B, IdentityId.EQ32C, IdentityId.EQ3_5}


def _oracle_inputs(geom):
    oracle = solve_einstein_pointwise(geom)
    return {"T": oracle.T, "K": oracle.K, "conn": oracle.connection(geom)}


def _torsion(components: np.ndarray) -> TorsionAtPoint:
    skew = 0.5 * (components - np.einsum("bac->abc", components))
    return TorsionAtPoint(Tensor3(skew, Symmetry3.SKEW12), TorsionSource.ORACLE)


@pytest.fixture
def visited_points(sampled_geometry, kaehler_geometry, hermitian_geometry, nearly_kaehler_geometry):
    """Geometries with their oracle connections, one per kind of structure"""
    return {
        "kaehler": (kaehler_geometry, _oracle_inputs(kaehler_geometry)),
        "hermitian": (hermitian_geometry, _oracle_inputs(hermitian_geometry)),
        "nearly_kaehler": (nearly_kaehler_geometry, _oracle_inputs(nearly_kaehler_geometry)),
        "acm_product": (sampled_geometry("acm_product"), {}),
    }


class TestRegistry:
    """Test the registry itself"""

    def test_every_id_is_registered(self):
        assert set(IDENTITIES) == set(IdentityId)

    def test_table_rows(self):
        rows = identity_table()
        assert len(rows) == len(IdentityId)
        assert rows[0][0] == IdentityId.EIN2.value
        assert {kind for _, kind, _ in rows} == {k.value for k in IdentityKind}

    def test_every_id_passes_somewhere(self, visited_points):
        """Each registered identity is exercised and holds on at least one structure"""
        exercised = set()
        for geom, inputs in visited_points.values():
            for identity in IdentityId:
                try:
                    result = eval_identity(identity, geom, **inputs)
                except TorsionLabError:
                    continue
                if result.status is CheckStatus.PASS:
                    exercised.add(identity)
        assert exercised == set(IdentityId)

    @pytest.mark.parametrize("point", ["kaehler", "hermitian", "nearly_kaehler"])
    def test_nothing_fails_on_almost_hermitian_points(self, visited_points, point):
        """Identities and conditions never fail on the oracle connection"""
        geom, inputs = visited_points[point]
        failures = []
        for identity in IdentityId:
            if identity in CONTACT_IDS:
                continue
            result = eval_identity(identity, geom, **inputs)
            if result.status is CheckStatus.FAIL:
                failures.append((identity.value, result.residual))
        assert failures == []

    def test_nearly_kaehler_activates_conditions(self, visited_points):
        """Skew torsion, s1, Codazzi and the commutator condition all hold"""
        geom, inputs = visited_points["nearly_kaehler"]
        for identity in (
            IdentityId.E_COND_E2,
            IdentityId.COND_S1,
            IdentityId.CODAZZI,
            IdentityId.E_COND_KKZ,
            IdentityId.E_COND_2K_SPECIAL,
        ):
            assert eval_identity(identity, geom, **inputs).status is CheckStatus.PASS


class TestEvaluation:
    """Test eval_identity input handling"""

    def test_missing_torsion(self, hermitian_geometry):
        with pytest.raises(MissingInputError):
            eval_identity(IdentityId.EIN8, hermitian_geometry)

    def test_missing_reeb_data(self, hermitian_geometry):
        with pytest.raises(MissingInputError):
            eval_identity(IdentityId.EQ31, hermitian_geometry)

    def test_accepts_string_ids(self, kaehler_geometry):
        K = ContorsionAtPoint(np.zeros((4, 4, 4)))
        result = eval_identity("STAT_DEGENERATE", kaehler_geometry, K=K)
        assert result.status is CheckStatus.PASS

    def test_unknown_id(self, kaehler_geometry):
        with pytest.raises(ValueError):
            eval_identity("EIN99", kaehler_geometry)

    def test_hypothesis_gate_skips(self, sampled_geometry):
        """Hermitian-only identities are skipped on a weak structure"""
        geom = sampled_geometry("weak_conformal_f", index=1)
        result = eval_identity(IdentityId.COMPACT_J_FORM, geom, T=_torsion(np.zeros((4, 4, 4))))
        assert result.status is CheckStatus.SKIPPED
        assert "f^2 = -I" in result.skip_reason

    def test_strict_hypothesis_raises(self, sampled_geometry):
        geom = sampled_geometry("weak_conformal_f", index=1)
        with pytest.raises(HypothesisNotMetError):
            eval_identity(
                IdentityId.COMPACT_J_FORM, geom, T=_torsion(np.zeros((4, 4, 4))), strict=True
            )

    def test_inactive_condition_is_skipped(self, hermitian_geometry):
        """A random torsion is not totally skew"""
        rng = np.random.default_rng(3)
        T = _torsion(rng.normal(size=(4, 4, 4)))
        result = eval_identity(IdentityId.E_COND_E2, hermitian_geometry, T=T)
        assert result.status is CheckStatus.SKIPPED
        assert result.skip_reason == CONDITION_INACTIVE
        assert result.residual is not None

    def test_levi_civita_connection(self, hermitian_geometry):
        """K = 0 satisfies the connection identities that do not involve F"""
        K = ContorsionAtPoint(np.zeros((4, 4, 4)))
        conn = assemble_connection(hermitian_geometry, K)
        T = _torsion(np.zeros((4, 4, 4)))
        for identity in (IdentityId.EIN2, IdentityId.STAT_DEGENERATE, IdentityId.TK_ROUNDTRIP):
            result = eval_identity(identity, hermitian_geometry, T=T, K=K, conn=conn)
            assert result.status is CheckStatus.PASS

    def test_symmetric_contorsion_has_no_torsion(self, rng, kaehler_geometry):
        """A symmetric difference tensor never produces torsion"""
        raw = rng.normal(size=(4, 4, 4))
        K = ContorsionAtPoint(raw + np.einsum("bac->abc", raw))
        result = eval_identity(IdentityId.STAT_DEGENERATE, kaehler_geometry, K=K)
        assert result.residual < 1e-14


class TestNablaGEquivalence:
    """Test the implications between skew K, ∇g = 0 and skew ∇F"""

    def _evaluate(self, geom, raw):
        K = ContorsionAtPoint(raw)
        conn = assemble_connection(geom, K)
        return eval_identity(IdentityId.LEM_NABLA_G, geom, K=K, conn=conn)

    def test_metric_connection_that_moves_F_fails(self, rng, kaehler_geometry):
        """A skew K gives ∇g = 0, but without the Einstein equation ∇F is not skew"""
        raw = rng.normal(size=(4, 4, 4))
        result = self._evaluate(kaehler_geometry, raw - np.einsum("xyz->xzy", raw))
        assert result.status is CheckStatus.FAIL
        assert result.residual > 1e-3

    def test_nothing_vanishes_holds_vacuously(self, rng, kaehler_geometry):
        result = self._evaluate(kaehler_geometry, rng.normal(size=(4, 4, 4)))
        assert result.status is CheckStatus.PASS
        assert result.residual == 0.0

    def test_levi_civita_on_kaehler_point(self, kaehler_geometry):
        """K = 0 and ∇F = 0: all three statements hold"""
        result = self._evaluate(kaehler_geometry, np.zeros((4, 4, 4)))
        assert result.status is CheckStatus.PASS
        assert result.residual < 1e-12

    def test_oracle_connection_on_hermitian_point(self, hermitian_geometry):
        inputs = _oracle_inputs(hermitian_geometry)
        result = eval_identity(IdentityId.LEM_NABLA_G, hermitian_geometry, **inputs)
        assert result.status is CheckStatus.PASS


class TestContactIdentities:
    """Test the almost contact metric identities"""

    @pytest.mark.parametrize("identity", sorted(CONTACT_IDS, key=lambda i: i.value))
    def test_product_structure(self, sampled_geometry, identity):
        geom = sampled_geometry("acm_product", index=1)
        assert eval_identity(identity, geom).status is CheckStatus.PASS

    def test_derivative_of_f_squared_on_contact_structure(self, sampled_geometry):
        """Differentiating f² = -I + η⊗ξ holds without a parallel Reeb field"""
        geom = sampled_geometry("contact_R5", index=1)
        assert eval_identity(IdentityId.EQ31, geom).status is CheckStatus.PASS


class TestDeltas:
    """Test the δ₁..δ₅ correction terms"""

    def test_index_range(self):
        for bad in (0, 6):
            with pytest.raises(ValueError):
                delta_expression(bad)

    @fixture_settings
    @given(raw=arrays(np.float64, (4, 4, 4), elements=finite))
    def test_vanish_when_f_squared_is_minus_identity(self, raw, hermitian_geometry):
        """Every δ term carries a factor Q = -f² - I"""
        for i in range(1, 5):
            assert sup_norm(delta_tensor(i, raw, hermitian_geometry)) < 1e-10
        for form in Delta5Form:
            assert sup_norm(delta_tensor(5, raw, hermitian_geometry, form)) < 1e-10

    def test_torsion_terms_vanish_with_the_torsion(self, sampled_geometry):
        """δ₁..δ₄ are linear in T"""
        geom = sampled_geometry("weighted_product", {"lambdas": (2.0, 3.0)})
        zero = np.zeros((8, 8, 8))
        for i in range(1, 5):
            assert sup_norm(delta_tensor(i, zero, geom)) == 0.0

    def test_scalar_evaluation(self, rng, sampled_geometry):
        """eval_delta contracts the tensor with the given vectors"""
        geom = sampled_geometry("weighted_product", {"lambdas": (2.0, 3.0)})
        T = rng.normal(size=(8, 8, 8))
        X, Y, Z = rng.normal(size=(3, 8))
        tensor = delta_tensor(2, T, geom)
        expected = float(np.einsum("abc,a,b,c->", tensor, X, Y, Z))
        assert eval_delta(2, T, geom, X, Y, Z) == pytest.approx(expected)


class TestChains:
    """Test the chain relations of the weak torsion computation"""

    def test_chains_hold_on_hermitian_oracle(self, hermitian_geometry):
        oracle = solve_einstein_pointwise(hermitian_geometry)
        for identity in CHAIN_IDS:
            result = eval_chain(identity, hermitian_geometry, oracle.T)
            assert result.status is CheckStatus.PASS, identity

    def test_chain_needs_f2_condition(self, rng, sampled_geometry):
        """A random torsion on a weighted product violates the f²-torsion condition"""
        geom = sampled_geometry("weighted_product", {"lambdas": (2.0, 3.0)})
        T = _torsion(rng.normal(size=(8, 8, 8)))
        result = eval_chain(IdentityId.CHAIN_2_10, geom, T)
        assert result.status is CheckStatus.SKIPPED
        assert "f^2-torsion" in result.skip_reason

    def test_non_chain_id(self, hermitian_geometry):
        with pytest.raises(ValueError):
            eval_chain(IdentityId.EIN8, hermitian_geometry, _torsion(np.zeros((4, 4, 4))))
