"""
Registry of named identities and conditions, and their evaluator.

Every identity is checked on the full coordinate basis: the residual is the
sup-norm over all index triples of LHS - RHS. Identities that hold only under
a hypothesis are gated; outside the hypothesis they are reported as skipped.
Conditions describe the point rather than a theorem, so a condition that does
not hold is reported as skipped with reason "condition inactive".
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from src.config import config
from src.connection import (
    ConnectionAtPoint,
    ContorsionAtPoint,
    TorsionAtPoint,
    acm_structure_residual,
    codazzi_residual,
    connection_derivatives,
    contorsion_from_torsion,
    e2_residual,
    f2_torsion_residual,
    f_torsion_residual,
    metricity_residual,
    s1_residual,
    special_residual,
    torsion_from_contorsion,
)
from src.exceptions import HypothesisNotMetError, MissingInputError
from src.geometry import PointGeometry
from src.logging_config import get_module_logger
from src.results import CheckResult
from src.tensors import Array, Expression, sup_norm

from . import contact, statements
from .chains import CHAINS
from .deltas import Delta5Form, delta_tensor

logger = get_module_logger("identities")


class IdentityId(str, Enum):
    EIN2 = "EIN2"
    EIN5 = "EIN5"
    EIN6 = "EIN6"
    EIN7 = "EIN7"
    EIN8 = "EIN8"
    PROP27 = "PROP27"
    E1_2_22 = "E1_2_22"
    E_TORDFNEW = "E_TORDFNEW"
    E_TORDFNEW3 = "E_TORDFNEW3"
    E_T4A = "E_T4A"
    E_COND_E2 = "E_COND_E2"
    E2_NABLA_F = "E2_NABLA_F"
    E_COND_KKZ = "E_COND_KKZ"
    E_COND_2K_SPECIAL = "E_COND_2K_SPECIAL"
    E_DF_0B = "E_DF_0B"
    EQ_2_4 = "EQ_2_4"
    EQ_2_9 = "EQ_2_9"
    EQ_2_12 = "EQ_2_12"
    COMPACT_J_FORM = "COMPACT_J_FORM"
    COND_S1 = "COND_S1"
    S1_SPECIAL = "S1_SPECIAL"
    COND_F_TORSION = "COND_F_TORSION"
    COND_F2_TORSION = "COND_F2_TORSION"
    CODAZZI = "CODAZZI"
    EQ31 = "EQ31"
    EQ32B = "EQ32B"
    EQ32C = "EQ32C"
    EQ3_5 = "EQ3_5"
    THREE_F_COND = "THREE_F_COND"
    FNEW = "FNEW"
    LEM_FYFZ2 = "LEM_FYFZ2"
    LEM_FYFZ3 = "LEM_FYFZ3"
    CHAIN_2_10 = "CHAIN_2_10"
    CHAIN_2_11 = "CHAIN_2_11"
    CHAIN_2_12 = "CHAIN_2_12"
    CHAIN_DELTA3 = "CHAIN_DELTA3"
    CHAIN_EQFYFZ_D4 = "CHAIN_EQFYFZ_D4"
    DELTA5_REDUCTION = "DELTA5_REDUCTION"
    DELTA5_FORMS = "DELTA5_FORMS"
    STAT_DEGENERATE = "STAT_DEGENERATE"
    METRICITY = "METRICITY"
    TK_ROUNDTRIP = "TK_ROUNDTRIP"
    LEM_NABLA_G = "LEM_NABLA_G"


class IdentityKind(str, Enum):
    IDENTITY = "identity"
    CONDITION = "condition"


class Hypothesis(str, Enum):
    NONE = "none"
    NABLA_G_ZERO = "nabla g = 0"
    SKEW_CONTORSION = "skew contorsion condition on T"
    F2_TORSION = "f^2-torsion condition"
    ALMOST_HERMITIAN = "f^2 = -I"
    HERMITIAN_OR_PARALLEL_REEB = "f^2 = -I, or almost contact with parallel xi"
    S1_HERMITIAN = "f^2 = -I and the s1 condition"


@dataclass(frozen=True)
class IdentitySpec:
    id: IdentityId
    statement: str
    kind: IdentityKind = IdentityKind.IDENTITY
    needs: frozenset[str] = field(default_factory=frozenset)
    hypothesis: Hypothesis = Hypothesis.NONE


def _spec(
    id: IdentityId,
    statement: str,
    needs: str = "",
    kind: IdentityKind = IdentityKind.IDENTITY,
    hypothesis: Hypothesis = Hypothesis.NONE,
) -> IdentitySpec:
    return IdentitySpec(id, statement, kind, frozenset(needs.split()), hypothesis)


_I = IdentityId
_COND = IdentityKind.CONDITION
_H = Hypothesis

IDENTITIES: dict[IdentityId, IdentitySpec] = {
    s.id: s
    for s in [
        _spec(_I.EIN2, "(∇_X g)(Y,Z) + (∇_Y g)(Z,X) + (∇_Z g)(X,Y) = 0", "T conn"),
        _spec(_I.EIN5, "2(∇_Z F)(X,Y) = -T(Z,X,Y+fY) - T(Y,Z,X+fX)", "T conn"),
        _spec(_I.EIN6, "2(∇_X g)(Y,Z) = T(Z,X,Y+fY) - T(X,Y,Z+fZ)", "T conn"),
        _spec(_I.EIN7, "(∇_Z g)(X,Y) = (∇_X F)(Y,Z) + (∇_Y F)(X,Z)", "conn"),
        _spec(_I.EIN8, "dF(X,Y,Z) = -T(X,Y,Z) - T(Y,Z,X) - T(Z,X,Y)", "T"),
        _spec(
            _I.PROP27,
            "2(∇^g_X F)(Y,Z) = -T(Z,X,Y) - T(X,Y,Z) - T(fZ,X,fY) - T(X,fY,fZ)"
            " + T(Y,fZ,fX) + T(fY,Z,fX)",
            "T",
        ),
        _spec(
            _I.E1_2_22,
            "(∇_X F)(Y,Z) = (∇^g_X F)(Y,Z) - K(X,Y,fZ) + K(X,Z,fY)",
            "K conn",
        ),
        _spec(_I.E_TORDFNEW, "2K(X,Y,Z) = T(X,Y,Z) - T(Z,X,fY) + T(Y,Z,fX)", "T K"),
        _spec(
            _I.E_TORDFNEW3,
            "2K(Y,Z,X) = T(X,Y,Z) + T(Y,Z,X) - T(Z,X,Y)  [∇g = 0]",
            "T K conn",
            hypothesis=_H.NABLA_G_ZERO,
        ),
        _spec(
            _I.E_T4A,
            "T(Z,X,Y) - T(Y,Z,X) = T(Y,Z,fX) - T(Z,X,fY)  [∇g = 0]",
            "T conn",
            hypothesis=_H.NABLA_G_ZERO,
        ),
        _spec(
            _I.E_COND_E2,
            "T(X,Y,Z) - T(Z,X,Y) - T(Z,X,fY) + T(X,Y,fZ) = 0",
            "T",
            kind=_COND,
        ),
        _spec(
            _I.E2_NABLA_F,
            "(∇_X F)(Y,Z) = -T(X,Y,Z) - T(X,Y,fZ)  [skew contorsion]",
            "T conn",
            hypothesis=_H.SKEW_CONTORSION,
        ),
        _spec(
            _I.E_COND_KKZ,
            "g([K_X, K_Y]Z, Z) = 0  [skew contorsion]",
            "T K",
            hypothesis=_H.SKEW_CONTORSION,
        ),
        _spec(_I.E_COND_2K_SPECIAL, "K_X Y = -K_Y X, i.e. K = T/2", "K", kind=_COND),
        _spec(
            _I.E_DF_0B,
            "K(X,Y,Z) = T(Z,Y,X) - ½dF(X,Y,Z)  [skew contorsion]",
            "T K",
            hypothesis=_H.SKEW_CONTORSION,
        ),
        _spec(
            _I.EQ_2_4,
            "(∇^g_X F)(fY,fZ) = -(∇^g_X F)(Y,Z), (∇^g_X F)(fY,Z) = (∇^g_X F)(Y,fZ)",
            hypothesis=_H.HERMITIAN_OR_PARALLEL_REEB,
        ),
        _spec(
            _I.EQ_2_9,
            "2(∇^g_X F)(Y,Z) = T(Y,fZ,fX) + T(fY,Z,fX)",
            "T",
            hypothesis=_H.HERMITIAN_OR_PARALLEL_REEB,
        ),
        _spec(
            _I.EQ_2_12,
            "T(fY,fZ,X) = T(Y,Z,X) - 2(∇^g_{fX} F)(fY,Z)",
            "T",
            hypothesis=_H.HERMITIAN_OR_PARALLEL_REEB,
        ),
        _spec(
            _I.COMPACT_J_FORM,
            "2T(Y,Z,X) = 2(∇^g_{fX}F)(fY,Z) - (∇^g_X F)(fY,Z) + (∇^g_X F)(Y,fZ)"
            " - dF(Y,Z,X) - dF(fY,fZ,X)",
            "T",
            hypothesis=_H.ALMOST_HERMITIAN,
        ),
        _spec(
            _I.COND_S1,
            "(∇^g_X F)(Y,Z) + (∇^g_Y F)(X,Z) = (∇^g_{fX}F)(fY,Z) + (∇^g_{fY}F)(fX,Z)",
            kind=_COND,
        ),
        _spec(
            _I.S1_SPECIAL,
            "s1 on an almost Hermitian point implies K_X Y = -K_Y X",
            "K",
            hypothesis=_H.S1_HERMITIAN,
        ),
        _spec(_I.COND_F_TORSION, "T(fX,Y) = T(X,fY) = -fT(X,Y)", "T", kind=_COND),
        _spec(_I.COND_F2_TORSION, "T(f²X,Y) = T(X,f²Y) = f²T(X,Y)", "T", kind=_COND),
        _spec(
            _I.CODAZZI,
            "(∇^g_X F)(Y,Z) = (∇^g_Y F)(Z,X) = (∇^g_Z F)(X,Y) = ⅓dF(X,Y,Z)",
            kind=_COND,
        ),
        _spec(
            _I.EQ31,
            "(∇^g_X f)fY + f(∇^g_X f)Y = (∇^g_X η)(Y)ξ + η(Y)∇^g_X ξ",
            "reeb",
        ),
        _spec(
            _I.EQ32B,
            "(∇^g_X F)(fY,fZ) = -(∇^g_X F)(Y,Z) + η(Y)(∇^g_X F)(ξ,Z) + η(Z)(∇^g_X F)(Y,ξ)",
            "reeb",
        ),
        _spec(
            _I.EQ32C,
            "(∇^g_X F)(fY,Z) = (∇^g_X F)(Y,fZ) + η(Z)(∇^g_X F)(fY,ξ) - η(Y)(∇^g_X F)(ξ,fZ)",
            "reeb",
        ),
        _spec(
            _I.EQ3_5,
            "(∇^g_X F)(fY,fZ) = -g(Y,(∇^g_X f)Z) + η(Y)η((∇^g_X f)Z) + η(Z)g(fY,∇^g_X ξ)",
            "reeb",
        ),
        _spec(
            _I.THREE_F_COND,
            "3(∇^g_{fX}F)(fY,Z) + 3(∇^g_{fZ}F)(fY,X) = (∇^g_Z F)(X,Y) + (∇^g_X F)(Z,Y)",
            kind=_COND,
        ),
        _spec(_I.FNEW, "(∇^g_{fX}F)(fY,Z) = -(∇^g_X F)(Y,Z)", kind=_COND),
        _spec(
            _I.LEM_FYFZ2,
            "T(fY,fZ,PX) = T(Y,Z,Pf²X) - 2(∇^g_{f²X}F)(Y,fZ) + 2(∇^g_{f²X}F)(fY,Z)"
            " + dF(Y,Z,Pf²X) - dF(fY,fZ,PX)",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.LEM_FYFZ3,
            "T(fY,Z,PfX) = -T(Y,fZ,PfX) - T(Y,Z,(I-f⁴)X) + dF(Y,Z,(I-f⁴)X)"
            " + 2(∇^g_{PX}F)(Y,Z) - 2(∇^g_{f²X}F)(fY,Z) + 2(∇^g_{f²X}F)(Y,fZ)",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.CHAIN_2_10,
            "-Σ_cyc (∇^g_X F)(f²Y,Z) = -T(Y,Z,X) - T(X,Y,Z) - T(Z,X,Y) + ½δ₁",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.CHAIN_2_11,
            "the cyclic relation with Y -> fY, Z -> fZ, corrected by ½δ₂",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.CHAIN_2_12,
            "T(fY,fZ,X) = T(Y,Z,X) + (∇^g_{fX}F)(f²Y,fZ) + (∇^g_{fX}F)(f³Y,Z) + Q-terms",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.CHAIN_DELTA3,
            "(∇^g F)-combination = T(X,Y,Z) + T(Z,X,Y) - T(Y,Z,X) + ½δ₃",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.CHAIN_EQFYFZ_D4,
            "2T(Y,Z,X) = (∇^g F)-combination + ½δ₄",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.DELTA5_REDUCTION,
            "δ₄(X,Y,Z) = δ₅(X,Y,Z) in each written form of δ₅",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.DELTA5_FORMS,
            "the three written forms of δ₅ agree",
            "T",
            hypothesis=_H.F2_TORSION,
        ),
        _spec(
            _I.STAT_DEGENERATE,
            "K symmetric in its first two slots has zero torsion",
            "K",
        ),
        _spec(_I.METRICITY, "(∇_X G)(Y,Z) + G(T(X,Y),Z) = 0", "conn"),
        _spec(_I.TK_ROUNDTRIP, "K -> T -> K reproduces K", "K"),
        _spec(
            _I.LEM_NABLA_G,
            "pairwise implications between K(X,Y,Z) = -K(X,Z,Y), ∇g = 0 and "
            "(∇_X F)(Y,Z) = -(∇_Y F)(X,Z)",
            "K conn",
        ),
    ]
}

_EXPRESSIONS: dict[IdentityId, tuple[Expression, ...]] = {
    _I.EIN2: (statements.EIN2,),
    _I.EIN5: (statements.EIN5,),
    _I.EIN6: (statements.EIN6,),
    _I.EIN7: (statements.EIN7,),
    _I.EIN8: (statements.EIN8,),
    _I.PROP27: (statements.PROP27,),
    _I.E1_2_22: (statements.E1_2_22,),
    _I.E_TORDFNEW: (statements.E_TORDFNEW,),
    _I.E_TORDFNEW3: (statements.E_TORDFNEW3,),
    _I.E_T4A: (statements.E_T4A,),
    _I.E2_NABLA_F: (statements.E2_NABLA_F,),
    _I.E_DF_0B: (statements.E_DF_0B,),
    _I.EQ_2_4: (statements.EQ_2_4_FIRST, statements.EQ_2_4_SECOND),
    _I.EQ_2_9: (statements.EQ_2_9,),
    _I.EQ_2_12: (statements.EQ_2_12,),
    _I.COMPACT_J_FORM: (statements.COMPACT_J_FORM,),
    _I.THREE_F_COND: (statements.THREE_F_COND,),
    _I.FNEW: (statements.FNEW,),
    _I.LEM_FYFZ2: (statements.LEM_FYFZ2,),
    _I.LEM_FYFZ3: (statements.LEM_FYFZ3,),
    **{_I(name): (expression,) for name, expression in CHAINS.items()},
}


@dataclass(frozen=True)
class IdentityInputs:
    """What an identity may consume at one point; absent inputs are None."""

    geom: PointGeometry
    T: TorsionAtPoint | None = None
    K: ContorsionAtPoint | None = None
    conn: ConnectionAtPoint | None = None

    def torsion(self, identity: IdentityId) -> Array:
        if self.T is None:
            raise MissingInputError(identity.value, "torsion T")
        return self.T.components

    def contorsion(self, identity: IdentityId) -> Array:
        if self.K is None:
            raise MissingInputError(identity.value, "contorsion K")
        return self.K.K

    def connection(self, identity: IdentityId) -> ConnectionAtPoint:
        if self.conn is None:
            raise MissingInputError(identity.value, "assembled connection")
        return self.conn

    @cached_property
    def _derivatives(self) -> tuple[Array, Array] | None:
        if self.conn is None:
            return None
        return connection_derivatives(self.conn, self.geom)

    def nabla_g(self, identity: IdentityId) -> Array:
        self.connection(identity)
        assert self._derivatives is not None
        return self._derivatives[0]

    def nabla_F(self, identity: IdentityId) -> Array:
        self.connection(identity)
        assert self._derivatives is not None
        return self._derivatives[1]

    def operands(self, identity: IdentityId, names: frozenset[str]) -> dict[str, Array]:
        out = {"N": self.geom.nablaF.components, "dF": self.geom.dF.components}
        if "T" in names:
            out["T"] = self.torsion(identity)
        if "K" in names:
            out["K"] = self.contorsion(identity)
        if "Ng" in names:
            out["Ng"] = self.nabla_g(identity)
        if "NF" in names:
            out["NF"] = self.nabla_F(identity)
        return out


def _hypothesis_tol() -> float:
    return config.get_float("numerics.tolerances.hypothesis", 1e-10)


def _hypothesis_residual(hypothesis: Hypothesis, identity: IdentityId, inputs: IdentityInputs) -> float:
    geom = inputs.geom
    if hypothesis is Hypothesis.NABLA_G_ZERO:
        return sup_norm(inputs.nabla_g(identity))
    if hypothesis is Hypothesis.SKEW_CONTORSION:
        return e2_residual(inputs.torsion(identity), geom)
    if hypothesis is Hypothesis.F2_TORSION:
        return f2_torsion_residual(inputs.torsion(identity), geom)
    if hypothesis is Hypothesis.ALMOST_HERMITIAN:
        return geom.almost_hermitian_residual()
    if hypothesis is Hypothesis.HERMITIAN_OR_PARALLEL_REEB:
        hermitian = geom.almost_hermitian_residual()
        if geom.reeb is None:
            return hermitian
        contact_residual = max(acm_structure_residual(geom), sup_norm(geom.reeb.nabla_xi))
        return min(hermitian, contact_residual)
    if hypothesis is Hypothesis.S1_HERMITIAN:
        return max(geom.almost_hermitian_residual(), s1_residual(geom))
    return 0.0


def _check_hypothesis(spec: IdentitySpec, inputs: IdentityInputs) -> None:
    if spec.hypothesis is Hypothesis.NONE:
        return
    threshold = _hypothesis_tol()
    if spec.hypothesis in (Hypothesis.ALMOST_HERMITIAN, Hypothesis.HERMITIAN_OR_PARALLEL_REEB):
        threshold = max(
            threshold, config.get_float("numerics.thresholds.almost_hermitian", 1e-10)
        )
    residual = _hypothesis_residual(spec.hypothesis, spec.id, inputs)
    if residual >= threshold:
        raise HypothesisNotMetError(spec.id.value, spec.hypothesis.value, residual)


def _commutator_residual(K: Array, geom: PointGeometry) -> float:
    """Symmetric part in (Z, W) of g([K_X, K_Y]Z, W)."""
    vectors = np.einsum("abk,kc->abc", K, geom.ginv)
    W = np.einsum("yzm,xmw->xyzw", vectors, K) - np.einsum("xzm,ymw->xyzw", vectors, K)
    return sup_norm(W + np.einsum("xyzw->xywz", W))


def _delta5_reduction(T: Array, geom: PointGeometry) -> float:
    delta4 = delta_tensor(4, T, geom)
    return max(sup_norm(delta4 - delta_tensor(5, T, geom, form)) for form in Delta5Form)


def _delta5_forms(T: Array, geom: PointGeometry) -> float:
    forms = [delta_tensor(5, T, geom, form) for form in Delta5Form]
    return max(sup_norm(a - b) for a, b in zip(forms, forms[1:] + forms[:1]))


def _equivalence_violation(residuals: list[float], tol: float) -> float:
    """
    Worst failure of "each statement implies the others".

    Once one residual is below tol every residual must be; the largest one is
    returned then. When none vanishes the implications hold vacuously.
    """
    if min(residuals) < tol:
        return max(residuals)
    return 0.0


def _residual(identity: IdentityId, inputs: IdentityInputs, tol: float) -> float:
    geom = inputs.geom
    spec = IDENTITIES[identity]

    if identity in _EXPRESSIONS:
        expressions = _EXPRESSIONS[identity]
        names = frozenset().union(*(e.operands for e in expressions))
        operators = dict(geom.operators)
        if any("Pi" in e.tokens for e in expressions):
            operators["Pi"] = geom.Pinv
        operands = inputs.operands(identity, names)
        return max(sup_norm(e.evaluate(operands, operators)) for e in expressions)

    match identity:
        case IdentityId.E_COND_E2:
            return e2_residual(inputs.torsion(identity), geom)
        case IdentityId.E_COND_KKZ:
            return _commutator_residual(inputs.contorsion(identity), geom)
        case IdentityId.E_COND_2K_SPECIAL | IdentityId.S1_SPECIAL:
            return special_residual(inputs.contorsion(identity))
        case IdentityId.COND_S1:
            return s1_residual(geom)
        case IdentityId.COND_F_TORSION:
            return f_torsion_residual(inputs.torsion(identity), geom)
        case IdentityId.COND_F2_TORSION:
            return f2_torsion_residual(inputs.torsion(identity), geom)
        case IdentityId.CODAZZI:
            return codazzi_residual(geom)
        case IdentityId.EQ31:
            return sup_norm(contact.derivative_of_f_squared(geom))
        case IdentityId.EQ32B:
            return sup_norm(contact.twisted_pair_residual(geom))
        case IdentityId.EQ32C:
            return sup_norm(contact.mixed_pair_residual(geom))
        case IdentityId.EQ3_5:
            return sup_norm(contact.reeb_expansion_residual(geom))
        case IdentityId.DELTA5_REDUCTION:
            return _delta5_reduction(inputs.torsion(identity), geom)
        case IdentityId.DELTA5_FORMS:
            return _delta5_forms(inputs.torsion(identity), geom)
        case IdentityId.STAT_DEGENERATE:
            K = inputs.contorsion(identity)
            symmetric = 0.5 * (K + np.einsum("bac->abc", K))
            return sup_norm(torsion_from_contorsion(symmetric).components)
        case IdentityId.METRICITY:
            result = metricity_residual(inputs.connection(identity), geom)
            assert result.residual is not None
            return result.residual
        case IdentityId.TK_ROUNDTRIP:
            K = inputs.contorsion(identity)
            rebuilt = contorsion_from_torsion(torsion_from_contorsion(K), geom)
            return sup_norm(rebuilt.K - K)
        case IdentityId.LEM_NABLA_G:
            operands = inputs.operands(identity, frozenset({"K", "Ng", "NF"}))
            residuals = [
                sup_norm(e.evaluate(operands, geom.operators)) for e in statements.LEM_NABLA_G
            ]
            return _equivalence_violation(residuals, tol)

    raise ValueError(f"No evaluator registered for {spec.id.value}")


def eval_identity(
    identity: IdentityId | str,
    geom: PointGeometry,
    T: TorsionAtPoint | None = None,
    K: ContorsionAtPoint | None = None,
    conn: ConnectionAtPoint | None = None,
    tol: float | None = None,
    strict: bool = False,
) -> CheckResult:
    """
    Evaluate one identity or condition at a point.

    Args:
        identity: Identity to evaluate
        geom: Point geometry (Reeb data, if any, is read from it)
        T: Torsion of the connection under test
        K: Its contorsion
        conn: The assembled connection
        tol: Pass threshold (defaults to numerics.tolerances.identity)
        strict: Raise HypothesisNotMetError instead of returning a skipped result

    Raises:
        MissingInputError: If an input the identity needs is None
        HypothesisNotMetError: Only with strict=True
    """
    identity = IdentityId(identity)
    spec = IDENTITIES[identity]
    if tol is None:
        tol = config.get_float("numerics.tolerances.identity", 1e-8)
    inputs = IdentityInputs(geom, T, K, conn)

    try:
        _check_hypothesis(spec, inputs)
    except HypothesisNotMetError as e:
        if strict:
            raise
        logger.debug(f"{identity.value} skipped at {geom.coords}: {e}")
        return CheckResult.skipped(identity.value, str(e), tol)

    residual = _residual(identity, inputs, tol)
    if spec.kind is IdentityKind.CONDITION:
        return CheckResult.condition(identity.value, residual, tol)
    return CheckResult.evaluate(identity.value, residual, tol)


def eval_chain(
    identity: IdentityId | str, geom: PointGeometry, T: TorsionAtPoint, tol: float | None = None
) -> CheckResult:
    """
    Evaluate a step of the weak torsion computation with its δ terms.

    Raises:
        ValueError: If the id is not a chain or δ₅ reduction step
    """
    identity = IdentityId(identity)
    if identity not in CHAIN_IDS:
        raise ValueError(f"{identity.value} is not a chain identity")
    return eval_identity(identity, geom, T=T, tol=tol)


CHAIN_IDS = (
    IdentityId.CHAIN_2_10,
    IdentityId.CHAIN_2_11,
    IdentityId.CHAIN_2_12,
    IdentityId.CHAIN_DELTA3,
    IdentityId.CHAIN_EQFYFZ_D4,
    IdentityId.DELTA5_REDUCTION,
    IdentityId.DELTA5_FORMS,
)


def identity_table() -> list[tuple[str, str, str]]:
    """(id, kind, statement) rows in enum order."""
    return [(s.id.value, s.kind.value, s.statement) for s in IDENTITIES.values()]
