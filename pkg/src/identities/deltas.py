"""
Correction terms δ₁ … δ₅ that separate the weak almost Hermitian torsion
computation from the almost Hermitian one.

Every term carries at least one Q = -f² - I, so all of them vanish when
f² = -I. δ₅ is kept in three written forms: the one obtained with the
f²-torsion condition, the one obtained after eliminating cyclic torsion sums
through dF, and the rewritten form with the torsion moved onto ∇^g F.
"""

from enum import Enum

import numpy as np

from src.geometry import PointGeometry
from src.tensors import Array, Expression

DELTA_1 = Expression.parse(
    "delta1",
    """
    -T(fZ,X,QfY) -T(X,QY,Z) -T(X,QfY,fZ) +T(QfY,Z,fX)
    -T(Z,X,QY) -T(X,Y,QZ) +T(QY,fZ,fX) -T(fX,Y,QfZ)
    -T(Y,QZ,X) -T(Y,QfZ,fX) -T(Y,Z,QX) +T(QfZ,X,fY)
    -T(Z,QX,Y) +T(QfX,Y,fZ) -T(fY,Z,QfX) -T(Z,QfX,fY)
    +T(QZ,fX,fY) +T(QX,fY,fZ)
    """,
)

DELTA_2 = Expression.parse(
    "delta2",
    """
    +T(X,QY,Z) -T(QY,fZ,fX) -2 T(QfY,Z,fX) +T(Z,X,QY)
    +2 T(QZ,X,Y) +T(QZ,X,QY) +T(X,Y,QZ) +2 T(fY,QZ,fX)
    -T(QfX,fY,Z) -T(QfX,fY,QZ) +T(fX,fY,QZ)
    +T(fX,fY,Q2Z) +T(fY,Q2Z,fX) +T(Y,fZ,QfX)
    +T(QY,fZ,QfX) -T(Q2Y,fZ,fX) +T(fZ,QfX,Y)
    +T(fZ,QfX,QY) -T(QfY,QZ,fX) -T(QfZ,fX,Y)
    -T(QfZ,fX,QY) -T(X,fY,QfZ) -T(fY,QfZ,X)
    -T(fY,fZ,QX) +T(Q2Z,X,Y) +T(Q2Z,X,QY)
    -T(X,Q2Y,Z) -T(X,Q2Y,QZ) +T(QX,QY,Z)
    +T(QX,QY,QZ) -T(Z,X,Q2Y) -T(QZ,X,Q2Y)
    +T(QX,Y,Z) +T(QX,Y,QZ) -T(fZ,QX,fY)
    """,
)

DELTA_3 = Expression.parse(
    "delta3",
    """
    +T(fZ,QfX,QY) -T(QfZ,fX,QY) -T(QfZ,fX,Y) -T(QfY,QZ,fX)
    +T(fZ,QfX,Y) -T(Q2Y,fZ,fX) +T(QY,fZ,QfX) +T(Y,fZ,QfX)
    +T(fY,Q2Z,fX) +T(fX,fY,Q2Z) -T(QfX,fY,QZ) -T(QfX,fY,Z)
    -T(QZ,X,Q2Y) -T(Z,X,Q2Y) -3 T(QY,Z,QX) +T(QX,QY,QZ)
    -T(fX,QY,fZ) -3 T(QY,Z,X) -T(fX,QfY,QZ) -T(QZ,fX,QfY)
    +2 T(QfY,fZ,QX) +2 T(QfY,fZ,X) -T(fX,Q2Y,fZ) -T(fZ,fX,QY)
    -T(fZ,fX,Q2Y) -T(Q2Y,Z,X) -T(Q2Y,Z,QX) -T(QY,QZ,X)
    -T(QY,QZ,QX) -T(Y,QZ,QX) +T(QX,QY,Z) -T(X,Q2Y,QZ)
    -T(X,Q2Y,Z) +T(Q2Z,X,QY) +T(Q2Z,X,Y) +T(fY,fZ,QX)
    -T(fY,QfZ,X) -T(X,fY,QfZ) -T(fZ,QX,fY) +T(QX,Y,QZ)
    +T(QX,Y,Z) -T(QY,fZ,fX) +T(X,Y,QZ) +T(QZ,X,QY)
    +T(Z,X,QY) +T(X,QY,Z) +2 T(fY,QZ,fX) +2 T(QZ,X,Y)
    -2 T(QfY,Z,fX) -T(QZ,fX,fY) -2 T(Y,Z,QX) -T(Y,QZ,X)
    """,
)

DELTA_4 = Expression.parse(
    "delta4",
    """
    +2 T(QZ,X,Y) -T(fZ,X,QfY) -T(X,QfY,fZ) -T(QfY,Z,fX)
    +T(QZ,X,QY) +2 T(fY,QZ,fX) -T(fX,Y,QfZ) -2 T(Y,QZ,X)
    -T(Y,QfZ,fX) +T(QX,Y,Z) +T(QX,Y,QZ) -3 T(Y,Z,QX)
    -T(Y,QZ,QX) +T(QfZ,X,fY) -T(fZ,QX,fY) -T(Z,QX,Y)
    +T(QfX,Y,fZ) -T(fY,Z,QfX) -T(Z,QfX,fY) -3 T(QY,Z,X)
    -3 T(QY,Z,QX) -T(fX,QY,fZ) +T(QX,fY,fZ) -T(X,fY,QfZ)
    -T(fY,QfZ,X) +T(fY,fZ,QX) +T(Q2Z,X,Y) +T(Q2Z,X,QY)
    -T(X,Q2Y,Z) -T(X,Q2Y,QZ) +T(QX,QY,Z) +T(QX,QY,QZ)
    -T(Z,X,Q2Y) -T(QZ,X,Q2Y) -T(QfX,fY,Z) -T(QfX,fY,QZ)
    +T(fX,fY,Q2Z) +T(fY,Q2Z,fX) +T(Y,fZ,QfX) +T(QY,fZ,QfX)
    -T(Q2Y,fZ,fX) +T(fZ,QfX,Y) +T(fZ,QfX,QY) -T(fX,Q2Y,fZ)
    -T(fZ,fX,QY) -T(fZ,fX,Q2Y) -T(Q2Y,Z,X) -T(Q2Y,Z,QX)
    -T(QY,QZ,X) -T(QY,QZ,QX) +2 T(QfY,fZ,X)
    +2 T(QfY,fZ,QX) -T(QfY,QZ,fX) -T(QfZ,fX,Y)
    -T(QfZ,fX,QY) -T(QZ,fX,QfY) -T(fX,QfY,QZ)
    """,
)

# δ₅ after imposing the f²-torsion condition on δ₄
DELTA_5_F2 = Expression.parse(
    "delta5_f2",
    """
    -T(fZ,X,QfY) +T(Z,X,QY) +T(X,Y,QZ) -8 T(Y,Z,QX)
    -T(fX,Y,QfZ) -T(X,fY,QfZ) +T(Z,X,Q2Y) -T(fX,fY,QZ)
    -T(fX,fY,Q2Z) +2 T(fY,fZ,QX) -T(fZ,fX,QY) -T(fZ,fX,Q2Y)
    +2 T(fY,fZ,Q2X) -6 T(Y,Z,Q2X) -2 T(Y,Z,Q3X) -T(Z,fX,Q2fY)
    +T(X,Y,Q2Z) -T(fX,Y,Q2fZ) -T(Z,fX,QfY)
    """,
)

# δ₅ after replacing cyclic torsion sums by dF
DELTA_5_DF = Expression.parse(
    "delta5_dF",
    """
    -9 T(Y,Z,QX) -7 T(Y,Z,Q2X) -2 T(Y,Z,Q3X)
    +3 T(fY,fZ,QX) +2 T(fY,fZ,Q2X)
    -T(Y,fZ,Qf3X) -T(fY,Z,Qf3X)
    -dF(Y,fZ,Qf3X) -dF(fY,Z,Qf3X) +dF(fY,fZ,QX) +dF(Y,Z,Qf2X)
    """,
)

# δ₅ with the f-twisted torsion traded for ∇^g F; needs P⁻¹
DELTA_5_REWRITTEN = Expression.parse(
    "delta5_rewritten",
    """
    -9 T(Y,Z,QX) -7 T(Y,Z,Q2X) -2 T(Y,Z,Q3X)
    +3 T(Y,Z,Qf2X) +2 T(Y,Z,Q2f2X)
    +3 dF(Y,Z,Qf2X) +2 dF(Y,Z,Q2f2X)
    -dF(Y,Z,Qf2X) -dF(Y,Z,Qf4X)
    +dF(Y,Z,Qf2X)
    -2 dF(fY,fZ,QX) -2 dF(fY,fZ,Q2X)
    -6 N(PiQf2X,Y,fZ) -4 N(PiQ2f2X,Y,fZ)
    +6 N(PiQf2X,fY,Z) +4 N(PiQ2f2X,fY,Z)
    -2 N(Qf2X,Y,Z)
    -2 N(PiQf4X,Y,fZ) +2 N(PiQf4X,fY,Z)
    -dF(Y,fZ,Qf3X) -dF(fY,Z,Qf3X)
    """,
)


class Delta5Form(str, Enum):
    F2_CONDITION = "f2"
    DF = "dF"
    REWRITTEN = "rewritten"


DELTAS: dict[int, Expression] = {1: DELTA_1, 2: DELTA_2, 3: DELTA_3, 4: DELTA_4}
DELTA_5_FORMS: dict[Delta5Form, Expression] = {
    Delta5Form.F2_CONDITION: DELTA_5_F2,
    Delta5Form.DF: DELTA_5_DF,
    Delta5Form.REWRITTEN: DELTA_5_REWRITTEN,
}


def delta_expression(i: int, form: Delta5Form = Delta5Form.F2_CONDITION) -> Expression:
    if i == 5:
        return DELTA_5_FORMS[Delta5Form(form)]
    if i not in DELTAS:
        raise ValueError(f"delta index must be in 1..5, got {i}")
    return DELTAS[i]


def delta_tensor(
    i: int, T: Array, geom: PointGeometry, form: Delta5Form = Delta5Form.F2_CONDITION
) -> Array:
    """δ_i on the coordinate basis, out[a, b, c] = δ_i(e_a, e_b, e_c)."""
    expression = delta_expression(i, form)
    operators = dict(geom.operators)
    if "Pi" in expression.tokens:
        operators["Pi"] = geom.Pinv
    operands = {"T": T, "dF": geom.dF.components, "N": geom.nablaF.components}
    return expression.evaluate(operands, operators)


def eval_delta(
    i: int,
    T: Array,
    geom: PointGeometry,
    X: Array,
    Y: Array,
    Z: Array,
    form: Delta5Form = Delta5Form.F2_CONDITION,
) -> float:
    """
    Scalar δ_i(X, Y, Z) for arbitrary vectors.

    Args:
        i: Index 1..5
        T: Torsion components T[a, b, c]
        geom: Point geometry supplying f, Q, P⁻¹, dF and ∇^g F
        X, Y, Z: Component vectors
        form: Written form of δ₅ (ignored for i < 5)
    """
    values = delta_tensor(i, T, geom, form)
    return float(np.einsum("abc,a,b,c->", values, X, Y, Z))
