"""
Intermediate relations of the weak almost Hermitian torsion computation.

Each relation is written LHS - RHS including its δ correction, so its residual
must vanish for every Einstein connection satisfying the f²-torsion condition.
"""

from src.tensors import Expression

from .deltas import DELTA_1, DELTA_2, DELTA_3, DELTA_4

# cyclic sum of -(∇^g_X F)(f²Y,Z) = -ΣT + ½δ₁
CHAIN_2_10 = Expression.parse(
    "CHAIN_2_10",
    """
    -N(X,f2Y,Z) -N(Y,f2Z,X) -N(Z,f2X,Y)
    +T(Y,Z,X) +T(X,Y,Z) +T(Z,X,Y)
    """,
) + DELTA_1.scaled(-0.5)

# the previous relation with Y -> fY, Z -> fZ
CHAIN_2_11 = Expression.parse(
    "CHAIN_2_11",
    """
    -N(X,f3Y,fZ) -N(fY,f3Z,X) -N(fZ,f2X,fY) +N(X,f2Y,Z) -N(X,fY,fZ)
    -T(X,Y,Z) -T(Z,X,Y) +T(fY,fZ,X)
    """,
) + DELTA_2.scaled(-0.5)

# T(fY,fZ,X) with all Q-terms written out
CHAIN_2_12 = Expression.parse(
    "CHAIN_2_12",
    """
    +T(fY,fZ,X) -T(Y,Z,X) -N(fX,f2Y,fZ) -N(fX,f3Y,Z)
    -1/2 T(fZ,fX,QY) -1/2 T(fZ,fX,Q2Y) -1/2 T(fX,QY,fZ) -1/2 T(fX,Q2Y,fZ)
    -3/2 T(QY,Z,X) -1/2 T(Q2Y,Z,X) -3/2 T(QY,Z,QX) -1/2 T(Q2Y,Z,QX)
    -1/2 T(QZ,fX,fY) -1/2 T(QZ,fX,QfY) -1/2 T(fX,fY,QZ) -1/2 T(fX,QfY,QZ)
    -1/2 T(Y,QZ,X) -1/2 T(QY,QZ,X) -1/2 T(Y,QZ,QX) -1/2 T(QY,QZ,QX)
    +T(fY,fZ,QX) +T(QfY,fZ,X) +T(QfY,fZ,QX) -T(Y,Z,QX)
    """,
)

# substituting the previous relation into the second one
CHAIN_DELTA3 = Expression.parse(
    "CHAIN_DELTA3",
    """
    +N(X,f2Y,Z) -N(X,fY,fZ) -N(X,f3Y,fZ) -N(fY,f3Z,X) -N(fZ,f2X,fY)
    +N(fX,f3Y,Z) +N(fX,f2Y,fZ)
    -T(X,Y,Z) -T(Z,X,Y) +T(Y,Z,X)
    """,
) + DELTA_3.scaled(-0.5)

# 2T(Y,Z,X) before the reduction of δ₄
CHAIN_EQFYFZ_D4 = Expression.parse(
    "CHAIN_EQFYFZ_D4",
    """
    +2 T(Y,Z,X)
    -N(X,fY,fZ) -N(X,f3Y,fZ) -N(Y,f2Z,X) -N(Z,f2X,Y)
    +N(fX,f3Y,Z) +N(fX,f2Y,fZ) -N(fY,f3Z,X) -N(fZ,f2X,fY)
    """,
) + DELTA_4.scaled(-0.5)

CHAINS: dict[str, Expression] = {
    "CHAIN_2_10": CHAIN_2_10,
    "CHAIN_2_11": CHAIN_2_11,
    "CHAIN_2_12": CHAIN_2_12,
    "CHAIN_DELTA3": CHAIN_DELTA3,
    "CHAIN_EQFYFZ_D4": CHAIN_EQFYFZ_D4,
}
