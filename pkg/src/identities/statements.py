"""
Identities written as residual expressions, LHS - RHS.

Each expression is evaluated on the coordinate basis; its sup-norm is the
residual of the identity. Operand names follow src.tensors.expressions:
N = ∇^g F, NF = ∇F and Ng = ∇g for the Einstein connection.
"""

from src.tensors import Expression

# 2(∇_Z F)(X,Y) = -T(Z,X,Y+fY) - T(Y,Z,X+fX)
EIN5 = Expression.parse(
    "EIN5",
    "+2 NF(Z,X,Y) +T(Z,X,Y) +T(Z,X,fY) +T(Y,Z,X) +T(Y,Z,fX)",
)

# 2(∇_X g)(Y,Z) = T(Z,X,Y+fY) - T(X,Y,Z+fZ)
EIN6 = Expression.parse(
    "EIN6",
    "+2 Ng(X,Y,Z) -T(Z,X,Y) -T(Z,X,fY) +T(X,Y,Z) +T(X,Y,fZ)",
)

# (∇_Z g)(X,Y) = (∇_X F)(Y,Z) + (∇_Y F)(X,Z)
EIN7 = Expression.parse("EIN7", "+Ng(Z,X,Y) -NF(X,Y,Z) -NF(Y,X,Z)")

# dF(X,Y,Z) = -T(X,Y,Z) - T(Y,Z,X) - T(Z,X,Y)
EIN8 = Expression.parse("EIN8", "+dF(X,Y,Z) +T(X,Y,Z) +T(Y,Z,X) +T(Z,X,Y)")

# cyclic sum of ∇g vanishes
EIN2 = Expression.parse("EIN2", "+Ng(X,Y,Z) +Ng(Y,Z,X) +Ng(Z,X,Y)")

# 2(∇^g_X F)(Y,Z) in terms of the torsion
PROP27 = Expression.parse(
    "PROP27",
    """
    +2 N(X,Y,Z) +T(Z,X,Y) +T(X,Y,Z) +T(fZ,X,fY) +T(X,fY,fZ)
    -T(Y,fZ,fX) -T(fY,Z,fX)
    """,
)

# (∇_X F)(Y,Z) = (∇^g_X F)(Y,Z) - K(X,Y,fZ) + K(X,Z,fY)
E1_2_22 = Expression.parse("E1_2_22", "+NF(X,Y,Z) -N(X,Y,Z) +K(X,Y,fZ) -K(X,Z,fY)")

# 2K(X,Y,Z) = T(X,Y,Z) - T(Z,X,fY) + T(Y,Z,fX)
E_TORDFNEW = Expression.parse(
    "E_TORDFNEW", "+2 K(X,Y,Z) -T(X,Y,Z) +T(Z,X,fY) -T(Y,Z,fX)"
)

# ∇g = 0:  2K(Y,Z,X) = T(X,Y,Z) + T(Y,Z,X) - T(Z,X,Y)
E_TORDFNEW3 = Expression.parse(
    "E_TORDFNEW3", "+2 K(Y,Z,X) -T(X,Y,Z) -T(Y,Z,X) +T(Z,X,Y)"
)

# ∇g = 0:  T(Z,X,Y) - T(Y,Z,X) = T(Y,Z,fX) - T(Z,X,fY)
E_T4A = Expression.parse("E_T4A", "+T(Z,X,Y) -T(Y,Z,X) -T(Y,Z,fX) +T(Z,X,fY)")

# three statements that vanish together for an Einstein connection
LEM_NABLA_G = (
    Expression.parse("K_SKEW", "+K(X,Y,Z) +K(X,Z,Y)"),
    Expression.parse("NABLA_G", "+Ng(X,Y,Z)"),
    Expression.parse("NABLA_F_SKEW", "+NF(X,Y,Z) +NF(Y,X,Z)"),
)

# under the skew-torsion condition:  K(X,Y,Z) = T(Z,Y,X) - ½dF(X,Y,Z)
E_DF_0B = Expression.parse("E_DF_0B", "+K(X,Y,Z) -T(Z,Y,X) +1/2 dF(X,Y,Z)")

# under the skew-torsion condition:  (∇_X F)(Y,Z) = -T(X,Y,Z) - T(X,Y,fZ)
E2_NABLA_F = Expression.parse("E2_NABLA_F", "+NF(X,Y,Z) +T(X,Y,Z) +T(X,Y,fZ)")

# (∇^g_X F)(fY,fZ) = -(∇^g_X F)(Y,Z)  and  (∇^g_X F)(fY,Z) = (∇^g_X F)(Y,fZ)
EQ_2_4_FIRST = Expression.parse("EQ_2_4", "+N(X,fY,fZ) +N(X,Y,Z)")
EQ_2_4_SECOND = Expression.parse("EQ_2_4", "+N(X,fY,Z) -N(X,Y,fZ)")

# 2(∇^g_X F)(Y,Z) = T(Y,fZ,fX) + T(fY,Z,fX)
EQ_2_9 = Expression.parse("EQ_2_9", "+2 N(X,Y,Z) -T(Y,fZ,fX) -T(fY,Z,fX)")

# T(fY,fZ,X) = T(Y,Z,X) - 2(∇^g_{fX} F)(fY,Z)
EQ_2_12 = Expression.parse("EQ_2_12", "+T(fY,fZ,X) -T(Y,Z,X) +2 N(fX,fY,Z)")

# 2T(Y,Z,X) = 2N(fX,fY,Z) - N(X,fY,Z) + N(X,Y,fZ) - dF(Y,Z,X) - dF(fY,fZ,X)
COMPACT_J_FORM = Expression.parse(
    "COMPACT_J_FORM",
    """
    +2 T(Y,Z,X) -2 N(fX,fY,Z) +N(X,fY,Z) -N(X,Y,fZ)
    +dF(Y,Z,X) +dF(fY,fZ,X)
    """,
)

# totally skew torsion: 3N(fX,fY,Z) + 3N(fZ,fY,X) = N(Z,X,Y) + N(X,Z,Y)
THREE_F_COND = Expression.parse(
    "THREE_F_COND", "+3 N(fX,fY,Z) +3 N(fZ,fY,X) -N(Z,X,Y) -N(X,Z,Y)"
)

# (∇^g_{fX} F)(fY,Z) = -(∇^g_X F)(Y,Z)
FNEW = Expression.parse("FNEW", "+N(fX,fY,Z) +N(X,Y,Z)")

# f²-torsion condition, P = I - f²
LEM_FYFZ2 = Expression.parse(
    "LEM_FYFZ2",
    """
    +T(fY,fZ,PX) -T(Y,Z,Pf2X) +2 N(f2X,Y,fZ) -2 N(f2X,fY,Z)
    -dF(Y,Z,Pf2X) +dF(fY,fZ,PX)
    """,
)

# f²-torsion condition; (I - f⁴)X is split as X - f⁴X
LEM_FYFZ3 = Expression.parse(
    "LEM_FYFZ3",
    """
    +T(fY,Z,PfX) +T(Y,fZ,PfX) +T(Y,Z,X) -T(Y,Z,f4X)
    -dF(Y,Z,X) +dF(Y,Z,f4X)
    -2 N(PX,Y,Z) +2 N(f2X,fY,Z) -2 N(f2X,Y,fZ)
    """,
)
