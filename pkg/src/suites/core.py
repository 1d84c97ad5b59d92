"""
Core identities - numerics hygiene and the identities every Einstein
connection satisfies, checked on the oracle connection.
"""

from collections.abc import Iterator

from src.config import config
from src.geometry import (
    dF_cyclic,
    fd_validate,
    nabla_g_residual,
    nablaF_via_f,
)
from src.identities import IdentityId
from src.results import CheckResult
from src.tensors import sup_norm

from .base import BaseSuite, PointContext

_I = IdentityId

CORE_IDENTITIES = (
    _I.EIN2,
    _I.EIN5,
    _I.EIN6,
    _I.EIN7,
    _I.EIN8,
    _I.PROP27,
    _I.E1_2_22,
    _I.E_TORDFNEW,
    _I.E_TORDFNEW3,
    _I.E_T4A,
    _I.E_COND_E2,
    _I.E2_NABLA_F,
    _I.E_COND_KKZ,
    _I.E_COND_2K_SPECIAL,
    _I.E_DF_0B,
    _I.COND_S1,
    _I.S1_SPECIAL,
    _I.COND_F_TORSION,
    _I.COND_F2_TORSION,
    _I.CODAZZI,
    _I.THREE_F_COND,
    _I.FNEW,
    _I.STAT_DEGENERATE,
    _I.METRICITY,
    _I.TK_ROUNDTRIP,
    _I.LEM_NABLA_G,
)


class CoreIdentitiesSuite(BaseSuite):
    name = "core-identities"
    description = "route and finite-difference checks; general identities on the oracle connection"

    def geometry_checks(self, ctx: PointContext) -> list[CheckResult]:
        geom = ctx.geom
        geometry_tol = config.get_float("numerics.tolerances.geometry", 1e-9)
        scale = max(1.0, sup_norm(geom.dg), sup_norm(geom.g.components))
        return [
            fd_validate(ctx.instance.fields, ctx.point),
            CheckResult.evaluate("NABLA_G_ZERO", nabla_g_residual(geom) / scale, geometry_tol),
            CheckResult.evaluate(
                "DF_ROUTES", sup_norm(geom.dF.components - dF_cyclic(geom)), geometry_tol
            ),
            CheckResult.evaluate(
                "NABLA_F_ROUTES",
                sup_norm(geom.nablaF.components - nablaF_via_f(geom)),
                geometry_tol,
            ),
        ]

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        yield from self.geometry_checks(ctx)
        yield from self.identities(ctx, CORE_IDENTITIES)
