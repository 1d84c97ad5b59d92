"""
Delta chain - the intermediate relations of the weak torsion computation,
with their δ corrections, on the oracle torsion.
"""

from collections.abc import Iterator

from src.identities import CHAIN_IDS, IdentityId, eval_chain
from src.results import CheckResult

from .base import NO_CONNECTION, BaseSuite, PointContext

LEMMA_IDENTITIES = (IdentityId.LEM_FYFZ2, IdentityId.LEM_FYFZ3)


class DeltaChainSuite(BaseSuite):
    name = "delta-chain"
    description = "chain relations and delta terms under the f^2-torsion condition"

    def applicable(self, ctx: PointContext) -> str | None:
        if "Pi" not in ctx.geom.operators:
            return "I - f^2 is singular"
        return None

    def process(self, ctx: PointContext) -> Iterator[CheckResult]:
        yield from self.identities(ctx, LEMMA_IDENTITIES)
        if not ctx.oracle.consistent:
            for identity in CHAIN_IDS:
                yield CheckResult.skipped(identity.value, NO_CONNECTION, self.tol)
            return
        for identity in CHAIN_IDS:
            yield self.guarded(
                identity.value,
                lambda identity=identity: eval_chain(identity, ctx.geom, ctx.oracle.T, self.tol),
            )
