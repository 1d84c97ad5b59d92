"""
Check results shared by the geometry, connection, oracle and identity layers
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


CONDITION_INACTIVE = "condition inactive"


@dataclass(frozen=True)
class CheckContext:
    """Where a check was evaluated"""

    manifold: str
    params: dict[str, Any] = field(default_factory=dict)
    point_index: int = 0
    coords: tuple[float, ...] = ()


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one residual check.

    `status` is PASS exactly when `residual < tol`, unless the check was
    skipped (residual None) or is a condition that does not hold at the point.
    """

    id: str
    residual: float | None
    tol: float
    status: CheckStatus
    skip_reason: str | None = None
    context: CheckContext | None = None

    @property
    def passed(self) -> bool:
        return self.residual is not None and self.residual < self.tol

    @classmethod
    def evaluate(cls, id: str, residual: float, tol: float) -> "CheckResult":
        """Identity semantics: pass below tol, fail otherwise."""
        residual = float(residual)
        status = CheckStatus.PASS if residual < tol else CheckStatus.FAIL
        return cls(id=id, residual=residual, tol=tol, status=status)

    @classmethod
    def condition(cls, id: str, residual: float, tol: float) -> "CheckResult":
        """Condition semantics: pass when it holds, otherwise skipped as inactive."""
        residual = float(residual)
        if residual < tol:
            return cls(id=id, residual=residual, tol=tol, status=CheckStatus.PASS)
        return cls(
            id=id,
            residual=residual,
            tol=tol,
            status=CheckStatus.SKIPPED,
            skip_reason=CONDITION_INACTIVE,
        )

    @classmethod
    def skipped(cls, id: str, reason: str, tol: float) -> "CheckResult":
        return cls(id=id, residual=None, tol=tol, status=CheckStatus.SKIPPED, skip_reason=reason)

    @classmethod
    def reported(cls, id: str, residual: float, tol: float, reason: str) -> "CheckResult":
        """A residual recorded without a pass/fail verdict."""
        return cls(
            id=id,
            residual=float(residual),
            tol=tol,
            status=CheckStatus.SKIPPED,
            skip_reason=reason,
        )

    def with_context(self, context: CheckContext) -> "CheckResult":
        return CheckResult(
            id=self.id,
            residual=self.residual,
            tol=self.tol,
            status=self.status,
            skip_reason=self.skip_reason,
            context=context,
        )
