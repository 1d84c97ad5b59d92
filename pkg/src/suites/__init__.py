"""Verification suites: which checks run at each sampled point."""

from src.exceptions import UnknownSuiteError

from .acm import AcmTheoremSuite
from .base import BaseSuite, PointContext
from .core import CoreIdentitiesSuite
from .delta_chain import DeltaChainSuite
from .hermitian import HermitianTheoremSuite
from .survey import OracleSurveySuite
from .weak import WeakTheoremSuite

SUITES: dict[str, type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        CoreIdentitiesSuite,
        HermitianTheoremSuite,
        WeakTheoremSuite,
        AcmTheoremSuite,
        DeltaChainSuite,
        OracleSurveySuite,
    )
}


def get_suite(name: str) -> type[BaseSuite]:
    if name not in SUITES:
        raise UnknownSuiteError(name, list(SUITES))
    return SUITES[name]


__all__ = [
    "SUITES",
    "AcmTheoremSuite",
    "BaseSuite",
    "CoreIdentitiesSuite",
    "DeltaChainSuite",
    "HermitianTheoremSuite",
    "OracleSurveySuite",
    "PointContext",
    "WeakTheoremSuite",
    "get_suite",
]
