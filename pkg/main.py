#!/usr/bin/env python3
"""
torsion-lab - pointwise verification of Einstein connections

Samples points of analytic example structures G = g + F, solves the metricity
equation there, and checks closed-form torsion formulas and identities
against the solution.
"""

import argparse
import sys
from pathlib import Path

from src.catalog import list_manifolds, parse_manifold_arg
from src.config import config
from src.exceptions import (
    ConfigurationError,
    InvalidParamsError,
    UnknownManifoldError,
    UnknownSuiteError,
)
from src.identities import identity_table
from src.logging_config import get_module_logger, setup_run_logging
from src.runner import ManifoldRequest, RunConfig, run
from src.suites import SUITES

logger = get_module_logger("main")

EXIT_USAGE = 2


def _print_error_box(title: str, details: str, suggestions: str | None = None) -> None:
    """
    Print a formatted error box with title, details, and optional suggestions.

    Args:
        title: Error title/header
        details: Error details/description
        suggestions: Optional suggestions for resolving the error
    """
    logger.error("=" * 80)
    logger.error(title)
    logger.error("=" * 80)
    logger.error("")
    logger.error(details)
    logger.error("")
    if suggestions:
        logger.error(suggestions)
        logger.error("")
    logger.error("=" * 80)


def format_manifolds() -> str:
    """Registry dump: name, parameter schema and description."""
    lines = [f"{'Manifold':<22} {'Parameters':<32} Description", "-" * 100]
    for spec in list_manifolds():
        schema = ", ".join(p.schema() for p in spec.params) or "-"
        lines.append(f"{spec.name:<22} {schema:<32} {spec.description}")
        for p in spec.params:
            lines.append(f"{'':<24}{p.name}: {p.description}")
    return "\n".join(lines)


def format_identities() -> str:
    """IdentityId <-> statement table."""
    lines = [f"{'Identity':<20} {'Kind':<10} Statement", "-" * 100]
    for identity, kind, statement in identity_table():
        lines.append(f"{identity:<20} {kind:<10} {statement}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    default_points = config.get("run.defaults.points", 25)
    default_seed = config.get("run.defaults.seed", 1)
    default_tol = config.get_float("run.defaults.tol", 1e-8)
    default_report = config.get("run.defaults.report", "data/reports/report.jsonl")

    parser = argparse.ArgumentParser(
        description="Verify Einstein-connection torsion formulas and identities pointwise",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Configuration:
  Defaults shown above come from config/*.yaml files:
    - config/run_config.yaml      → --suite, --points, --seed, --tol, --report
    - config/catalog_config.yaml  → the default --manifold list
    - config/numerics_config.yaml → thresholds and tolerances

  TORSION_LAB_THREADS caps the worker threads, TORSION_LAB_LOG_DIR moves run.log.

Suites:
{chr(10).join(f"  {name:<20} {cls.description}" for name, cls in SUITES.items())}

Exit codes:
  0  every check passed or was skipped
  1  at least one check failed
  2  usage or configuration error

Examples:
  # Default acceptance run (all suites, all default manifolds)
  python main.py

  # Hermitian theorem on the rotated complex structure, 100 points
  python main.py --suite hermitian-theorem --manifold hermitian_rotated_J --points 100

  # Weighted product with custom weights
  python main.py --suite weak-theorem --manifold weighted_product:lambdas=2/3 --seed 7

  # What can be selected
  python main.py --list-manifolds
  python main.py --list-identities
        """,
    )

    parser.add_argument(
        "--suite",
        action="append",
        dest="suites",
        metavar="NAME",
        help="Suite to run (repeatable; default: all suites in run_config.yaml)",
    )
    parser.add_argument(
        "--manifold",
        action="append",
        dest="manifolds",
        metavar="NAME[:k=v,...]",
        help="Manifold to visit, tuple values separated by '/' (repeatable)",
    )
    parser.add_argument(
        "--points",
        type=int,
        default=default_points,
        help=f"Sampled points per manifold (default: {default_points})",
    )
    parser.add_argument(
        "--seed", type=int, default=default_seed, help=f"Sampling seed (default: {default_seed})"
    )
    parser.add_argument(
        "--tol", type=float, default=default_tol, help=f"Pass threshold (default: {default_tol:g})"
    )
    parser.add_argument(
        "--report",
        type=Path,
        default=Path(default_report),
        help=f"JSON-Lines report path (default: {default_report})",
    )
    parser.add_argument("--no-report", action="store_true", help="Do not write a report")
    parser.add_argument(
        "--list-manifolds", action="store_true", help="List the catalog and exit"
    )
    parser.add_argument(
        "--list-identities", action="store_true", help="List identity ids and statements and exit"
    )
    parser.add_argument(
        "--quiet", action="store_true", help="No console logging (run.log is still written)"
    )
    return parser


def _manifold_requests(raw: list[str] | None) -> tuple[ManifoldRequest, ...] | None:
    if not raw:
        return None
    requests = []
    for text in raw:
        name, params = parse_manifold_arg(text)
        requests.append(ManifoldRequest(name, dict(params)))
    return tuple(requests)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.list_manifolds:
        print(format_manifolds())
        return 0
    if args.list_identities:
        print(format_identities())
        return 0

    setup_run_logging(verbose=not args.quiet)

    try:
        run_config = RunConfig.from_defaults(
            suites=tuple(args.suites) if args.suites else None,
            manifolds=_manifold_requests(args.manifolds),
            points=args.points,
            seed=args.seed,
            tol=args.tol,
            report_path=None if args.no_report else args.report,
        )
        return run(run_config)
    except UnknownManifoldError as e:
        _print_error_box("UNKNOWN MANIFOLD", str(e), e.get_user_guidance())
    except UnknownSuiteError as e:
        _print_error_box("UNKNOWN SUITE", str(e), e.get_user_guidance())
    except InvalidParamsError as e:
        _print_error_box(
            "INVALID MANIFOLD PARAMETERS", str(e), "Run with --list-manifolds to see the schemas."
        )
    except ConfigurationError as e:
        _print_error_box("CONFIGURATION ERROR", str(e))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
