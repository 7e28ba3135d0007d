#!/usr/bin/env python3
"""
Command-line interface for the Poincare polynomial workbench.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
3 internal invariant failure, 4 enumeration guard exceeded.
"""

import argparse
import json
import sys

from pydantic import ValidationError

from algebra.LaurentPoly import (
    LogTermError, NonLaurentError, OddExponentError, PoleError, SlotMapError, VariableCountError, format_rational,
)
from analysis.Intersections import InconsistentOrbitError
from graphs.Enumerator import EnumerationGuardError, enumerate_ribbon_graphs
from lattice.LatticeCount import PerimeterError, tsv_rows
from recursion.Partitions import UnstableTypeError
from recursion.PoincareRecursion import InvariantError, MissingDependencyError
from workbench.config import RunConfig
from workbench.database import ReportDatabase
from workbench.formatting import render
from workbench.runner import VerificationRunner

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3
EXIT_GUARD = 4

INTERNAL_ERRORS = (
    InvariantError, MissingDependencyError, LogTermError, OddExponentError,
    NonLaurentError, PoleError, InconsistentOrbitError, VariableCountError, SlotMapError,
)


def _runner(config: RunConfig) -> VerificationRunner:
    return VerificationRunner(
        cache_dir=config.cache_dir,
        db_path=config.db_path,
        guard_e=config.guard_e,
        workers=config.workers,
        verbose=config.verbose,
        log_file=config.log_file,
    )


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_compute_f(config: RunConfig) -> int:
    runner = _runner(config)
    poly = runner.recursion.compute(config.g, config.n)
    _emit(render(poly, config.output_format))
    return EXIT_OK


def cmd_compute_n(config: RunConfig) -> int:
    runner = _runner(config)
    if config.p is None and config.box is None:
        print("❌ compute-n needs --p or --box", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if config.p is not None:
        _emit(format_rational(runner.counter.compute(config.g, config.n, config.p)))
    else:
        entries = runner.counter.box(config.g, config.n, config.box)
        _emit("\n".join(tsv_rows(config.g, config.n, entries)))
    runner.save_lattice_cache()
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    runner = _runner(config)
    report = runner.run_suite(config.g, config.n, config.suite, config.truncation, config.max_sum)
    runner.save_lattice_cache()
    _emit(report.to_json())
    if not report.passed:
        print(f"❌ {len(report.failures())} check(s) failed for ({config.g},{config.n})", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_intersections(config: RunConfig) -> int:
    runner = _runner(config)
    table = runner.intersection_table(config.g, config.n)
    _emit("\n".join(table.tsv_rows(config.g, config.n)))
    return EXIT_OK


def cmd_graphs(config: RunConfig) -> int:
    records = enumerate_ribbon_graphs(config.g, config.n, guard_e=config.guard_e, workers=config.workers)
    _emit("\n".join(record.dump() for record in records))
    if config.verbose:
        print(f"📊 {len(records)} ribbon graphs of type ({config.g},{config.n})", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    runner = _runner(config)
    results = runner.sweep(config.max_level, config.suite, config.truncation, config.max_sum)
    runner.save_lattice_cache()
    summary = {f"{g},{n}": report.to_dict() for (g, n), report in results.items()}
    _emit(json.dumps(summary, indent=2, ensure_ascii=False))
    failed = [key for key, report in results.items() if not report.passed]
    if failed:
        print(f"❌ Failures in {', '.join(f'({g},{n})' for g, n in failed)}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    print(f"✓ {len(results)} types passed", file=sys.stderr)
    return EXIT_OK


def cmd_history(config: RunConfig) -> int:
    runs = ReportDatabase(config.db_path).recent_runs(config.limit)
    if not runs:
        print("No verification runs recorded yet.", file=sys.stderr)
        return EXIT_OK
    for run in runs:
        status = "pass" if run.passed else "fail"
        _emit(f"{run.id}\t{run.run_date[:19]}\t{run.g},{run.n}\t{run.suite}\t{status}")
    return EXIT_OK


def _add_type_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--g", type=int, required=True, help="Genus")
    parser.add_argument("--n", type=int, required=True, help="Number of faces / marked points")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Poincare polynomials of ribbon graph complexes")
    parser.add_argument("--cache-dir", help="Cache directory (env RGREC_CACHE_DIR, default .rgrec_cache)")
    parser.add_argument("--db", help="Verification history database (env RGREC_DB_PATH)")
    parser.add_argument("--guard-e", type=int, default=6, help="Maximum edge count for graph enumeration (default: 6)")
    parser.add_argument("--workers", type=int, default=1, help="Worker threads (default: 1)")
    parser.add_argument("--log-file", help="Append a record per computed polynomial to this file")
    parser.add_argument("--verbose", action="store_true", help="Print progress to stderr")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    f_parser = subparsers.add_parser("compute-f", help="Compute the Poincare polynomial F_{g,n}")
    _add_type_arguments(f_parser)
    f_parser.add_argument("--format", choices=["json", "latex", "pretty", "tsv"], default="json",
                          help="Output format (default: json)")
    f_parser.set_defaults(func=cmd_compute_f)

    n_parser = subparsers.add_parser("compute-n", help="Compute lattice counts N_{g,n}(p)")
    _add_type_arguments(n_parser)
    group = n_parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", help="Comma-separated perimeters, e.g. 2,2,2")
    group.add_argument("--box", type=int, help="Tabulate every p in [1, BOX]^n")
    n_parser.set_defaults(func=cmd_compute_n)

    verify_parser = subparsers.add_parser("verify", help="Run a verification suite")
    _add_type_arguments(verify_parser)
    verify_parser.add_argument("--suite", default="all",
                               choices=["all", "euler", "laplace", "oracle", "intersection", "invariants", "diagonal"],
                               help="Suite to run (default: all)")
    verify_parser.add_argument("--truncation", type=int, default=10, help="Laplace truncation order (default: 10)")
    verify_parser.add_argument("--max-sum", type=int, default=20, help="Oracle perimeter sum bound (default: 20)")
    verify_parser.set_defaults(func=cmd_verify)

    tau_parser = subparsers.add_parser("intersections", help="Print psi-class intersection numbers")
    _add_type_arguments(tau_parser)
    tau_parser.set_defaults(func=cmd_intersections)

    graphs_parser = subparsers.add_parser("graphs", help="Dump the enumerated ribbon graphs")
    _add_type_arguments(graphs_parser)
    graphs_parser.set_defaults(func=cmd_graphs)

    sweep_parser = subparsers.add_parser("sweep", help="Verify every stable type up to a level")
    sweep_parser.add_argument("--max-level", type=int, default=3, help="Largest 2g - 2 + n (default: 3)")
    sweep_parser.add_argument("--suite", default="all",
                              choices=["all", "euler", "laplace", "oracle", "intersection", "invariants", "diagonal"],
                              help="Suite to run (default: all)")
    sweep_parser.add_argument("--truncation", type=int, default=10, help="Laplace truncation order (default: 10)")
    sweep_parser.add_argument("--max-sum", type=int, default=20, help="Oracle perimeter sum bound (default: 20)")
    sweep_parser.set_defaults(func=cmd_sweep)

    history_parser = subparsers.add_parser("history", help="Show recent verification runs")
    history_parser.add_argument("--limit", type=int, default=10, help="Number of runs (default: 10)")
    history_parser.set_defaults(func=cmd_history)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INVALID_INPUT

    try:
        config = RunConfig.from_args(args)
    except ValidationError as e:
        for error in e.errors():
            print(f"❌ Invalid input: {error['msg']}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        return args.func(config)
    except (UnstableTypeError, PerimeterError) as e:
        print(f"❌ Invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except EnumerationGuardError as e:
        print(f"⚠️  Enumeration guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    except INTERNAL_ERRORS as e:
        print(f"💥 Internal invariant failure: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
