"""
Verification runner: wires the recursion, the lattice counter, the graph
oracle and the analysis checks together and records every run.
"""

import os
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, Iterator, Optional, Tuple

from analysis.Diagonal import verify_diagonal
from analysis.EulerCharacteristic import euler_char_HZ, euler_char_zeta_form, ribbon_graph_euler_char, verify_euler
from analysis.Intersections import IntersectionTable, extract_intersection_numbers, string_dilaton_check
from analysis.Invariants import run_invariant_suite
from analysis.Laplace import verify_laplace
from analysis.Report import CheckResult, VerificationReport
from graphs.Enumerator import EnumerationGuardError, enumerate_ribbon_graphs
from graphs.Oracle import oracle_edge_profile, oracle_euler, oracle_F, oracle_N_table
from lattice.LatticeCount import LatticeCounter
from recursion.Partitions import is_stable, level
from recursion.PoincareRecursion import PoincareRecursion, evaluation_order
from recursion.PolynomialStore import PolynomialStore
from workbench.database import ReportDatabase

SUITES = ["invariants", "euler", "laplace", "oracle", "intersection", "diagonal"]

# Coefficient budget for the Laplace box when it runs as part of "all".
LAPLACE_BOX_LIMIT = 20000


def laplace_order(n: int, truncation: int) -> int:
    """Largest order <= truncation whose box (order + 1)^n fits LAPLACE_BOX_LIMIT."""
    order = truncation
    while order > 1 and (order + 1) ** n > LAPLACE_BOX_LIMIT:
        order -= 1
    return order


def positive_vectors(n: int, max_sum: int) -> Iterator[Tuple[int, ...]]:
    """Vectors of n positive integers with sum <= max_sum, in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, max_sum - (n - 1) + 1):
        for tail in positive_vectors(n - 1, max_sum - first):
            yield (first,) + tail


class VerificationRunner:
    """Runs verification suites against shared, cached engines."""

    def __init__(self, cache_dir: str, db_path: Optional[str] = None, guard_e: int = 6,
                 workers: int = 1, verbose: bool = False, log_file: Optional[str] = None):
        self.cache_dir = cache_dir
        self.guard_e = guard_e
        self.workers = workers
        self.verbose = verbose
        self.store = PolynomialStore(os.path.join(cache_dir, "polynomials"), verbose=verbose)
        self.recursion = PoincareRecursion(store=self.store, workers=workers, verbose=verbose, log_file=log_file)
        self.counter = LatticeCounter()
        self.lattice_path = os.path.join(cache_dir, "lattice.json")
        self._load_lattice_cache()
        self.db = ReportDatabase(db_path) if db_path else None

    def _load_lattice_cache(self):
        if not os.path.exists(self.lattice_path):
            return
        try:
            with open(self.lattice_path, 'r', encoding='utf-8') as f:
                count = self.counter.load_json(f.read())
            if self.verbose:
                print(f"✓ Loaded {count} lattice counts from {self.lattice_path}", file=sys.stderr)
        except (OSError, ValueError, KeyError) as e:
            print(f"⚠️  Ignoring unreadable lattice cache {self.lattice_path}: {e}", file=sys.stderr)

    def save_lattice_cache(self):
        os.makedirs(self.cache_dir, exist_ok=True)
        with open(self.lattice_path, 'w', encoding='utf-8') as f:
            f.write(self.counter.to_json())
            f.write("\n")

    # ------------------------------------------------------------------
    # Individual suites
    # ------------------------------------------------------------------

    def check_invariants(self, g: int, n: int) -> VerificationReport:
        return run_invariant_suite(g, n, self.recursion.compute(g, n))

    def check_euler(self, g: int, n: int) -> VerificationReport:
        report = VerificationReport()
        report.add(verify_euler(g, n, self.recursion.compute(g, n)))
        if g >= 1:
            bernoulli_form, zeta_form = euler_char_HZ(g, n), euler_char_zeta_form(g, n)
            report.add(CheckResult.outcome(
                "euler_zeta", g, n, bernoulli_form == zeta_form,
                f"Bernoulli form {bernoulli_form}, zeta form {zeta_form}"))
        return report

    def check_laplace(self, g: int, n: int, truncation: int) -> VerificationReport:
        return VerificationReport().add(verify_laplace(g, n, truncation, self.recursion, self.counter))

    def check_oracle(self, g: int, n: int, max_sum: int) -> VerificationReport:
        """Raises EnumerationGuardError when the type is beyond the guard."""
        records = enumerate_ribbon_graphs(g, n, guard_e=self.guard_e, workers=self.workers)
        poly = self.recursion.compute(g, n)
        report = VerificationReport()

        from_graphs = oracle_F(g, n, records)
        if from_graphs == poly:
            report.add(CheckResult.outcome("oracle_F", g, n, True, f"{len(records)} graphs, {len(poly)} terms agree"))
        else:
            exps, coeff = next(iter(from_graphs - poly))
            report.add(CheckResult.outcome("oracle_F", g, n, False, f"difference {coeff} at {list(exps)}"))

        table = oracle_N_table(g, n, max_sum, records)
        mismatch = None
        compared = 0
        for p in positive_vectors(n, max_sum):
            expected = table.get(p, 0)
            actual = self.counter.compute(g, n, p)
            compared += 1
            if actual != expected:
                mismatch = f"N{list(p)} = {actual}, graphs give {expected}"
                break
        report.add(CheckResult.outcome(
            "oracle_N", g, n, mismatch is None, mismatch or f"{compared} perimeter vectors with sum <= {max_sum} agree"))

        chi = oracle_euler(g, n, records)
        expected = ribbon_graph_euler_char(g, n)
        report.add(CheckResult.outcome("oracle_euler", g, n, chi == expected, f"graphs give {chi}, expected {expected}"))
        report.add(verify_diagonal(g, n, poly, oracle_edge_profile(g, n, records)))
        return report

    def intersection_table(self, g: int, n: int) -> IntersectionTable:
        """Intersection numbers of (g, n) together with those of (g, n - 1) when stable."""
        table = extract_intersection_numbers(g, n, self.recursion.compute(g, n))
        if is_stable(g, n - 1):
            table.merge(extract_intersection_numbers(g, n - 1, self.recursion.compute(g, n - 1)))
        return table

    def check_intersections(self, g: int, n: int) -> VerificationReport:
        report = string_dilaton_check(self.intersection_table(g, n))
        report.checks = [c for c in report.checks if c.gn == f"{g},{n}"]
        return report

    def check_diagonal(self, g: int, n: int) -> VerificationReport:
        return VerificationReport().add(verify_diagonal(g, n, self.recursion.compute(g, n)))

    # ------------------------------------------------------------------
    # Dispatch
    # ------------------------------------------------------------------

    def run_suite(self, g: int, n: int, suite: str = "all", truncation: int = 10,
                  max_sum: int = 20, record: bool = True) -> VerificationReport:
        """
        Run one suite (or all of them) and record the result.

        With suite 'all' an oracle beyond the guard is reported as skipped; an
        explicit 'oracle' suite lets EnumerationGuardError propagate. A check
        already reported by an earlier suite is not repeated.
        """
        self.recursion.compute(g, n)
        selected = SUITES if suite == "all" else [suite]
        report = VerificationReport()
        for name in selected:
            if name == "invariants":
                report.extend_new(self.check_invariants(g, n))
            elif name == "euler":
                report.extend_new(self.check_euler(g, n))
            elif name == "laplace":
                order = truncation if suite == "laplace" else laplace_order(n, truncation)
                report.extend_new(self.check_laplace(g, n, order))
            elif name == "oracle":
                try:
                    report.extend_new(self.check_oracle(g, n, max_sum))
                except EnumerationGuardError as e:
                    if suite != "all":
                        raise
                    report.add(CheckResult(check="oracle", gn=f"{g},{n}", status="skip", detail=str(e)))
            elif name == "intersection":
                report.extend_new(self.check_intersections(g, n))
            elif name == "diagonal":
                report.extend_new(self.check_diagonal(g, n))
            else:
                raise ValueError(f"Unknown suite '{name}'")

        if self.verbose:
            status = "✓" if report.passed else "❌"
            print(f"{status} ({g},{n}) {suite}: {len(report.failures())} failed of {len(report.checks)}",
                  file=sys.stderr)
        if record and self.db is not None:
            self.db.save_run(g, n, suite, report.passed, report.to_json())
        return report

    def sweep(self, max_level: int, suite: str = "all", truncation: int = 10,
              max_sum: int = 20) -> Dict[Tuple[int, int], VerificationReport]:
        """Run a suite on every stable (g, n) with 2g - 2 + n <= max_level."""
        keys = evaluation_order(
            (g, n) for g in range(max_level // 2 + 2) for n in range(1, max_level + 3)
            if is_stable(g, n) and level(g, n) <= max_level)
        self.recursion.compute_up_to(max_level)
        if self.verbose:
            print(f"📊 Sweeping {len(keys)} types up to level {max_level}", file=sys.stderr)

        results: Dict[Tuple[int, int], VerificationReport] = {}
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                futures = {executor.submit(self.run_suite, g, n, suite, truncation, max_sum, False): (g, n)
                           for g, n in keys}
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
        else:
            for g, n in keys:
                results[(g, n)] = self.run_suite(g, n, suite, truncation, max_sum, False)

        if self.db is not None:
            for (g, n), report in sorted(results.items()):
                self.db.save_run(g, n, suite, report.passed, report.to_json())
        return {key: results[key] for key in keys}
