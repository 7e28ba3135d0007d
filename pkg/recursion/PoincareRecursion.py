"""
Integral topological recursion for the Poincare polynomials F_{g,n}.

F_{g,n}(t_1, ...) = -(1/16) * integral from -1 to t_1 of the bracket assembled
from F_{g,n-1}, F_{g-1,n+1} and products over stable partitions.
"""

import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from algebra.LaurentPoly import LaurentPoly
from analysis.Invariants import first_odd_exponent, run_invariant_suite
from analysis.Report import VerificationReport
from recursion.InitialValues import INITIAL_VALUES
from recursion.Partitions import is_stable, level, require_stable, stable_partitions

Key = Tuple[int, int]


class MissingDependencyError(RuntimeError):
    """A lower-order F needed by the recursion is not in the table."""


class InvariantError(RuntimeError):
    """A freshly computed polynomial failed the structural invariant suite."""

    def __init__(self, message: str, report: Optional[VerificationReport] = None):
        super().__init__(message)
        self.report = report


def kernel_cubic(nvars: int, slot: int) -> LaurentPoly:
    """(t^2 - 1)^3 / t^2 = t^4 - 3t^2 + 3 - t^-2 in the given slot."""
    return LaurentPoly.univariate({4: 1, 2: -3, 0: 3, -2: -1}, nvars, slot)


def kernel_square(nvars: int, slot: int) -> LaurentPoly:
    """(t^2 - 1)^2 / t^2 = t^2 - 2 + t^-2 in the given slot."""
    return LaurentPoly.univariate({2: 1, 0: -2, -2: 1}, nvars, slot)


def dependencies(g: int, n: int) -> List[Key]:
    """Direct lower-order inputs of the recursion for (g, n)."""
    if (g, n) in INITIAL_VALUES:
        return []
    deps: Set[Key] = set()
    if n >= 2 and is_stable(g, n - 1):
        deps.add((g, n - 1))
    if g >= 1 and is_stable(g - 1, n + 1):
        deps.add((g - 1, n + 1))
    for part in stable_partitions(g, range(1, n)):
        deps.add((part.g1, len(part.I) + 1))
        deps.add((part.g2, len(part.J) + 1))
    return sorted(deps)


def evaluation_order(keys) -> List[Key]:
    return sorted(set(keys), key=lambda k: (level(*k), k[0]))


class PoincareRecursion:
    """
    Memoized evaluator for F_{g,n}.

    Args:
        store: optional PolynomialStore used to load and persist results
        workers: thread count for keys on the same level (1 = sequential)
        verbose: print progress lines to stderr
        log_file: optional path; one record is appended per computed (g, n)
    """

    def __init__(self, store=None, workers: int = 1, verbose: bool = False,
                 log_file: Optional[str] = None):
        self.store = store
        self.workers = max(1, workers)
        self.verbose = verbose
        self.log_file = log_file
        self._table: Dict[Key, LaurentPoly] = {}
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # Table access
    # ------------------------------------------------------------------

    def cached(self, g: int, n: int) -> Optional[LaurentPoly]:
        with self._lock:
            return self._table.get((g, n))

    def table(self) -> Dict[Key, LaurentPoly]:
        with self._lock:
            return dict(self._table)

    def _require(self, g: int, n: int) -> LaurentPoly:
        poly = self.cached(g, n)
        if poly is None:
            raise MissingDependencyError(f"F_{{{g},{n}}} is required but has not been computed")
        return poly

    def _admit(self, g: int, n: int, poly: LaurentPoly):
        with self._lock:
            self._table[(g, n)] = poly

    # ------------------------------------------------------------------
    # Integrand
    # ------------------------------------------------------------------

    def _edge_sum(self, g: int, n: int) -> LaurentPoly:
        """
        Both j-sums of the bracket. Slot 0 is the integration variable and
        slot j (1 <= j < n) carries t_{j+1}.
        """
        result = LaurentPoly.zero(n)
        if n < 2 or not is_stable(g, n - 1):
            return result
        lower = self._require(g, n - 1)
        # Representative j = 1; the others follow by symmetry of F_{g,n-1}.
        slot_map = {0: 0}
        slot_map.update({k: k + 1 for k in range(1, n - 1)})
        placed = lower.relabel(slot_map, n)
        derivative = placed.diff(0)

        cubic = kernel_cubic(n, 0) * derivative
        block = cubic.divided_difference_even(0, 1) * LaurentPoly.variable(n, 1)
        block = block + kernel_square(n, 0) * derivative

        for j in range(1, n):
            if j == 1:
                result = result + block
            else:
                swap = list(range(n))
                swap[1], swap[j] = j, 1
                result = result + block.permute(swap)
        return result

    def _pair_sum(self, g: int, n: int) -> LaurentPoly:
        """
        d^2/du1 du2 of F_{g-1,n+1} plus the stable partition products, before
        the collapse u1 = u2 = t. Frame: u1 = slot 0, t_2..t_n = slots 1..n-1, u2 = slot n.
        """
        frame = n + 1
        u1, u2 = 0, n
        total = LaurentPoly.zero(frame)

        if g >= 1 and is_stable(g - 1, n + 1):
            higher = self._require(g - 1, n + 1)
            slot_map = {0: u1, 1: u2}
            slot_map.update({k: k - 1 for k in range(2, n + 1)})
            total = total + higher.relabel(slot_map, frame).diff(u1).diff(u2)

        rest = list(range(1, n))
        products: Dict[Tuple[int, int], LaurentPoly] = {}
        for part in stable_partitions(g, rest):
            shape = (part.g1, len(part.I))
            if shape not in products:
                products[shape] = self._partition_product(part.g1, part.g2, len(part.I), rest, frame)
            I0 = rest[:len(part.I)]
            J0 = rest[len(part.I):]
            perm = list(range(frame))
            for src, dst in zip(I0 + J0, list(part.I) + list(part.J)):
                perm[src] = dst
            total = total + products[shape].permute(perm)
        return total

    def _partition_product(self, g1: int, g2: int, size: int, rest: List[int], frame: int) -> LaurentPoly:
        I0, J0 = rest[:size], rest[size:]
        first = self._require(g1, size + 1)
        second = self._require(g2, len(J0) + 1)
        map1 = {0: 0}
        map1.update({k + 1: slot for k, slot in enumerate(I0)})
        map2 = {0: frame - 1}
        map2.update({k + 1: slot for k, slot in enumerate(J0)})
        return first.relabel(map1, frame).diff(0) * second.relabel(map2, frame).diff(frame - 1)

    def assemble_integrand(self, g: int, n: int) -> LaurentPoly:
        """The full bracket of the recursion as a Laurent polynomial in n slots."""
        require_stable(g, n)
        integrand = self._edge_sum(g, n)
        pair = self._pair_sum(g, n)
        if pair:
            collapsed = pair.merge_slots(0, n)
            integrand = integrand + kernel_cubic(n, 0) * collapsed * Fraction(1, 2)
        return integrand

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def _integrate(self, g: int, n: int) -> LaurentPoly:
        integrand = self.assemble_integrand(g, n)
        odd = first_odd_exponent(integrand, 0)
        if odd is not None:
            raise InvariantError(
                f"Integrand for F_{{{g},{n}}} is not even in the integration variable: monomial {list(odd)}")
        antiderivative = integrand.antiderivative(0)
        at_lower = antiderivative.eval_partial(0, -1)
        embedded = at_lower.relabel({k: k + 1 for k in range(n - 1)}, n)
        return (antiderivative - embedded) * Fraction(-1, 16)

    def _evaluate(self, g: int, n: int) -> LaurentPoly:
        existing = self.cached(g, n)
        if existing is not None:
            return existing

        start = time.time()
        source = "computed"
        poly = self.store.load(g, n) if self.store is not None else None
        if poly is not None:
            source = "cache"
        else:
            if (g, n) in INITIAL_VALUES:
                poly = INITIAL_VALUES[(g, n)]()
            else:
                poly = self._integrate(g, n)
            report = run_invariant_suite(g, n, poly)
            if not report.passed:
                failed = ", ".join(f"{c.check}: {c.detail}" for c in report.failures())
                raise InvariantError(f"F_{{{g},{n}}} failed invariant checks ({failed})", report)
            if self.store is not None:
                self.store.save(g, n, poly)

        elapsed = time.time() - start
        self._admit(g, n, poly)
        if self.verbose:
            print(f"🧮 F_{{{g},{n}}}: {len(poly)} terms ({source}, {elapsed:.2f}s)", file=sys.stderr)
        if self.log_file:
            self._log(g, n, poly, source, elapsed)
        return poly

    def compute(self, g: int, n: int) -> LaurentPoly:
        """Compute F_{g,n}, evaluating every missing dependency level by level."""
        require_stable(g, n)
        existing = self.cached(g, n)
        if existing is not None:
            return existing

        closure: Set[Key] = set()
        stack = [(g, n)]
        while stack:
            key = stack.pop()
            if key in closure or self.cached(*key) is not None:
                continue
            closure.add(key)
            stack.extend(dependencies(*key))

        levels: Dict[int, List[Key]] = {}
        for key in evaluation_order(closure):
            levels.setdefault(level(*key), []).append(key)

        for lvl in sorted(levels):
            keys = levels[lvl]
            if self.workers > 1 and len(keys) > 1:
                with ThreadPoolExecutor(max_workers=min(self.workers, len(keys))) as executor:
                    futures = {executor.submit(self._evaluate, *key): key for key in keys}
                    for future in as_completed(futures):
                        future.result()
            else:
                for key in keys:
                    self._evaluate(*key)
        return self._require(g, n)

    def compute_up_to(self, max_level: int) -> Dict[Key, LaurentPoly]:
        """Every stable F_{g,n} with 2g - 2 + n <= max_level."""
        keys = [(g, n) for g in range(max_level // 2 + 2) for n in range(1, max_level + 3)
                if is_stable(g, n) and level(g, n) <= max_level]
        for key in evaluation_order(keys):
            self.compute(*key)
        return {key: self._require(*key) for key in evaluation_order(keys)}

    def _log(self, g: int, n: int, poly: LaurentPoly, source: str, elapsed: float):
        with open(self.log_file, 'a', encoding='utf-8') as f:
            timestamp = datetime.now().isoformat()
            f.write(f"\n{'='*80}\n")
            f.write(f"[{timestamp}] F_{{{g},{n}}} level {level(g, n)}\n")
            f.write(f"{'='*80}\n")
            f.write(f"SOURCE: {source}\n")
            f.write(f"TERMS: {len(poly)}\n")
            f.write(f"DEGREE: [{poly.min_degree()}, {poly.max_degree()}]\n")
            f.write(f"ELAPSED: {elapsed:.3f}s\n")
            f.write(f"{'='*80}\n\n")


def compute_F(g: int, n: int, recursion: Optional[PoincareRecursion] = None) -> LaurentPoly:
    return (recursion or PoincareRecursion()).compute(g, n)
