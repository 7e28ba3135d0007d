"""
Weighted counts N_{g,n}(p) of integral ribbon graphs with perimeters p.

Base cases come from lattice enumeration over the explicit (0,3) and (1,1)
graphs; everything else runs the integer recursion, divided by p_1.
"""

import json
import threading
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.LaurentPoly import format_rational, parse_rational
from recursion.Partitions import UnstableTypeError, is_stable, require_stable, stable_partitions

CountKey = Tuple[int, int, Tuple[int, ...]]
Matrix = Sequence[Sequence[int]]


class PerimeterError(ValueError):
    """Perimeter vector has a nonpositive entry or the wrong length."""


def heaviside(x: int) -> int:
    return 1 if x > 0 else 0


def count_lattice_points(matrix: Matrix, p: Sequence[int]) -> int:
    """Number of x in Z_{>0}^e with A x = p, by bounded depth-first search."""
    rows = len(matrix)
    if rows != len(p):
        raise PerimeterError(f"Matrix has {rows} rows but p has {len(p)} entries")
    cols = len(matrix[0]) if rows else 0
    # need[c][i]: smallest contribution of columns c.. to row i (every x >= 1)
    need = [[0] * rows for _ in range(cols + 1)]
    for c in range(cols - 1, -1, -1):
        for i in range(rows):
            need[c][i] = need[c + 1][i] + matrix[i][c]

    def search(c: int, remaining: List[int]) -> int:
        if c == cols:
            return 1 if not any(remaining) else 0
        upper = None
        for i in range(rows):
            a = matrix[i][c]
            if a:
                room = (remaining[i] - need[c + 1][i]) // a
                upper = room if upper is None else min(upper, room)
        if upper is None or upper < 1:
            return 0
        total = 0
        for x in range(1, upper + 1):
            total += search(c + 1, [r - matrix[i][c] * x for i, r in enumerate(remaining)])
        return total

    if any(r < n for r, n in zip(p, need[0])):
        return 0
    return search(0, list(p))


def _figure_eight(outer: int) -> List[List[int]]:
    rows = [[1, 0], [0, 1]]
    rows.insert(outer, [1, 1])
    return rows


def _dumbbell(outer: int) -> List[List[int]]:
    rows = [[1, 0, 0], [0, 1, 0]]
    rows.insert(outer, [1, 1, 2])
    return rows


# (incidence matrix, |Aut|) for every face-labelled graph of the two initial types.
GRAPHS_03: List[Tuple[List[List[int]], int]] = (
    [([[1, 1, 0], [1, 0, 1], [0, 1, 1]], 1)]
    + [(_figure_eight(k), 1) for k in range(3)]
    + [(_dumbbell(k), 1) for k in range(3)]
)
GRAPHS_11: List[Tuple[List[List[int]], int]] = [
    ([[2, 2, 2]], 6),
    ([[2, 2]], 4),
]


def _weighted_count(graphs, p: Sequence[int]) -> Fraction:
    return sum((Fraction(count_lattice_points(m, p), aut) for m, aut in graphs), Fraction(0))


def base_N03(p1: int, p2: int, p3: int) -> Fraction:
    return _weighted_count(GRAPHS_03, (p1, p2, p3))


def base_N11(p: int) -> Fraction:
    return _weighted_count(GRAPHS_11, (p,))


def canonical_key(g: int, n: int, p: Sequence[int]) -> CountKey:
    return (g, n, tuple(sorted(p)))


def format_key(key: CountKey) -> str:
    g, n, p = key
    return f"{g}:{n}:{','.join(str(x) for x in p)}"


def parse_key(text: str) -> CountKey:
    g, n, p = text.split(":")
    return canonical_key(int(g), int(n), [int(x) for x in p.split(",")])


class LatticeCounter:
    """Memoized evaluator of N_{g,n}(p); the memo is keyed on sorted p."""

    def __init__(self):
        self._memo: Dict[CountKey, Fraction] = {}
        self._lock = threading.Lock()

    def _lookup(self, key: CountKey) -> Optional[Fraction]:
        with self._lock:
            return self._memo.get(key)

    def _store(self, key: CountKey, value: Fraction):
        with self._lock:
            self._memo[key] = value

    def __len__(self) -> int:
        with self._lock:
            return len(self._memo)

    @staticmethod
    def _validate(g: int, n: int, p: Sequence[int]):
        require_stable(g, n)
        if len(p) != n:
            raise PerimeterError(f"Expected {n} perimeters, got {len(p)}")
        if any(x < 1 for x in p):
            raise PerimeterError(f"Perimeters must be positive integers, got {list(p)}")

    def _terms(self, g: int, n: int, p: Sequence[int], lead: int) -> Iterator[Tuple[Fraction, List[CountKey]]]:
        """
        Terms (coefficient, keys) of p_lead * N_{g,n}(p); each term contributes
        coefficient * product of N over keys. Terms with an odd-sum key vanish
        and are not yielded.
        """
        p1 = p[lead]
        others = [i for i in range(n) if i != lead]
        half = Fraction(1, 2)

        def keep(keys):
            return all(sum(k[2]) % 2 == 0 for k in keys)

        if n >= 2 and is_stable(g, n - 1):
            for j in others:
                pj = p[j]
                rest = [p[i] for i in others if i != j]
                ranges = [(p1 + pj, 1)]
                if p1 > pj:
                    ranges.append((p1 - pj, 1))
                if pj > p1:
                    ranges.append((pj - p1, -1))
                for bound, sign in ranges:
                    for q in range(1, bound):
                        key = canonical_key(g, n - 1, [q] + rest)
                        if keep([key]):
                            yield half * sign * q * (bound - q), [key]

        rest = [p[i] for i in others]
        partitions = stable_partitions(g, range(len(rest)))
        has_higher = g >= 1 and is_stable(g - 1, n + 1)
        if not partitions and not has_higher:
            return
        for q1 in range(1, p1):
            for q2 in range(1, p1 - q1):
                weight = half * q1 * q2 * (p1 - q1 - q2)
                if has_higher:
                    key = canonical_key(g - 1, n + 1, [q1, q2] + rest)
                    if keep([key]):
                        yield weight, [key]
                for part in partitions:
                    k1 = canonical_key(part.g1, len(part.I) + 1, [q1] + [rest[i] for i in part.I])
                    k2 = canonical_key(part.g2, len(part.J) + 1, [q2] + [rest[i] for i in part.J])
                    if keep([k1, k2]):
                        yield weight, [k1, k2]

    def _evaluate_terms(self, g: int, n: int, p: Sequence[int], lead: int) -> Fraction:
        total = Fraction(0)
        for coeff, keys in self._terms(g, n, p, lead):
            value = coeff
            for key in keys:
                value *= self._lookup(key)
                if not value:
                    break
            total += value
        return total / p[lead]

    def _direct(self, key: CountKey) -> Optional[Fraction]:
        """Value available without recursion, or None."""
        g, n, p = key
        if sum(p) % 2:
            return Fraction(0)
        if (g, n) == (0, 3):
            return base_N03(*p)
        if (g, n) == (1, 1):
            return base_N11(p[0])
        return None

    def _resolve(self, root: CountKey):
        """Fill the memo for root and every key it depends on, without recursion."""
        stack = [root]
        while stack:
            key = stack[-1]
            if self._lookup(key) is not None:
                stack.pop()
                continue
            direct = self._direct(key)
            if direct is not None:
                self._store(key, direct)
                stack.pop()
                continue
            g, n, p = key
            missing = []
            for _, keys in self._terms(g, n, p, 0):
                for sub in keys:
                    if self._lookup(sub) is None:
                        direct = self._direct(sub)
                        if direct is not None:
                            self._store(sub, direct)
                        else:
                            missing.append(sub)
            if missing:
                stack.extend(dict.fromkeys(missing))
                continue
            self._store(key, self._evaluate_terms(g, n, p, 0))
            stack.pop()

    def compute(self, g: int, n: int, p: Sequence[int]) -> Fraction:
        """N_{g,n}(p) for strictly positive p."""
        self._validate(g, n, p)
        key = canonical_key(g, n, p)
        value = self._lookup(key)
        if value is None:
            self._resolve(key)
            value = self._lookup(key)
        return value

    def recursion_value(self, g: int, n: int, p: Sequence[int], lead: int = 0) -> Fraction:
        """One recursion step with p[lead] in the role of p_1, for self-consistency checks."""
        self._validate(g, n, p)
        if (g, n) in ((0, 3), (1, 1)):
            raise UnstableTypeError(f"({g}, {n}) is a base case and has no recursion step")
        if not 0 <= lead < n:
            raise PerimeterError(f"Lead index {lead} outside 0..{n - 1}")
        if sum(p) % 2:
            return Fraction(0)
        for _, keys in self._terms(g, n, p, lead):
            for sub in keys:
                if self._lookup(sub) is None:
                    self._resolve(sub)
        return self._evaluate_terms(g, n, p, lead)

    def box(self, g: int, n: int, bound: int) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """N_{g,n}(p) for every p in [1, bound]^n, in lexicographic order."""
        if bound < 1:
            raise PerimeterError(f"Box bound must be >= 1, got {bound}")
        return [(p, self.compute(g, n, p)) for p in product(range(1, bound + 1), repeat=n)]

    # ------------------------------------------------------------------
    # Persistence
    # ------------------------------------------------------------------

    def to_json(self) -> str:
        with self._lock:
            items = sorted(self._memo.items())
        return json.dumps(
            [{"key": format_key(k), "value": format_rational(v)} for k, v in items], indent=1)

    def load_json(self, text: str) -> int:
        """Merge a cached table; returns the number of entries read."""
        entries = json.loads(text)
        for entry in entries:
            self._store(parse_key(entry["key"]), parse_rational(entry["value"]))
        return len(entries)


def tsv_rows(g: int, n: int, entries) -> List[str]:
    """Rows 'g n p_1 ... p_n num/den' (tab separated)."""
    return ["\t".join([str(g), str(n)] + [str(x) for x in p] + [format_rational(value)]) for p, value in entries]


def compute_N(g: int, n: int, p: Sequence[int], counter: Optional[LatticeCounter] = None) -> Fraction:
    return (counter or LatticeCounter()).compute(g, n, p)
