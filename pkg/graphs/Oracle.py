"""
Independent values of F_{g,n}, N_{g,n} and the Euler characteristic computed
directly from the enumerated ribbon graphs.
"""

from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.LaurentPoly import LaurentPoly
from graphs.Enumerator import DEFAULT_GUARD_E, GraphRecord, enumerate_ribbon_graphs
from lattice.LatticeCount import count_lattice_points


def _records(g: int, n: int, records: Optional[List[GraphRecord]], guard_e: int) -> List[GraphRecord]:
    return records if records is not None else enumerate_ribbon_graphs(g, n, guard_e=guard_e)


def _edge_faces(matrix: Sequence[Sequence[int]]) -> List[Tuple[int, int]]:
    """For each edge column, the (slot, slot) pair of faces it bounds."""
    faces = []
    for col in range(len(matrix[0])):
        slots = [i for i in range(len(matrix)) for _ in range(matrix[i][col])]
        faces.append((slots[0], slots[1]))
    return faces


def oracle_F(g: int, n: int, records: Optional[List[GraphRecord]] = None,
             guard_e: int = DEFAULT_GUARD_E) -> LaurentPoly:
    """
    Sum over graphs of (-1)^e / |Aut| times the product of z(t_i, t_j) over edges.

    Every graph's numerator is lifted to the common denominator
    prod_{i<j} (t_i + t_j)^m_ij, and the sum is then divided exactly.
    """
    records = _records(g, n, records, guard_e)
    one = LaurentPoly.one(n)
    sums = {(i, j): LaurentPoly.variable(n, i) + LaurentPoly.variable(n, j)
            for i, j in combinations(range(n), 2)}

    graph_terms = []
    multiplicity: Dict[Tuple[int, int], int] = {pair: 0 for pair in sums}
    for record in records:
        numerator = one
        coeff = Fraction((-1) ** record.num_edges, record.aut_order)
        pairs: Dict[Tuple[int, int], int] = {}
        for i, j in _edge_faces(record.matrix):
            numerator = numerator * (LaurentPoly.variable(n, i) + 1) * (LaurentPoly.variable(n, j) + 1)
            if i == j:
                numerator = numerator * LaurentPoly.variable(n, i, -1)
                coeff /= 4
            else:
                key = (min(i, j), max(i, j))
                pairs[key] = pairs.get(key, 0) + 1
                coeff /= 2
        for key, count in pairs.items():
            multiplicity[key] = max(multiplicity[key], count)
        graph_terms.append((numerator * coeff, pairs))

    total = LaurentPoly.zero(n)
    for numerator, pairs in graph_terms:
        for key, top in multiplicity.items():
            missing = top - pairs.get(key, 0)
            if missing:
                numerator = numerator * (sums[key] ** missing)
        total = total + numerator

    for (i, j), top in multiplicity.items():
        for _ in range(top):
            total = total.exact_divide_sum(i, j)
    return total


def oracle_N(g: int, n: int, p: Sequence[int], records: Optional[List[GraphRecord]] = None,
             guard_e: int = DEFAULT_GUARD_E) -> Fraction:
    """Sum over graphs of #{x > 0 : A x = p} / |Aut|."""
    if sum(p) % 2:
        return Fraction(0)
    records = _records(g, n, records, guard_e)
    return sum((Fraction(count_lattice_points(r.matrix, p), r.aut_order) for r in records), Fraction(0))


def _compositions(cols: int, budget: int):
    """Positive integer vectors of length cols with sum <= budget."""
    if cols == 0:
        yield ()
        return
    for x in range(1, budget - (cols - 1) + 1):
        for tail in _compositions(cols - 1, budget - x):
            yield (x,) + tail


def oracle_N_table(g: int, n: int, max_sum: int, records: Optional[List[GraphRecord]] = None,
                   guard_e: int = DEFAULT_GUARD_E) -> Dict[Tuple[int, ...], Fraction]:
    """
    N_{g,n}(p) for every p with sum(p) <= max_sum and a nonzero value, built by
    pushing every edge-length vector with sum(x) <= max_sum / 2 through A.
    """
    records = _records(g, n, records, guard_e)
    table: Dict[Tuple[int, ...], Fraction] = {}
    for record in records:
        weight = Fraction(1, record.aut_order)
        matrix = record.matrix
        for x in _compositions(len(matrix[0]), max_sum // 2):
            p = tuple(sum(a * xi for a, xi in zip(row, x)) for row in matrix)
            table[p] = table.get(p, Fraction(0)) + weight
    return table


def oracle_edge_profile(g: int, n: int, records: Optional[List[GraphRecord]] = None,
                        guard_e: int = DEFAULT_GUARD_E) -> Dict[int, Fraction]:
    """{e: sum over graphs with e edges of (-1)^e / |Aut|}; the diagonal z-coefficients."""
    records = _records(g, n, records, guard_e)
    profile: Dict[int, Fraction] = {}
    for record in records:
        e = record.num_edges
        profile[e] = profile.get(e, Fraction(0)) + Fraction((-1) ** e, record.aut_order)
    return {e: c for e, c in sorted(profile.items()) if c}


def oracle_euler(g: int, n: int, records: Optional[List[GraphRecord]] = None,
                 guard_e: int = DEFAULT_GUARD_E) -> Fraction:
    """chi(RG_{g,n}) as the alternating Aut-weighted graph count."""
    return sum(oracle_edge_profile(g, n, records, guard_e).values(), Fraction(0))
