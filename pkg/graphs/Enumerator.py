"""
Exhaustive enumeration of face-labelled ribbon graphs of type (g, n) with
every vertex of degree at least 3.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Tuple

from graphs.RibbonGraph import Code, RibbonGraph
from recursion.Partitions import level, require_stable

DEFAULT_GUARD_E = 6


class EnumerationGuardError(RuntimeError):
    """The requested type needs more edges than the enumeration guard allows."""


@dataclass(frozen=True)
class GraphRecord:
    graph: RibbonGraph
    aut_order: int
    matrix: Tuple[Tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges()

    def dump(self) -> str:
        return self.graph.dump(self.aut_order)


def edge_range(g: int, n: int) -> range:
    """Edge counts from one vertex (2g - 1 + n) up to trivalent (3(2g - 2 + n))."""
    return range(2 * g - 1 + n, 3 * level(g, n) + 1)


def degree_partitions(total: int, parts: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of `parts` integers >= 3 summing to total."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(largest, total - 3 * (parts - 1)), 2, -1):
        for tail in degree_partitions(total - first, parts - 1, first):
            yield (first,) + tail


def vertex_rotation(degrees: Tuple[int, ...]) -> Tuple[int, ...]:
    """sigma with consecutive half-edges around each vertex."""
    sigma = []
    start = 0
    for d in degrees:
        sigma.extend(start + (k + 1) % d for k in range(d))
        start += d
    return tuple(sigma)


def involutions(size: int) -> Iterator[Tuple[int, ...]]:
    """All fixed-point-free involutions of range(size)."""
    alpha = [-1] * size

    def extend():
        try:
            first = alpha.index(-1)
        except ValueError:
            yield tuple(alpha)
            return
        for partner in range(first + 1, size):
            if alpha[partner] == -1:
                alpha[first], alpha[partner] = partner, first
                yield from extend()
                alpha[first] = alpha[partner] = -1

    yield from extend()


def _unlabelled_classes(degrees: Tuple[int, ...], g: int, n: int) -> Dict[Code, RibbonGraph]:
    sigma = vertex_rotation(degrees)
    classes: Dict[Code, RibbonGraph] = {}
    for alpha in involutions(len(sigma)):
        graph = RibbonGraph(sigma, alpha)
        if len(graph.faces()) != n or not graph.is_connected():
            continue
        code, _ = graph.canonical_form()
        if code not in classes:
            classes[code] = graph
    return classes


def _labelled_records(graph: RibbonGraph) -> Dict[Code, GraphRecord]:
    n = len(graph.faces())
    records: Dict[Code, GraphRecord] = {}
    for labels in permutations(range(1, n + 1)):
        labelled = graph.with_face_labels(labels)
        code, aut = labelled.canonical_form()
        if code in records:
            continue
        canonical = labelled.canonical_graph()
        matrix = tuple(tuple(row) for row in canonical.incidence_matrix())
        records[code] = GraphRecord(canonical, aut, matrix)
    return records


def _enumerate_partition(degrees: Tuple[int, ...], g: int, n: int) -> Dict[Code, GraphRecord]:
    records: Dict[Code, GraphRecord] = {}
    for graph in _unlabelled_classes(degrees, g, n).values():
        records.update(_labelled_records(graph))
    return records


def enumerate_ribbon_graphs(g: int, n: int, guard_e: int = DEFAULT_GUARD_E,
                            workers: Optional[int] = None) -> List[GraphRecord]:
    """
    Every face-labelled ribbon graph of type (g, n), one per isomorphism class,
    ordered by edge count and then by canonical code.

    Raises:
        EnumerationGuardError: when 3(2g - 2 + n) exceeds guard_e
    """
    require_stable(g, n)
    max_edges = 3 * level(g, n)
    if max_edges > guard_e:
        raise EnumerationGuardError(
            f"type ({g}, {n}) needs up to {max_edges} edges; guard allows {guard_e}")

    tasks = []
    for e in edge_range(g, n):
        v = e - n + 2 - 2 * g
        if v < 1:
            continue
        for degrees in degree_partitions(2 * e, v):
            tasks.append((e, degrees))

    if workers is None:
        workers = min(len(tasks), os.cpu_count() or 1) or 1

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda task: _enumerate_partition(task[1], g, n), tasks))
    else:
        results = [_enumerate_partition(degrees, g, n) for _, degrees in tasks]

    merged: Dict[Tuple[int, Code], GraphRecord] = {}
    for (e, _), found in zip(tasks, results):
        for code, record in found.items():
            merged[(e, code)] = record
    return [merged[key] for key in sorted(merged)]
