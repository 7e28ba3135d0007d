"""
Ribbon graphs as permutation pairs on half-edges.

sigma rotates the half-edges around each vertex, alpha pairs half-edges into
edges, and the faces are the cycles of phi = sigma o alpha (alpha first).
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

Code = Tuple[int, ...]


def permutation_cycles(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cycles of perm, each starting at its smallest element, ordered by that element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        h = start
        while not seen[h]:
            seen[h] = True
            cycle.append(h)
            h = perm[h]
        cycles.append(tuple(cycle))
    return cycles


def _format_cycle(cycle: Sequence[int]) -> str:
    return "(" + " ".join(str(h) for h in cycle) + ")"


@dataclass(frozen=True)
class RibbonGraph:
    sigma: Tuple[int, ...]
    alpha: Tuple[int, ...]
    face_labels: Optional[Tuple[int, ...]] = None

    @property
    def num_half_edges(self) -> int:
        return len(self.sigma)

    def phi(self) -> Tuple[int, ...]:
        return tuple(self.sigma[self.alpha[h]] for h in range(self.num_half_edges))

    def vertices(self) -> List[Tuple[int, ...]]:
        return permutation_cycles(self.sigma)

    def edges(self) -> List[Tuple[int, int]]:
        return [(h, self.alpha[h]) for h in range(self.num_half_edges) if h < self.alpha[h]]

    def faces(self) -> List[Tuple[int, ...]]:
        return permutation_cycles(self.phi())

    def num_edges(self) -> int:
        return self.num_half_edges // 2

    def genus(self) -> int:
        v, e, f = len(self.vertices()), self.num_edges(), len(self.faces())
        return (2 - v + e - f) // 2

    def is_connected(self) -> bool:
        size = self.num_half_edges
        if size == 0:
            return False
        seen = {0}
        queue = deque([0])
        while queue:
            h = queue.popleft()
            for nb in (self.sigma[h], self.alpha[h]):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == size

    def validate(self, g: Optional[int] = None, n: Optional[int] = None):
        """Raise ValueError unless this is a valid graph (of type (g, n) when given)."""
        size = self.num_half_edges
        if len(self.alpha) != size or sorted(self.sigma) != list(range(size)):
            raise ValueError("sigma must be a permutation of the half-edges")
        for h in range(size):
            if self.alpha[h] == h or self.alpha[self.alpha[h]] != h:
                raise ValueError(f"alpha is not a fixed-point-free involution at half-edge {h}")
        short = [c for c in self.vertices() if len(c) < 3]
        if short:
            raise ValueError(f"vertex {_format_cycle(short[0])} has degree below 3")
        if not self.is_connected():
            raise ValueError("graph is not connected")
        faces = self.faces()
        if self.face_labels is not None:
            labels = []
            for face in faces:
                face_label = {self.face_labels[h] for h in face}
                if len(face_label) != 1:
                    raise ValueError(f"face {_format_cycle(face)} carries several labels")
                labels.append(face_label.pop())
            if sorted(labels) != list(range(1, len(faces) + 1)):
                raise ValueError(f"face labels {sorted(labels)} are not 1..{len(faces)}")
        if n is not None and len(faces) != n:
            raise ValueError(f"graph has {len(faces)} faces, expected {n}")
        if g is not None and self.genus() != g:
            raise ValueError(f"graph has genus {self.genus()}, expected {g}")

    def face_of(self) -> List[int]:
        """Index into faces() for every half-edge."""
        owner = [0] * self.num_half_edges
        for index, face in enumerate(self.faces()):
            for h in face:
                owner[h] = index
        return owner

    def with_face_labels(self, labels_by_face: Sequence[int]) -> "RibbonGraph":
        """Label face faces()[k] with labels_by_face[k]."""
        owner = self.face_of()
        return RibbonGraph(self.sigma, self.alpha, tuple(labels_by_face[owner[h]] for h in range(self.num_half_edges)))

    def incidence_matrix(self) -> List[List[int]]:
        """Rows are face labels 1..n, columns are edges; entry = sides of the edge on that face."""
        if self.face_labels is None:
            raise ValueError("incidence matrix needs face labels")
        n = len(self.faces())
        matrix = [[0] * self.num_edges() for _ in range(n)]
        for col, (h, k) in enumerate(self.edges()):
            matrix[self.face_labels[h] - 1][col] += 1
            matrix[self.face_labels[k] - 1][col] += 1
        return matrix

    # ------------------------------------------------------------------
    # Canonical form
    # ------------------------------------------------------------------

    def _bfs_order(self, start: int) -> List[int]:
        order = [start]
        seen = {start}
        i = 0
        while i < len(order):
            h = order[i]
            for nb in (self.sigma[h], self.alpha[h]):
                if nb not in seen:
                    seen.add(nb)
                    order.append(nb)
            i += 1
        return order

    def _code(self, order: List[int]) -> Code:
        index = {h: i for i, h in enumerate(order)}
        code = [index[self.sigma[h]] for h in order] + [index[self.alpha[h]] for h in order]
        if self.face_labels is not None:
            code += [self.face_labels[h] for h in order]
        return tuple(code)

    def canonical_form(self) -> Tuple[Code, int]:
        """
        (minimal code, |Aut|). The code is the lexicographically smallest BFS
        relabelling over all starting half-edges; automorphisms act freely on
        half-edges of a connected graph, so the number of starts reaching the
        minimum is the order of the label-preserving automorphism group.
        """
        best: Optional[Code] = None
        hits = 0
        for start in range(self.num_half_edges):
            code = self._code(self._bfs_order(start))
            if best is None or code < best:
                best, hits = code, 1
            elif code == best:
                hits += 1
        return best, hits

    def canonical_graph(self) -> "RibbonGraph":
        """The graph relabelled along the minimal BFS order."""
        best_order, best_code = None, None
        for start in range(self.num_half_edges):
            order = self._bfs_order(start)
            code = self._code(order)
            if best_code is None or code < best_code:
                best_order, best_code = order, code
        size = self.num_half_edges
        sigma = tuple(best_code[:size])
        alpha = tuple(best_code[size:2 * size])
        labels = tuple(best_code[2 * size:]) if self.face_labels is not None else None
        return RibbonGraph(sigma, alpha, labels)

    def dump(self, aut_order: int) -> str:
        sigma = "".join(_format_cycle(c) for c in self.vertices())
        alpha = "".join(_format_cycle(e) for e in self.edges())
        labels = self.face_labels or tuple([0] * self.num_half_edges)
        faces = sorted(self.faces(), key=lambda f: labels[f[0]])
        faces_text = ",".join(f"{labels[f[0]]}:{_format_cycle(f)}" for f in faces)
        return f"e={self.num_edges()} sigma={sigma} alpha={alpha} faces={faces_text} aut={aut_order}"
