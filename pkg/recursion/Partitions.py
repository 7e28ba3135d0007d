from dataclasses import dataclass
from itertools import combinations
from typing import List, Sequence, Tuple


class UnstableTypeError(ValueError):
    """Raised when (g, n) lies outside the stable range 2g - 2 + n > 0."""


def is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 1 and 2 * g - 2 + n > 0


def require_stable(g: int, n: int):
    if not is_stable(g, n):
        raise UnstableTypeError(f"(g, n) = ({g}, {n}) is not stable: need g >= 0, n >= 1, 2g - 2 + n > 0")


def level(g: int, n: int) -> int:
    """The recursion level 2g - 2 + n."""
    return 2 * g - 2 + n


@dataclass(frozen=True)
class StablePartition:
    """One splitting (g1, I) | (g2, J) of the quadratic term; I and J are sorted tuples."""
    g1: int
    I: Tuple[int, ...]
    g2: int
    J: Tuple[int, ...]


def stable_partitions(g: int, rest: Sequence[int]) -> List[StablePartition]:
    """
    All ordered splittings g1 + g2 = g, I + J = rest with both factors stable.

    Both (g1, I | g2, J) and its swap appear when they differ; a splitting equal
    to its own swap appears once.
    """
    rest = tuple(sorted(rest))
    result = []
    for g1 in range(g + 1):
        g2 = g - g1
        for size in range(len(rest) + 1):
            for I in combinations(rest, size):
                J = tuple(i for i in rest if i not in I)
                if 2 * g1 - 1 + len(I) > 0 and 2 * g2 - 1 + len(J) > 0:
                    result.append(StablePartition(g1, I, g2, J))
    return result
