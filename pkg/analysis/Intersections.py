"""
psi-class intersection numbers read off the top-degree part of F_{g,n}.

The coefficient of prod t_j^(2d_j + 1) in the top part equals
(-1)^n / 2^(5g - 5 + 2n) * <tau_d1 ... tau_dn> * prod (2d_j)!/d_j! * (1/2)^(2d_j + 1).
"""

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Set, Tuple

from algebra.LaurentPoly import LaurentPoly, format_rational
from analysis.Report import CheckResult, VerificationReport
from recursion.Partitions import is_stable, level

TauKey = Tuple[int, Tuple[int, ...]]


class InconsistentOrbitError(ArithmeticError):
    """Permutation-equivalent top monomials give different intersection numbers."""


class IntersectionTable:
    """<tau_d1 ... tau_dn>_g keyed by (g, sorted d); records which (g, n) were extracted."""

    def __init__(self):
        self.values: Dict[TauKey, Fraction] = {}
        self.types: Set[Tuple[int, int]] = set()

    def __len__(self) -> int:
        return len(self.values)

    def get(self, g: int, d: Iterable[int]) -> Fraction:
        return self.values.get((g, tuple(sorted(d))), Fraction(0))

    def has_type(self, g: int, n: int) -> bool:
        return (g, n) in self.types

    def entries(self, g: int = None, n: int = None) -> List[Tuple[TauKey, Fraction]]:
        return [(key, value) for key, value in sorted(self.values.items())
                if (g is None or key[0] == g) and (n is None or len(key[1]) == n)]

    def merge(self, other: "IntersectionTable") -> "IntersectionTable":
        for key, value in other.values.items():
            if key in self.values and self.values[key] != value:
                raise InconsistentOrbitError(f"conflicting values for {key}: {self.values[key]} vs {value}")
            self.values[key] = value
        self.types |= other.types
        return self

    def tsv_rows(self, g: int = None, n: int = None) -> List[str]:
        """Rows 'g d_1 ... d_n num/den', tab separated."""
        return ["\t".join([str(key[0])] + [str(d) for d in key[1]] + [format_rational(value)])
                for key, value in self.entries(g, n)]


def _monomial_weight(d: Tuple[int, ...]) -> Fraction:
    weight = Fraction(1)
    for dj in d:
        weight *= Fraction(factorial(2 * dj), factorial(dj)) / 2 ** (2 * dj + 1)
    return weight


def extract_intersection_numbers(g: int, n: int, poly: LaurentPoly) -> IntersectionTable:
    """Invert the top-degree relation monomial by monomial, checking every orbit agrees."""
    top = poly.homogeneous_part(3 * level(g, n))
    prefactor = Fraction((-1) ** n, 2 ** (5 * g - 5 + 2 * n))
    table = IntersectionTable()
    table.types.add((g, n))
    for exps, coeff in top:
        if any(k <= 0 or k % 2 == 0 for k in exps):
            raise InconsistentOrbitError(f"top monomial {list(exps)} is not a product of odd positive powers")
        d = tuple((k - 1) // 2 for k in exps)
        if sum(d) != 3 * g - 3 + n:
            raise InconsistentOrbitError(f"top monomial {list(exps)} has sum(d) = {sum(d)}, expected {3 * g - 3 + n}")
        value = coeff / (prefactor * _monomial_weight(d))
        key = (g, tuple(sorted(d)))
        if key in table.values and table.values[key] != value:
            raise InconsistentOrbitError(
                f"monomial {list(exps)} gives {value}, a permutation gave {table.values[key]}")
        table.values[key] = value
    return table


def _lowered(d: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return [d[:j] + (d[j] - 1,) + d[j + 1:] for j in range(len(d)) if d[j] >= 1]


def string_dilaton_check(table: IntersectionTable) -> VerificationReport:
    """
    String: <tau_0 prod tau_di>_g = sum_j <... tau_(dj - 1) ...>_g.
    Dilaton: <tau_1 prod tau_di>_g = (2g - 2 + n) <prod tau_di>_g.
    Only entries whose reduced type is stable and present in the table are checked.
    """
    report = VerificationReport()
    for g, n in sorted(table.types):
        positive = all(v > 0 for _, v in table.entries(g, n))
        report.add(CheckResult.outcome("positivity", g, n, positive,
                                       "all values positive" if positive else "nonpositive value found"))
        if not (is_stable(g, n - 1) and table.has_type(g, n - 1)):
            report.add(CheckResult(check="string", gn=f"{g},{n}", status="skip",
                                   detail=f"type ({g}, {n - 1}) not available"))
            report.add(CheckResult(check="dilaton", gn=f"{g},{n}", status="skip",
                                   detail=f"type ({g}, {n - 1}) not available"))
            continue
        for name, marker in (("string", 0), ("dilaton", 1)):
            checked = 0
            mismatch = None
            for (_, d), value in table.entries(g, n):
                if marker not in d:
                    continue
                reduced = list(d)
                reduced.remove(marker)
                reduced = tuple(reduced)
                if marker == 0:
                    expected = sum((table.get(g, r) for r in _lowered(reduced)), Fraction(0))
                else:
                    expected = (2 * g - 2 + len(reduced)) * table.get(g, reduced)
                checked += 1
                if value != expected and mismatch is None:
                    mismatch = f"<tau {list(d)}> = {value}, expected {expected}"
            if checked == 0:
                report.add(CheckResult(check=name, gn=f"{g},{n}", status="skip", detail="no applicable entries"))
            else:
                report.add(CheckResult.outcome(name, g, n, mismatch is None,
                                               mismatch or f"{checked} entries satisfy the {name} equation"))
    return report
