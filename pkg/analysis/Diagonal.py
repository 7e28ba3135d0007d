"""
Diagonal specialisation t_1 = ... = t_n = t, where F_{g,n} becomes a polynomial
in z = (t + 1)^2 / (4t) whose coefficient of z^e is the alternating Aut-weighted
count of graphs with e edges.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

from algebra.LaurentPoly import LaurentPoly, NonLaurentError
from analysis.Report import CheckResult
from recursion.Partitions import level


def diagonal(poly: LaurentPoly) -> LaurentPoly:
    result = poly
    while result.nvars > 1:
        result = result.merge_slots(0, result.nvars - 1)
    return result


@lru_cache(maxsize=None)
def z_power(k: int) -> LaurentPoly:
    """z^k = (t + 2 + 1/t)^k / 4^k."""
    return (LaurentPoly.univariate({1: 1, 0: 2, -1: 1}) ** k) * Fraction(1, 4 ** k)


def z_expansion(poly: LaurentPoly) -> Dict[int, Fraction]:
    """
    Coefficients {k: c_k} with poly = sum c_k z^k, reduced from the top degree down.

    Raises:
        NonLaurentError: poly is not a polynomial in z
    """
    if poly.nvars != 1:
        raise ValueError(f"z-expansion needs a univariate polynomial, got {poly.nvars} variables")
    remainder = poly
    coeffs: Dict[int, Fraction] = {}
    while remainder:
        k = remainder.max_degree()
        if k < 0:
            raise NonLaurentError(f"remainder {remainder!r} is not a polynomial in z")
        c = remainder.coefficient((k,)) * 4 ** k
        coeffs[k] = c
        remainder = remainder - z_power(k) * c
    return dict(sorted(coeffs.items(), reverse=True))


def verify_diagonal(g: int, n: int, poly: LaurentPoly,
                    profile: Optional[Dict[int, Fraction]] = None) -> CheckResult:
    """
    Compare the z-expansion of the diagonal with an edge profile when one is
    given; otherwise require every power of z to be a possible edge count.
    """
    try:
        expansion = z_expansion(diagonal(poly))
    except NonLaurentError as e:
        return CheckResult.outcome("diagonal", g, n, False, str(e))
    if profile is not None:
        expected = {k: c for k, c in profile.items() if c}
        if expansion != expected:
            return CheckResult.outcome(
                "diagonal", g, n, False,
                f"z-coefficients {_format(expansion)} differ from graph profile {_format(expected)}")
        return CheckResult.outcome("diagonal", g, n, True, f"z-coefficients match graphs: {_format(expansion)}")
    low, high = 2 * g - 1 + n, 3 * level(g, n)
    outside = [k for k in expansion if not low <= k <= high]
    if outside:
        return CheckResult.outcome("diagonal", g, n, False, f"powers {outside} outside edge range [{low}, {high}]")
    return CheckResult.outcome("diagonal", g, n, True, f"z-coefficients {_format(expansion)}")


def _format(coeffs: Dict[int, Fraction]) -> str:
    return ", ".join(f"z^{k}: {c}" for k, c in sorted(coeffs.items(), reverse=True))
