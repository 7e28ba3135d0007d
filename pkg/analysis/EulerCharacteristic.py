"""
Euler characteristics of the moduli space of pointed curves.

Both closed forms are implemented: the Bernoulli form is the reference value,
and the zeta form (g >= 1 only) is kept as an independent identity check.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from algebra.LaurentPoly import LaurentPoly
from analysis.Report import CheckResult
from recursion.Partitions import require_stable


@lru_cache(maxsize=None)
def bernoulli(r: int) -> Fraction:
    """
    Bernoulli number b_r with x/(e^x - 1) = sum b_r x^r / r!, so b_1 = -1/2.

    Uses sum_{k=0}^{m} C(m+1, k) b_k = 0 for m >= 1.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return Fraction(1)
    if r == 1:
        return Fraction(-1, 2)
    if r % 2:
        return Fraction(0)
    s = sum((comb(r + 1, k) * bernoulli(k) for k in range(r)), Fraction(0))
    return -s / (r + 1)


def zeta_negative_odd(g: int) -> Fraction:
    """zeta(1 - 2g) = -b_{2g} / (2g) for g >= 1."""
    if g < 1:
        raise ValueError("zeta(1 - 2g) is rational only for g >= 1")
    return -bernoulli(2 * g) / (2 * g)


def euler_char_HZ(g: int, n: int) -> Fraction:
    """chi(M_{g,n}) = (-1)^n (2g - 3 + n)! / (2g)! * (2g - 1) * b_{2g}."""
    require_stable(g, n)
    sign = -1 if n % 2 else 1
    return sign * Fraction(factorial(2 * g - 3 + n), factorial(2 * g)) * (2 * g - 1) * bernoulli(2 * g)


def euler_char_zeta_form(g: int, n: int) -> Fraction:
    """chi(M_{g,n}) = (-1)^(n-1) (2g - 3 + n)! / (2g - 2)! * zeta(1 - 2g), g >= 1."""
    require_stable(g, n)
    sign = 1 if n % 2 else -1
    return sign * Fraction(factorial(2 * g - 3 + n), factorial(2 * g - 2)) * zeta_negative_odd(g)


def ribbon_graph_euler_char(g: int, n: int) -> Fraction:
    """chi(RG_{g,n}) = (-1)^n chi(M_{g,n}), the value of F_{g,n} at all ones."""
    value = euler_char_HZ(g, n)
    return -value if n % 2 else value


def verify_euler(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    expected = ribbon_graph_euler_char(g, n)
    actual = poly.evaluate([1] * n)
    return CheckResult.outcome(
        "euler", g, n, actual == expected,
        f"F(1,...,1) = {actual}, expected {expected}")
