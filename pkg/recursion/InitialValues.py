"""
Closed forms for the two initial values of the recursion and the edge weight z.
"""

from fractions import Fraction
from typing import Tuple

from algebra.LaurentPoly import LaurentPoly


def z_factor(i: int, j: int, nvars: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """
    Edge weight z(t_i, t_j) = (t_i + 1)(t_j + 1) / (2(t_i + t_j)) as (numerator, denominator).

    For i == j the common factor is cancelled: z(t, t) = (t + 1)^2 / (4t).
    """
    one = LaurentPoly.one(nvars)
    ti = LaurentPoly.variable(nvars, i)
    tj = LaurentPoly.variable(nvars, j)
    numerator = (ti + one) * (tj + one)
    if i == j:
        return numerator, ti * 4
    return numerator, (ti + tj) * 2


def initial_F03() -> LaurentPoly:
    """-(1/16)(t1 + 1)(t2 + 1)(t3 + 1)(1 + 1/(t1 t2 t3))."""
    result = LaurentPoly.one(3) + LaurentPoly.monomial(3, (-1, -1, -1))
    for slot in range(3):
        result = result * (LaurentPoly.variable(3, slot) + 1)
    return result * Fraction(-1, 16)


def initial_F11() -> LaurentPoly:
    """-(1/384)(t + 1)^4 (t - 4 + 1/t) / t^2."""
    t_plus_one = LaurentPoly.univariate({1: 1, 0: 1})
    bracket = LaurentPoly.univariate({-1: 1, -2: -4, -3: 1})
    return (t_plus_one ** 4) * bracket * Fraction(-1, 384)


INITIAL_VALUES = {
    (0, 3): initial_F03,
    (1, 1): initial_F11,
}
