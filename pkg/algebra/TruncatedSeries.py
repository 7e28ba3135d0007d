"""
Truncated multivariate power series with per-variable truncation order.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from algebra.LaurentPoly import LaurentPoly, VariableCountError

Exponents = Tuple[int, ...]


class TruncatedSeries:
    """Power series in nvars variables, keeping exponents 0..order in each slot."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int,
                 terms: Optional[Mapping[Exponents, Union[int, Fraction]]] = None):
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}")
        self.nvars = nvars
        self.order = order
        self.terms: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise VariableCountError(f"Exponent vector {exps} does not have {nvars} slots")
            if any(k < 0 for k in exps):
                raise ValueError(f"Negative exponent in power series term {exps}")
            if coeff and all(k <= order for k in exps):
                self.terms[exps] = Fraction(coeff)

    def _check(self, other: "TruncatedSeries"):
        if self.nvars != other.nvars:
            raise VariableCountError(f"Variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.order != other.order:
            raise ValueError(f"Truncation mismatch: {self.order} vs {other.order}")

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.order, self.terms) == (other.nvars, other.order, other.terms)

    def __repr__(self) -> str:
        return f"TruncatedSeries(nvars={self.nvars}, order={self.order}, terms={len(self.terms)})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            result[exps] = result.get(exps, 0) + coeff
        return TruncatedSeries(self.nvars, self.order, result)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            result[exps] = result.get(exps, 0) - coeff
        return TruncatedSeries(self.nvars, self.order, result)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        order = self.order
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(k > order for k in exps):
                    continue
                result[exps] = result.get(exps, 0) + c1 * c2
        return TruncatedSeries(self.nvars, order, result)

    @classmethod
    def from_laurent(cls, poly: LaurentPoly, order: int) -> "TruncatedSeries":
        """
        Expand poly under t_j = (1 + x_j)/(x_j - 1) around x = 0.

        Slots are contracted one at a time: each Laurent exponent k in a slot is
        replaced by the truncated expansion of t^k in that slot's x variable.
        """
        if order < 0:
            raise ValueError(f"Truncation order must be nonnegative, got {order}")
        current: Dict[Exponents, Fraction] = dict(poly.terms)
        for slot in range(poly.nvars):
            contracted: Dict[Exponents, Fraction] = {}
            for exps, coeff in current.items():
                expansion = t_power_series(exps[slot], order)
                for p, s in enumerate(expansion):
                    if not s:
                        continue
                    key = exps[:slot] + (p,) + exps[slot + 1:]
                    contracted[key] = contracted.get(key, 0) + coeff * s
            current = {e: c for e, c in contracted.items() if c}
        return cls(poly.nvars, order, current)


def _truncated_product(a: Tuple[Fraction, ...], b: Tuple[Fraction, ...], order: int) -> Tuple[Fraction, ...]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * b[j]
    return tuple(out)


@lru_cache(maxsize=None)
def t_power_series(k: int, order: int) -> Tuple[Fraction, ...]:
    """Coefficients of x^0..x^order in ((1 + x)/(x - 1))^k."""
    if k == 0:
        return (Fraction(1),) + (Fraction(0),) * order
    if k > 0:
        # (1 + x)/(x - 1) = -1 - 2x - 2x^2 - ...
        base = tuple(Fraction(-1 if m == 0 else -2) for m in range(order + 1))
    else:
        # (x - 1)/(1 + x) = -1 + 2x - 2x^2 + 2x^3 - ...
        base = tuple(Fraction(-1 if m == 0 else 2 * (-1) ** (m - 1)) for m in range(order + 1))
    step = 1 if k > 0 else -1
    if abs(k) == 1:
        return base
    return _truncated_product(t_power_series(k - step, order), base, order)
