"""
Sparse multivariate Laurent polynomials over exact rationals.

Terms are stored as a dict mapping exponent tuples to Fractions. Slots are
0-based: slot 0 is the variable t_1. Instances are treated as immutable;
every operation returns a new polynomial.
"""

import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

BigRational = Fraction
Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class VariableCountError(ValueError):
    """Operands live in frames with a different number of variables."""


class SlotMapError(ValueError):
    """A slot relabelling is not injective or points outside the frame."""


class LogTermError(ArithmeticError):
    """Antiderivative requested for a polynomial with a t^-1 term."""


class PoleError(ZeroDivisionError):
    """Zero substituted into a negative power."""


class OddExponentError(ArithmeticError):
    """Divided difference requested for a polynomial that is not even in x."""


class NonLaurentError(ArithmeticError):
    """Exact division left a nonzero remainder."""


def format_rational(value: Fraction) -> str:
    """Canonical 'num/den' string, always with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class LaurentPoly:
    """A Laurent polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, Scalar]] = None):
        if nvars < 0:
            raise VariableCountError(f"nvars must be nonnegative, got {nvars}")
        self.nvars = nvars
        self.terms: Dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise VariableCountError(
                        f"Exponent vector {exps} has length {len(exps)}, expected {nvars}")
                if coeff:
                    self.terms[exps] = Fraction(coeff)

    @classmethod
    def _from_clean(cls, nvars: int, terms: Dict[Exponents, Fraction]) -> "LaurentPoly":
        # Skips validation; callers guarantee lengths and Fraction values.
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.terms = {e: c for e, c in terms.items() if c}
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, nvars: int, exps: Iterable[int], coeff: Scalar = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, slot: int, power: int = 1) -> "LaurentPoly":
        if not 0 <= slot < nvars:
            raise SlotMapError(f"Slot {slot} outside a frame of {nvars} variables")
        exps = [0] * nvars
        exps[slot] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def univariate(cls, coeffs: Mapping[int, Scalar], nvars: int = 1, slot: int = 0) -> "LaurentPoly":
        """Build sum(c * t_slot^k) from a {k: c} mapping."""
        terms = {}
        for k, c in coeffs.items():
            exps = [0] * nvars
            exps[slot] = k
            terms[tuple(exps)] = c
        return cls(nvars, terms)

    # ------------------------------------------------------------------
    # Container protocol
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"LaurentPoly({self.nvars}, 0)"
        parts = []
        for exps, coeff in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"t{slot + 1}" if k == 1 else f"t{slot + 1}^{k}"
                for slot, k in enumerate(exps) if k != 0)
            parts.append(f"({coeff})*{mono}" if mono else f"({coeff})")
        return f"LaurentPoly({self.nvars}, {' + '.join(parts)})"

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _check_frame(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise VariableCountError(
                f"Variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check_frame(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.nvars, other)
        raise TypeError(f"Cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            result[exps] = result.get(exps, 0) + coeff
        return LaurentPoly._from_clean(self.nvars, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            result[exps] = result.get(exps, 0) - coeff
        return LaurentPoly._from_clean(self.nvars, result)

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def scale(self, factor: Scalar) -> "LaurentPoly":
        factor = Fraction(factor)
        if not factor:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._from_clean(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                result[exps] = result.get(exps, 0) + c1 * c2
        return LaurentPoly._from_clean(self.nvars, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("Only nonnegative powers of a polynomial are supported")
        result = LaurentPoly.one(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Calculus
    # ------------------------------------------------------------------

    def _check_slot(self, slot: int):
        if not 0 <= slot < self.nvars:
            raise SlotMapError(f"Slot {slot} outside a frame of {self.nvars} variables")

    def diff(self, slot: int) -> "LaurentPoly":
        """Exact partial derivative: t^k -> k t^(k-1)."""
        self._check_slot(slot)
        result = {}
        for exps, coeff in self.terms.items():
            k = exps[slot]
            if k == 0:
                continue
            new = list(exps)
            new[slot] = k - 1
            result[tuple(new)] = coeff * k
        return LaurentPoly._from_clean(self.nvars, result)

    def antiderivative(self, slot: int) -> "LaurentPoly":
        """Termwise t^k -> t^(k+1)/(k+1) with integration constant zero."""
        self._check_slot(slot)
        result = {}
        for exps, coeff in self.terms.items():
            k = exps[slot]
            if k == -1:
                raise LogTermError(
                    f"Term {coeff}*t{slot + 1}^-1 (exponents {exps}) has no Laurent antiderivative")
            new = list(exps)
            new[slot] = k + 1
            result[tuple(new)] = coeff / (k + 1)
        return LaurentPoly._from_clean(self.nvars, result)

    # ------------------------------------------------------------------
    # Evaluation and frame changes
    # ------------------------------------------------------------------

    def eval_partial(self, slot: int, value: Scalar) -> "LaurentPoly":
        """Substitute t_slot := value, returning a polynomial in nvars-1 variables."""
        self._check_slot(slot)
        value = Fraction(value)
        powers: Dict[int, Fraction] = {}
        result: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            k = exps[slot]
            if k not in powers:
                if value == 0 and k < 0:
                    raise PoleError(f"Substituting 0 into t{slot + 1}^{k}")
                powers[k] = value ** k
            rest = exps[:slot] + exps[slot + 1:]
            result[rest] = result.get(rest, 0) + coeff * powers[k]
        return LaurentPoly._from_clean(self.nvars - 1, result)

    def evaluate(self, values: Iterable[Scalar]) -> Fraction:
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise VariableCountError(f"Expected {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, k in zip(values, exps):
                if k:
                    if v == 0 and k < 0:
                        raise PoleError(f"Substituting 0 into a negative power in {exps}")
                    term *= v ** k
            total += term
        return total

    def relabel(self, slot_map: Mapping[int, int], nvars: int) -> "LaurentPoly":
        """
        Move slot s to slot_map[s] inside a frame of nvars variables.

        Every slot of self must be mapped; unused target slots get exponent 0.
        """
        targets = [slot_map.get(s) for s in range(self.nvars)]
        if any(t is None for t in targets):
            raise SlotMapError(f"Slot map {dict(slot_map)} does not cover {self.nvars} slots")
        if len(set(targets)) != len(targets) or any(not 0 <= t < nvars for t in targets):
            raise SlotMapError(f"Slot map {dict(slot_map)} is not injective into {nvars} slots")
        result = {}
        for exps, coeff in self.terms.items():
            new = [0] * nvars
            for k, t in zip(exps, targets):
                new[t] = k
            result[tuple(new)] = coeff
        return LaurentPoly._from_clean(nvars, result)

    def permute(self, perm: Iterable[int]) -> "LaurentPoly":
        """Relabel by a permutation given as a sequence: slot s -> perm[s]."""
        perm = list(perm)
        return self.relabel(dict(enumerate(perm)), self.nvars)

    def merge_slots(self, keep: int, drop: int) -> "LaurentPoly":
        """Identify t_drop with t_keep (exponents add) and remove slot drop."""
        self._check_slot(keep)
        self._check_slot(drop)
        if keep == drop:
            raise SlotMapError("Cannot merge a slot with itself")
        result: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            new[keep] += new[drop]
            del new[drop]
            key = tuple(new)
            result[key] = result.get(key, 0) + coeff
        return LaurentPoly._from_clean(self.nvars - 1, result)

    def invert(self) -> "LaurentPoly":
        """Substitute t_j -> 1/t_j in every slot."""
        return LaurentPoly._from_clean(
            self.nvars, {tuple(-k for k in e): c for e, c in self.terms.items()})

    # ------------------------------------------------------------------
    # Degree structure
    # ------------------------------------------------------------------

    def max_degree(self) -> Optional[int]:
        return max((sum(e) for e in self.terms), default=None)

    def min_degree(self) -> Optional[int]:
        return min((sum(e) for e in self.terms), default=None)

    def homogeneous_part(self, degree: int) -> "LaurentPoly":
        return LaurentPoly._from_clean(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    # ------------------------------------------------------------------
    # Exact quotients
    # ------------------------------------------------------------------

    def divided_difference_even(self, x: int, y: int) -> "LaurentPoly":
        """
        Compute (A(x) - A(y)) / (x^2 - y^2) where A(y) is A with slot x renamed to y.

        Every term must have even exponent in x and exponent 0 in y. Each term
        x^(2a) is expanded by the geometric sum
        (x^2a - y^2a)/(x^2 - y^2) = sum_{k<a} x^2k y^(2(a-1-k)),
        and for a = -b < 0 by the reciprocal form
        -sum_{k<b} x^(2k-2b) y^(-2-2k).
        """
        self._check_slot(x)
        self._check_slot(y)
        if x == y:
            raise SlotMapError("Divided difference needs two distinct slots")
        result: Dict[Exponents, Fraction] = {}

        def add(exps, k_x, k_y, coeff):
            new = list(exps)
            new[x] = k_x
            new[y] = k_y
            key = tuple(new)
            result[key] = result.get(key, 0) + coeff

        for exps, coeff in self.terms.items():
            ex = exps[x]
            if ex % 2:
                raise OddExponentError(f"Exponent {ex} of slot {x} is odd in term {exps}")
            if exps[y] != 0:
                raise OddExponentError(f"Slot {y} already occurs in term {exps}")
            a = ex // 2
            if a > 0:
                for k in range(a):
                    add(exps, 2 * k, 2 * (a - 1 - k), coeff)
            elif a < 0:
                b = -a
                for k in range(b):
                    add(exps, 2 * k - 2 * b, -2 - 2 * k, -coeff)
        return LaurentPoly._from_clean(self.nvars, result)

    def exact_divide_sum(self, i: int, j: int) -> "LaurentPoly":
        """Exact quotient by (t_i + t_j), by synthetic division in slot i."""
        self._check_slot(i)
        self._check_slot(j)
        if i == j:
            raise SlotMapError("Use a monomial shift to divide by 2 t_i")
        if not self.terms:
            return LaurentPoly.zero(self.nvars)

        # Group by exponent of t_i; the remaining exponents keep slot i at 0.
        layers: Dict[int, Dict[Exponents, Fraction]] = {}
        for exps, coeff in self.terms.items():
            rest = exps[:i] + (0,) + exps[i + 1:]
            layer = layers.setdefault(exps[i], {})
            layer[rest] = layer.get(rest, 0) + coeff
        lo, hi = min(layers), max(layers)

        quotient: Dict[Exponents, Fraction] = {}
        for k in range(hi, lo, -1):
            layer = {e: c for e, c in layers.get(k, {}).items() if c}
            if not layer:
                continue
            below = layers.setdefault(k - 1, {})
            for rest, coeff in layer.items():
                qexps = list(rest)
                qexps[i] = k - 1
                quotient[tuple(qexps)] = coeff
                shifted = list(rest)
                shifted[j] += 1
                shifted = tuple(shifted)
                below[shifted] = below.get(shifted, 0) - coeff
        remainder = {e: c for e, c in layers.get(lo, {}).items() if c}
        if remainder:
            raise NonLaurentError(
                f"Division by (t{i + 1} + t{j + 1}) leaves a remainder with {len(remainder)} terms")
        return LaurentPoly._from_clean(self.nvars, quotient)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exp": list(exps), "coeff": format_rational(coeff)}
                for exps, coeff in sorted(self.terms.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "LaurentPoly":
        nvars = int(data["nvars"])
        terms = {}
        for term in data["terms"]:
            exps = tuple(int(k) for k in term["exp"])
            terms[exps] = terms.get(exps, 0) + parse_rational(term["coeff"])
        return cls(nvars, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_dict(json.loads(text))
