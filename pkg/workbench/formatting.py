"""
Text renderings of polynomials for the CLI.
"""

from fractions import Fraction
from typing import List, Tuple

from algebra.LaurentPoly import LaurentPoly


def format_json(poly: LaurentPoly) -> str:
    return poly.to_json()


def format_tsv(poly: LaurentPoly) -> str:
    """One row per term: exponents then the coefficient, descending order."""
    rows = ["\t".join([str(k) for k in exps] + [str(coeff)]) for exps, coeff in reversed(list(poly))]
    return "\n".join(rows)


def _variable(poly: LaurentPoly, slot: int) -> str:
    return "t" if poly.nvars == 1 else f"t{slot + 1}"


def format_pretty(poly: LaurentPoly) -> str:
    if not poly:
        return "0"
    parts = []
    for exps, coeff in _descending(poly):
        factors = []
        for slot, k in enumerate(exps):
            if k == 1:
                factors.append(_variable(poly, slot))
            elif k:
                factors.append(f"{_variable(poly, slot)}^{k}")
        mono = "*".join(factors)
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _descending(poly: LaurentPoly) -> List[Tuple[Tuple[int, ...], Fraction]]:
    return sorted(poly.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)


def _latex_variable(poly: LaurentPoly, slot: int) -> str:
    return "t" if poly.nvars == 1 else f"t_{{{slot + 1}}}"


def _latex_monomial(poly: LaurentPoly, exps: Tuple[int, ...]) -> str:
    factors = []
    for slot, k in enumerate(exps):
        name = _latex_variable(poly, slot)
        if k == 1:
            factors.append(name)
        elif k:
            factors.append(f"{name}^{{{k}}}")
    return " ".join(factors)


def _latex_coefficient(value: Fraction) -> str:
    magnitude = abs(value)
    if magnitude.denominator == 1:
        return str(magnitude.numerator)
    return f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"


def format_latex(poly: LaurentPoly) -> str:
    """
    Descending total degree; a monomial m and 1/m with equal coefficients are
    written together as c (m + m^{-1}).
    """
    if not poly:
        return "0"
    used = set()
    pieces = []
    for exps, coeff in _descending(poly):
        if exps in used:
            continue
        used.add(exps)
        inverse = tuple(-k for k in exps)
        mono = _latex_monomial(poly, exps)
        magnitude = _latex_coefficient(coeff)
        if inverse != exps and poly.terms.get(inverse) == coeff and inverse not in used:
            used.add(inverse)
            inv_mono = _latex_monomial(poly, inverse)
            body = f"\\left({mono} + {inv_mono}\\right)"
            body = body if magnitude == "1" else f"{magnitude} {body}"
        elif not mono:
            body = magnitude
        else:
            body = mono if magnitude == "1" else f"{magnitude} {mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


FORMATTERS = {
    "json": format_json,
    "tsv": format_tsv,
    "latex": format_latex,
    "pretty": format_pretty,
}


def render(poly: LaurentPoly, output_format: str) -> str:
    return FORMATTERS[output_format](poly)
