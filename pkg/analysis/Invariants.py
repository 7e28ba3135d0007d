"""
Structural invariant suite for Poincare polynomials.

A polynomial is admitted to the recursion cache only when every check here passes.
"""

from typing import Optional, Tuple

from algebra.LaurentPoly import LaurentPoly
from analysis.EulerCharacteristic import verify_euler
from analysis.Report import CheckResult, VerificationReport
from recursion.Partitions import level


def first_odd_exponent(poly: LaurentPoly, slot: int) -> Optional[Tuple[int, ...]]:
    """First monomial (in canonical order) with an odd exponent in slot, if any."""
    for exps, _ in poly:
        if exps[slot] % 2:
            return exps
    return None


def check_symmetry(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    # A transposition and an n-cycle generate the full symmetric group.
    if n == 1:
        return CheckResult.outcome("symmetry", g, n, True, "single variable")
    generators = {
        "(1 2)": [1, 0] + list(range(2, n)),
        f"(1 ... {n})": [(i + 1) % n for i in range(n)],
    }
    for name, perm in generators.items():
        moved = poly.permute(perm)
        if moved != poly:
            diff = moved - poly
            exps, coeff = next(iter(diff))
            return CheckResult.outcome(
                "symmetry", g, n, False,
                f"permutation {name} changes coefficient of {list(exps)} by {coeff}")
    return CheckResult.outcome("symmetry", g, n, True, "invariant under S_n generators")


def check_vanishing(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    for slot in range(n):
        restricted = poly.eval_partial(slot, -1)
        if restricted:
            exps, coeff = next(iter(restricted))
            return CheckResult.outcome(
                "vanishing", g, n, False,
                f"F|t{slot + 1}=-1 has coefficient {coeff} at {list(exps)}")
    return CheckResult.outcome("vanishing", g, n, True, "F vanishes at every t_j = -1")


def check_exponents(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    for exps, coeff in poly:
        if any(k % 2 == 0 and k != 0 for k in exps):
            return CheckResult.outcome(
                "exponents", g, n, False, f"nonzero even exponent in {list(exps)} (coefficient {coeff})")
    return CheckResult.outcome("exponents", g, n, True, "every exponent is odd or zero")


def check_degree(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    bound = 3 * level(g, n)
    top, bottom = poly.max_degree(), poly.min_degree()
    return CheckResult.outcome(
        "degree", g, n, top == bound and bottom == -bound,
        f"total degree range [{bottom}, {top}], expected [{-bound}, {bound}]")


def check_inversion(g: int, n: int, poly: LaurentPoly) -> CheckResult:
    inverted = poly.invert()
    if inverted != poly:
        exps, coeff = next(iter(inverted - poly))
        return CheckResult.outcome(
            "inversion", g, n, False, f"t -> 1/t changes coefficient of {list(exps)} by {coeff}")
    return CheckResult.outcome("inversion", g, n, True, "invariant under t_j -> 1/t_j")


def run_invariant_suite(g: int, n: int, poly: LaurentPoly) -> VerificationReport:
    report = VerificationReport()
    if poly.nvars != n:
        return report.add(CheckResult.outcome(
            "nvars", g, n, False, f"polynomial has {poly.nvars} variables, expected {n}"))
    for check in (check_symmetry, check_vanishing, check_exponents, check_degree, check_inversion):
        report.add(check(g, n, poly))
    report.add(verify_euler(g, n, poly))
    return report
