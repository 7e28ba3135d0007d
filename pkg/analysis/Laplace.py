from itertools import product

from algebra.TruncatedSeries import TruncatedSeries
from analysis.Report import CheckResult


def verify_laplace(g: int, n: int, order: int, recursion, counter) -> CheckResult:
    """
    Expand F_{g,n} under t_j = (1 + x_j)/(x_j - 1) to order `order` and compare
    the coefficient of every x^p with N_{g,n}(p). Coefficients with some p_j = 0
    must vanish.

    Args:
        recursion: PoincareRecursion supplying F_{g,n}
        counter: LatticeCounter supplying N_{g,n}
    """
    poly = recursion.compute(g, n)
    series = TruncatedSeries.from_laurent(poly, order)
    compared = 0
    for p in product(range(order + 1), repeat=n):
        actual = series.coefficient(p)
        expected = counter.compute(g, n, p) if all(p) else 0
        compared += 1
        if actual != expected:
            return CheckResult.outcome(
                "laplace", g, n, False,
                f"coefficient of x^{list(p)} is {actual}, N = {expected}")
    return CheckResult.outcome(
        "laplace", g, n, True, f"{compared} coefficients agree up to order {order}")
