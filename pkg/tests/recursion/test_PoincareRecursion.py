import os
import tempfile
import unittest
from fractions import Fraction

from algebra.LaurentPoly import LaurentPoly
from analysis.Diagonal import diagonal, z_expansion
from analysis.Invariants import first_odd_exponent
from recursion.InitialValues import initial_F03, initial_F11
from recursion.Partitions import UnstableTypeError
from recursion.PoincareRecursion import (
    InvariantError, MissingDependencyError, PoincareRecursion, compute_F, dependencies,
    evaluation_order, kernel_cubic, kernel_square,
)
from recursion.PolynomialStore import PolynomialStore
from tests.golden_polynomials import (
    Z_FORM_F21, Z_FORM_F31, golden_F04, golden_F12, golden_F21, golden_F31,
)


class TestKernels(unittest.TestCase):
    def test_cubic_kernel(self):
        t = LaurentPoly.variable(1, 0)
        expected = (t * t - 1) ** 3 * LaurentPoly.variable(1, 0, -2)
        self.assertEqual(kernel_cubic(1, 0), expected)

    def test_square_kernel(self):
        t = LaurentPoly.variable(1, 0)
        expected = (t * t - 1) ** 2 * LaurentPoly.variable(1, 0, -2)
        self.assertEqual(kernel_square(1, 0), expected)


class TestDependencies(unittest.TestCase):
    def test_initial_values_have_none(self):
        self.assertEqual(dependencies(0, 3), [])
        self.assertEqual(dependencies(1, 1), [])

    def test_lower_types(self):
        self.assertEqual(dependencies(0, 4), [(0, 3)])
        self.assertEqual(dependencies(1, 2), [(0, 3), (1, 1)])
        self.assertEqual(dependencies(2, 1), [(1, 1), (1, 2)])

    def test_evaluation_order_by_level(self):
        order = evaluation_order([(2, 1), (0, 3), (1, 2), (1, 1), (0, 4)])
        self.assertEqual(order, [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)])


class TestPoincareRecursion(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.recursion = PoincareRecursion()

    def test_initial_values(self):
        self.assertEqual(self.recursion.compute(0, 3), initial_F03())
        self.assertEqual(self.recursion.compute(1, 1), initial_F11())

    def test_unstable_type(self):
        with self.assertRaises(UnstableTypeError):
            self.recursion.compute(0, 2)

    def test_F04_matches_closed_form(self):
        self.assertEqual(self.recursion.compute(0, 4), golden_F04())

    def test_F12_matches_closed_form(self):
        self.assertEqual(self.recursion.compute(1, 2), golden_F12())

    def test_F21_matches_closed_form(self):
        poly = self.recursion.compute(2, 1)
        self.assertEqual(poly, golden_F21())
        self.assertEqual(z_expansion(poly), Z_FORM_F21)

    def test_F31_matches_closed_form(self):
        poly = self.recursion.compute(3, 1)
        self.assertEqual(poly, golden_F31())
        self.assertEqual(z_expansion(poly), Z_FORM_F31)
        self.assertEqual(poly.evaluate([1]), Fraction(1, 252))

    def test_F12_diagonal_leading_coefficient(self):
        expansion = z_expansion(diagonal(self.recursion.compute(1, 2)))
        self.assertEqual(max(expansion), 6)

    def test_integrand_is_even_in_integration_variable(self):
        for g, n in [(0, 4), (1, 2), (0, 5), (2, 1)]:
            self.recursion.compute(g, n)
            integrand = self.recursion.assemble_integrand(g, n)
            self.assertIsNone(first_odd_exponent(integrand, 0), f"({g},{n})")

    def test_missing_dependency(self):
        with self.assertRaises(MissingDependencyError):
            PoincareRecursion().assemble_integrand(1, 2)

    def test_compute_up_to(self):
        table = PoincareRecursion().compute_up_to(2)
        self.assertEqual(sorted(table), [(0, 3), (0, 4), (1, 1), (1, 2)])

    def test_module_function(self):
        self.assertEqual(compute_F(0, 4), golden_F04())

    def test_parallel_matches_sequential(self):
        sequential = PoincareRecursion().compute_up_to(3)
        parallel = PoincareRecursion(workers=4).compute_up_to(3)
        self.assertEqual(sequential, parallel)

    def test_invariant_error_carries_report(self):
        error = InvariantError("bad", None)
        self.assertIsNone(error.report)
        self.assertEqual(str(error), "bad")


class TestRecursionPersistence(unittest.TestCase):
    def test_results_are_stored_and_reused(self):
        with tempfile.TemporaryDirectory() as tmp:
            store = PolynomialStore(os.path.join(tmp, "polynomials"))
            PoincareRecursion(store=store).compute(1, 2)
            self.assertEqual(store.keys(), [(0, 3), (1, 1), (1, 2)])

            log_file = os.path.join(tmp, "run.log")
            reloaded = PoincareRecursion(store=store, log_file=log_file)
            self.assertEqual(reloaded.compute(1, 2), golden_F12())
            with open(log_file, 'r', encoding='utf-8') as f:
                log = f.read()
            self.assertIn("F_{1,2} level 2", log)
            self.assertIn("SOURCE: cache", log)


if __name__ == '__main__':
    unittest.main()
