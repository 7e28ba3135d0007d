import unittest
from fractions import Fraction

from algebra.LaurentPoly import LaurentPoly, NonLaurentError
from analysis.Diagonal import diagonal, verify_diagonal, z_expansion, z_power
from recursion.InitialValues import initial_F03, initial_F11
from tests.golden_polynomials import Z_FORM_F11, Z_FORM_F21, golden_F04, golden_F21


class TestDiagonal(unittest.TestCase):
    def test_diagonal_collapses_all_slots(self):
        poly = LaurentPoly(3, {(1, -1, 3): 2, (3, 0, 0): 1})
        self.assertEqual(diagonal(poly), LaurentPoly.univariate({3: 3}))

    def test_z_power(self):
        t = LaurentPoly.variable(1, 0)
        self.assertEqual(z_power(1) * t * 4, (t + 1) ** 2)
        self.assertEqual(z_power(0), LaurentPoly.one(1))

    def test_F11_z_form(self):
        self.assertEqual(z_expansion(initial_F11()), Z_FORM_F11)

    def test_F03_diagonal(self):
        self.assertEqual(z_expansion(diagonal(initial_F03())), {3: Fraction(-4), 2: Fraction(3)})

    def test_F21_z_form(self):
        self.assertEqual(z_expansion(golden_F21()), Z_FORM_F21)

    def test_not_a_polynomial_in_z(self):
        with self.assertRaises(NonLaurentError):
            z_expansion(LaurentPoly.variable(1, 0))

    def test_needs_one_variable(self):
        with self.assertRaises(ValueError):
            z_expansion(initial_F03())


class TestVerifyDiagonal(unittest.TestCase):
    def test_profile_match(self):
        result = verify_diagonal(1, 1, initial_F11(), {3: Fraction(-1, 6), 2: Fraction(1, 4)})
        self.assertTrue(result.passed, result.detail)

    def test_profile_mismatch(self):
        result = verify_diagonal(1, 1, initial_F11(), {3: Fraction(-1, 6)})
        self.assertFalse(result.passed)

    def test_edge_range_without_profile(self):
        self.assertTrue(verify_diagonal(0, 4, golden_F04()).passed)
        result = verify_diagonal(0, 3, golden_F21())
        self.assertFalse(result.passed)
        self.assertIn("outside edge range", result.detail)


if __name__ == '__main__':
    unittest.main()
