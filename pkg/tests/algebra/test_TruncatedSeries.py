import unittest
from fractions import Fraction

from algebra.LaurentPoly import LaurentPoly
from algebra.TruncatedSeries import TruncatedSeries, t_power_series
from recursion.InitialValues import initial_F03, initial_F11


class TestTPowerSeries(unittest.TestCase):
    def test_first_power(self):
        self.assertEqual(t_power_series(1, 2), (Fraction(-1), Fraction(-2), Fraction(-2)))

    def test_inverse_power(self):
        self.assertEqual(t_power_series(-1, 2), (Fraction(-1), Fraction(2), Fraction(-2)))

    def test_zero_power(self):
        self.assertEqual(t_power_series(0, 3), (1, 0, 0, 0))

    def test_powers_multiply(self):
        square = t_power_series(2, 4)
        product = TruncatedSeries(1, 4, {(k,): c for k, c in enumerate(t_power_series(1, 4))})
        self.assertEqual(product * product, TruncatedSeries(1, 4, {(k,): c for k, c in enumerate(square)}))

    def test_inverse_powers_cancel(self):
        up = TruncatedSeries(1, 5, {(k,): c for k, c in enumerate(t_power_series(3, 5))})
        down = TruncatedSeries(1, 5, {(k,): c for k, c in enumerate(t_power_series(-3, 5))})
        self.assertEqual(up * down, TruncatedSeries(1, 5, {(0,): 1}))


class TestTruncatedSeries(unittest.TestCase):
    def test_constant(self):
        series = TruncatedSeries.from_laurent(LaurentPoly.one(2), 3)
        self.assertEqual(series, TruncatedSeries(2, 3, {(0, 0): 1}))

    def test_variable(self):
        series = TruncatedSeries.from_laurent(LaurentPoly.variable(1, 0), 2)
        self.assertEqual(series.coefficient((0,)), -1)
        self.assertEqual(series.coefficient((1,)), -2)
        self.assertEqual(series.coefficient((2,)), -2)

    def test_expansion_is_multiplicative(self):
        a = LaurentPoly.variable(2, 0, 3) + LaurentPoly.variable(2, 1, -1) * Fraction(1, 2)
        b = LaurentPoly.variable(2, 0) * LaurentPoly.variable(2, 1) - 4
        order = 4
        self.assertEqual(
            TruncatedSeries.from_laurent(a * b, order),
            TruncatedSeries.from_laurent(a, order) * TruncatedSeries.from_laurent(b, order))

    def test_truncation_drops_high_terms(self):
        series = TruncatedSeries(1, 2, {(3,): 1, (1,): 5})
        self.assertEqual(series.terms, {(1,): Fraction(5)})

    def test_negative_exponent_rejected(self):
        with self.assertRaises(ValueError):
            TruncatedSeries(1, 2, {(-1,): 1})

    def test_order_mismatch(self):
        with self.assertRaises(ValueError):
            TruncatedSeries(1, 2) + TruncatedSeries(1, 3)

    def test_F03_counts_one_graph(self):
        series = TruncatedSeries.from_laurent(initial_F03(), 2)
        self.assertEqual(series.coefficient((1, 1, 2)), 1)
        self.assertEqual(series.coefficient((2, 2, 2)), 1)
        self.assertEqual(series.coefficient((1, 1, 1)), 0)
        self.assertEqual(series.coefficient((0, 1, 1)), 0)

    def test_F11_lattice_counts(self):
        series = TruncatedSeries.from_laurent(initial_F11(), 6)
        self.assertEqual(series.coefficient((2,)), 0)
        self.assertEqual(series.coefficient((4,)), Fraction(1, 4))
        self.assertEqual(series.coefficient((6,)), Fraction(2, 3))
        self.assertEqual(series.coefficient((5,)), 0)


if __name__ == '__main__':
    unittest.main()
