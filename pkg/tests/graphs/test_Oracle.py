import unittest
from fractions import Fraction

from graphs.Enumerator import enumerate_ribbon_graphs
from graphs.Oracle import oracle_edge_profile, oracle_euler, oracle_F, oracle_N, oracle_N_table
from recursion.InitialValues import initial_F03, initial_F11
from tests.golden_polynomials import golden_F04, golden_F12


class TestOracleF(unittest.TestCase):
    def test_initial_values(self):
        self.assertEqual(oracle_F(0, 3), initial_F03())
        self.assertEqual(oracle_F(1, 1), initial_F11())

    def test_level_two(self):
        self.assertEqual(oracle_F(0, 4), golden_F04())
        self.assertEqual(oracle_F(1, 2), golden_F12())

    def test_records_can_be_reused(self):
        records = enumerate_ribbon_graphs(1, 1)
        self.assertEqual(oracle_F(1, 1, records), initial_F11())
        self.assertEqual(oracle_euler(1, 1, records), Fraction(1, 12))


class TestOracleCounts(unittest.TestCase):
    def test_lattice_counts(self):
        self.assertEqual(oracle_N(0, 3, (2, 2, 2)), 1)
        self.assertEqual(oracle_N(1, 1, (4,)), Fraction(1, 4))
        self.assertEqual(oracle_N(0, 4, (2, 2, 2, 2)), 3)
        self.assertEqual(oracle_N(0, 3, (1, 2, 2)), 0)

    def test_table(self):
        table = oracle_N_table(1, 1, 8)
        self.assertEqual(table, {(4,): Fraction(1, 4), (6,): Fraction(2, 3), (8,): Fraction(5, 4)})

    def test_edge_profiles(self):
        self.assertEqual(oracle_edge_profile(0, 3), {2: Fraction(3), 3: Fraction(-4)})
        self.assertEqual(oracle_edge_profile(1, 1), {2: Fraction(1, 4), 3: Fraction(-1, 6)})

    def test_euler(self):
        self.assertEqual(oracle_euler(0, 3), -1)
        self.assertEqual(oracle_euler(1, 1), Fraction(1, 12))


if __name__ == '__main__':
    unittest.main()
