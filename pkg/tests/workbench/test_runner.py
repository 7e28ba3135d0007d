import os
import tempfile
import unittest

from graphs.Enumerator import EnumerationGuardError
from workbench.runner import VerificationRunner, laplace_order, positive_vectors


class TestRunnerHelpers(unittest.TestCase):
    def test_laplace_order(self):
        self.assertEqual(laplace_order(1, 10), 10)
        self.assertEqual(laplace_order(4, 10), 10)
        self.assertEqual(laplace_order(5, 10), 6)

    def test_positive_vectors(self):
        self.assertEqual(list(positive_vectors(2, 3)), [(1, 1), (1, 2), (2, 1)])
        self.assertEqual(list(positive_vectors(0, 3)), [()])


class TestVerificationRunner(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.db_path = os.path.join(self.tmp.name, "results.db")
        self.runner = VerificationRunner(self.tmp.name, db_path=self.db_path)

    def tearDown(self):
        self.tmp.cleanup()

    def test_all_suites_pass_for_1_1(self):
        report = self.runner.run_suite(1, 1, "all", truncation=8, max_sum=12)
        self.assertTrue(report.passed, report.to_json())
        checks = {c.check for c in report.checks}
        for name in ["symmetry", "euler", "euler_zeta", "laplace", "oracle_F", "oracle_N",
                     "oracle_euler", "diagonal", "positivity"]:
            self.assertIn(name, checks)
        names = [c.check for c in report.checks]
        self.assertEqual(len(names), len(set(names)))
        diagonal = next(c for c in report.checks if c.check == "diagonal")
        self.assertIn("match graphs", diagonal.detail)
        self.assertEqual(len(self.runner.db.runs_for(1, 1)), 1)

    def test_oracle_beyond_guard(self):
        report = self.runner.run_suite(2, 1, "all", truncation=6)
        self.assertTrue(report.passed, report.to_json())
        statuses = {c.check: c.status for c in report.checks}
        self.assertEqual(statuses["oracle"], "skip")
        with self.assertRaises(EnumerationGuardError):
            self.runner.run_suite(2, 1, "oracle")

    def test_unknown_suite(self):
        with self.assertRaises(ValueError):
            self.runner.run_suite(1, 1, "bogus")

    def test_intersections_include_lower_type(self):
        table = self.runner.intersection_table(1, 2)
        self.assertTrue(table.has_type(1, 1))
        self.assertTrue(self.runner.check_intersections(1, 2).passed)

    def test_sweep(self):
        results = self.runner.sweep(2, suite="euler")
        self.assertEqual(list(results), [(0, 3), (1, 1), (0, 4), (1, 2)])
        self.assertTrue(all(report.passed for report in results.values()))
        self.assertEqual(len(self.runner.db.recent_runs(limit=10)), 4)

    def test_lattice_cache_is_persisted(self):
        self.runner.counter.compute(1, 2, (4, 4))
        self.runner.save_lattice_cache()
        reloaded = VerificationRunner(self.tmp.name)
        self.assertEqual(len(reloaded.counter), len(self.runner.counter))

    def test_polynomials_are_cached_on_disk(self):
        self.runner.recursion.compute(1, 2)
        self.assertIn((1, 2), self.runner.store.keys())


if __name__ == '__main__':
    unittest.main()
