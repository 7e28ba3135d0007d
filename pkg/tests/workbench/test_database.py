import os
import tempfile
import unittest

from workbench.database import ReportDatabase


class TestReportDatabase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.db = ReportDatabase(os.path.join(self.tmp.name, "nested", "results.db"))

    def tearDown(self):
        self.tmp.cleanup()

    def test_save_and_read_back(self):
        first = self.db.save_run(1, 1, "euler", True, '{"passed": true}')
        second = self.db.save_run(2, 1, "all", False, '{"passed": false}')
        self.assertGreater(second, first)

        runs = self.db.recent_runs()
        self.assertEqual([r.id for r in runs], [second, first])
        self.assertFalse(runs[0].passed)
        self.assertEqual(runs[0].suite, "all")
        self.assertEqual(runs[1].report_json, '{"passed": true}')

    def test_limit_and_filter(self):
        for _ in range(3):
            self.db.save_run(0, 3, "invariants", True, "{}")
        self.db.save_run(0, 4, "invariants", True, "{}")
        self.assertEqual(len(self.db.recent_runs(limit=2)), 2)
        self.assertEqual(len(self.db.runs_for(0, 3)), 3)
        self.assertEqual(self.db.runs_for(5, 5), [])


if __name__ == '__main__':
    unittest.main()
