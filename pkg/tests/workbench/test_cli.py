import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from recursion.InitialValues import initial_F03
from workbench.cli import EXIT_GUARD, EXIT_INVALID_INPUT, EXIT_OK, main


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.base = ["--cache-dir", self.tmp.name, "--db", os.path.join(self.tmp.name, "results.db")]

    def tearDown(self):
        self.tmp.cleanup()

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(self.base + list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_compute_f_json(self):
        code, out, _ = self.run_cli("compute-f", "--g", "0", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, initial_F03().to_json() + "\n")

    def test_compute_f_pretty(self):
        code, out, _ = self.run_cli("compute-f", "--g", "1", "--n", "1", "--format", "pretty")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "-1/384*t^3 + 3/128*t + 1/24 + 3/128*t^-1 - 1/384*t^-3")

    def test_unstable_type(self):
        code, _, err = self.run_cli("compute-f", "--g", "0", "--n", "2")
        self.assertEqual(code, EXIT_INVALID_INPUT)
        self.assertIn("Invalid input", err)

    def test_compute_n(self):
        self.assertEqual(self.run_cli("compute-n", "--g", "1", "--n", "1", "--p", "6")[1], "2/3\n")
        self.assertEqual(self.run_cli("compute-n", "--g", "1", "--n", "1", "--p", "3")[1], "0/1\n")
        self.assertTrue(os.path.exists(os.path.join(self.tmp.name, "lattice.json")))

    def test_compute_n_box(self):
        code, out, _ = self.run_cli("compute-n", "--g", "0", "--n", "3", "--box", "4")
        self.assertEqual(code, EXIT_OK)
        rows = out.strip().split("\n")
        self.assertEqual(len(rows), 64)
        self.assertIn("0\t3\t1\t1\t2\t1/1", rows)

    def test_compute_n_bad_perimeters(self):
        code, _, _ = self.run_cli("compute-n", "--g", "0", "--n", "3", "--p", "0,1,1")
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_verify(self):
        code, out, _ = self.run_cli("verify", "--g", "2", "--n", "1", "--suite", "euler")
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report["passed"])
        self.assertIn("expected -1/120", report["checks"][0]["detail"])

    def test_verify_oracle_guard(self):
        code, _, err = self.run_cli("verify", "--g", "3", "--n", "1", "--suite", "oracle")
        self.assertEqual(code, EXIT_GUARD)
        self.assertIn("guard", err)

    def test_intersections(self):
        code, out, _ = self.run_cli("intersections", "--g", "1", "--n", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "1\t1\t1/24\n")

    def test_graphs(self):
        code, out, _ = self.run_cli("graphs", "--g", "1", "--n", "1")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().split("\n")
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[0].startswith("e=2 "))
        self.assertTrue(lines[1].endswith("aut=6"))

    def test_sweep_and_history(self):
        code, out, _ = self.run_cli("sweep", "--max-level", "2", "--suite", "invariants")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(sorted(json.loads(out)), ["0,3", "0,4", "1,1", "1,2"])
        code, out, _ = self.run_cli("history", "--limit", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.strip().split("\n")), 2)
        self.assertIn("invariants\tpass", out)

    def test_empty_history(self):
        code, out, err = self.run_cli("history")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "")
        self.assertIn("No verification runs", err)

    def test_no_command(self):
        code, _, _ = self.run_cli()
        self.assertEqual(code, EXIT_INVALID_INPUT)

    def test_invalid_cached_polynomial_is_recomputed(self):
        path = os.path.join(self.tmp.name, "polynomials", "F_g1_n1.json")
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write('{"nvars": 1, "terms": [{"exp": [1], "coeff": "1/1"}]}')
        code, out, _ = self.run_cli("verify", "--g", "1", "--n", "1", "--suite", "invariants")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["passed"])


if __name__ == '__main__':
    unittest.main()
