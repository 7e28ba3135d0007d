import os
import tempfile
import unittest
from unittest.mock import patch

from pydantic import ValidationError

from workbench.cli import build_parser
from workbench.config import CACHE_DIR_ENV, DB_PATH_ENV, DEFAULT_CACHE_DIR, RunConfig


def parse(argv):
    return RunConfig.from_args(build_parser().parse_args(argv))


class TestRunConfig(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        # Run from an empty directory so no .env file is picked up.
        self.cwd = os.getcwd()
        os.chdir(self.tmp.name)

    def tearDown(self):
        os.chdir(self.cwd)
        self.tmp.cleanup()

    def test_perimeters_are_parsed(self):
        config = parse(["compute-n", "--g", "0", "--n", "3", "--p", "2,2,4"])
        self.assertEqual(config.p, [2, 2, 4])
        self.assertEqual(config.command, "compute-n")

    def test_perimeter_length_must_match(self):
        with self.assertRaises(ValidationError):
            parse(["compute-n", "--g", "0", "--n", "3", "--p", "2,2"])

    def test_perimeters_must_be_positive(self):
        with self.assertRaises(ValidationError):
            parse(["compute-n", "--g", "0", "--n", "3", "--p", "0,2,2"])

    def test_perimeters_must_be_integers(self):
        with self.assertRaises(ValidationError):
            parse(["compute-n", "--g", "0", "--n", "3", "--p", "a,b,c"])

    def test_unstable_type(self):
        with self.assertRaises(ValidationError):
            parse(["compute-f", "--g", "0", "--n", "2"])

    def test_defaults(self):
        with patch.dict(os.environ, {}):
            os.environ.pop(CACHE_DIR_ENV, None)
            os.environ.pop(DB_PATH_ENV, None)
            config = parse(["verify", "--g", "1", "--n", "1"])
        self.assertEqual(config.cache_dir, DEFAULT_CACHE_DIR)
        self.assertEqual(config.db_path, os.path.join(DEFAULT_CACHE_DIR, "results.db"))
        self.assertEqual(config.suite, "all")
        self.assertEqual(config.truncation, 10)
        self.assertEqual(config.guard_e, 6)

    def test_environment_overrides_defaults(self):
        with patch.dict(os.environ, {CACHE_DIR_ENV: "/tmp/env-cache", DB_PATH_ENV: "/tmp/env.db"}):
            config = parse(["history"])
        self.assertEqual(config.cache_dir, "/tmp/env-cache")
        self.assertEqual(config.db_path, "/tmp/env.db")

    def test_flags_override_environment(self):
        with patch.dict(os.environ, {CACHE_DIR_ENV: "/tmp/env-cache"}):
            os.environ.pop(DB_PATH_ENV, None)
            config = parse(["--cache-dir", "/tmp/flag-cache", "history"])
        self.assertEqual(config.cache_dir, "/tmp/flag-cache")
        self.assertEqual(config.db_path, os.path.join("/tmp/flag-cache", "results.db"))

    def test_dotenv_file(self):
        with open(os.path.join(self.tmp.name, ".env"), 'w', encoding='utf-8') as f:
            f.write(f"{CACHE_DIR_ENV}=dotenv-cache\n")
        with patch.dict(os.environ, {}):
            os.environ.pop(CACHE_DIR_ENV, None)
            os.environ.pop(DB_PATH_ENV, None)
            config = parse(["history"])
        self.assertEqual(config.cache_dir, "dotenv-cache")


if __name__ == '__main__':
    unittest.main()
