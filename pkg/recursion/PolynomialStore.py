"""
On-disk table of computed Poincare polynomials, one canonical-JSON file per (g, n).
"""

import os
import sys
from typing import List, Optional, Tuple

from algebra.LaurentPoly import LaurentPoly
from analysis.Invariants import run_invariant_suite


class PolynomialStore:
    """Directory of F_g<g>_n<n>.json files; loads are re-validated."""

    def __init__(self, directory: str, verbose: bool = False):
        self.directory = directory
        self.verbose = verbose
        os.makedirs(directory, exist_ok=True)

    def path(self, g: int, n: int) -> str:
        return os.path.join(self.directory, f"F_g{g}_n{n}.json")

    def save(self, g: int, n: int, poly: LaurentPoly):
        path = self.path(g, n)
        tmp = f"{path}.tmp"
        with open(tmp, 'w', encoding='utf-8') as f:
            f.write(poly.to_json())
            f.write("\n")
        os.replace(tmp, path)

    def load(self, g: int, n: int) -> Optional[LaurentPoly]:
        """Return the stored polynomial, or None when absent or invalid."""
        path = self.path(g, n)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r', encoding='utf-8') as f:
                poly = LaurentPoly.from_json(f.read())
        except (OSError, ValueError, KeyError, TypeError) as e:
            print(f"⚠️  Ignoring unreadable cache file {path}: {e}", file=sys.stderr)
            return None

        report = run_invariant_suite(g, n, poly)
        if not report.passed:
            failed = ", ".join(c.check for c in report.failures())
            print(f"⚠️  Cached F_{{{g},{n}}} failed {failed}; recomputing", file=sys.stderr)
            return None
        if self.verbose:
            print(f"✓ Loaded F_{{{g},{n}}} from {path}", file=sys.stderr)
        return poly

    def keys(self) -> List[Tuple[int, int]]:
        found = []
        for name in sorted(os.listdir(self.directory)):
            if name.startswith("F_g") and name.endswith(".json"):
                try:
                    g_part, n_part = name[len("F_g"):-len(".json")].split("_n")
                    found.append((int(g_part), int(n_part)))
                except ValueError:
                    continue
        return sorted(found)
