"""
Database module for the history of verification runs.
"""

import os
import sqlite3
from dataclasses import dataclass
from datetime import datetime
from typing import List, Optional


@dataclass
class VerificationRun:
    """One executed verification suite for one (g, n)."""
    g: int
    n: int
    suite: str
    passed: bool
    report_json: str  # VerificationReport.to_json()
    run_date: str
    id: Optional[int] = None


class ReportDatabase:
    """Manages the verification history database."""

    def __init__(self, db_path: str):
        self.db_path = db_path
        directory = os.path.dirname(db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self._init_database()

    def _init_database(self):
        with sqlite3.connect(self.db_path) as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS verification_runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    g INTEGER NOT NULL,
                    n INTEGER NOT NULL,
                    suite TEXT NOT NULL,
                    passed INTEGER NOT NULL,
                    report_json TEXT NOT NULL,
                    run_date TEXT NOT NULL
                )
            """)
            conn.execute("""
                CREATE INDEX IF NOT EXISTS idx_runs_type ON verification_runs (g, n)
            """)

    def save_run(self, g: int, n: int, suite: str, passed: bool, report_json: str) -> int:
        """Record a run and return its row id."""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.execute("""
                INSERT INTO verification_runs (g, n, suite, passed, report_json, run_date)
                VALUES (?, ?, ?, ?, ?, ?)
            """, (g, n, suite, int(passed), report_json, datetime.now().isoformat()))
            return cursor.lastrowid

    def _rows(self, query: str, params: tuple) -> List[VerificationRun]:
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.execute(query, params)
            return [
                VerificationRun(id=row[0], g=row[1], n=row[2], suite=row[3], passed=bool(row[4]),
                                report_json=row[5], run_date=row[6])
                for row in cursor.fetchall()
            ]

    def recent_runs(self, limit: int = 10) -> List[VerificationRun]:
        return self._rows("""
            SELECT id, g, n, suite, passed, report_json, run_date
            FROM verification_runs ORDER BY id DESC LIMIT ?
        """, (limit,))

    def runs_for(self, g: int, n: int) -> List[VerificationRun]:
        return self._rows("""
            SELECT id, g, n, suite, passed, report_json, run_date
            FROM verification_runs WHERE g = ? AND n = ? ORDER BY id DESC
        """, (g, n))
