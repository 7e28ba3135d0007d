"""
Structured pass/fail reports shared by every verification routine.
"""

import json
from typing import List, Literal

from pydantic import BaseModel, Field


def gn_label(g: int, n: int) -> str:
    return f"{g},{n}"


class CheckResult(BaseModel):
    """Outcome of one named check on one (g, n)."""
    check: str = Field(description="Name of the check, e.g. 'euler' or 'symmetry'")
    gn: str = Field(description="Type as 'g,n'")
    status: Literal["pass", "fail", "skip"] = Field(description="Outcome")
    detail: str = Field(default="", description="Value compared, or the first mismatch")

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    @classmethod
    def outcome(cls, check: str, g: int, n: int, ok: bool, detail: str = "") -> "CheckResult":
        return cls(check=check, gn=gn_label(g, n), status="pass" if ok else "fail", detail=detail)


class VerificationReport(BaseModel):
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, result: CheckResult) -> "VerificationReport":
        self.checks.append(result)
        return self

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def extend_new(self, other: "VerificationReport") -> "VerificationReport":
        """Extend with the checks of other whose (check, gn) is not already reported."""
        seen = {(c.check, c.gn) for c in self.checks}
        self.checks.extend(c for c in other.checks if (c.check, c.gn) not in seen)
        return self

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.model_dump() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
