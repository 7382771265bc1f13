"""Check results for identity verifications.

Verification routines return a CheckResult instead of asserting, so they
serve both as test predicates (truthiness) and as CLI diagnostics (the
detail string names the first counterexample with both values).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return f"FAIL: {self.detail}"


PASS = CheckResult(True)


def fail(where, lhs, rhs) -> CheckResult:
    return CheckResult(False, f"first mismatch at {where}: lhs={lhs}, rhs={rhs}")
