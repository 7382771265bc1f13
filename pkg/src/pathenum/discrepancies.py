"""Registry of known discrepancies between printed source tables and exact counts.

Published tables of these arrays contain a few transcription slips and one
formula that does not match its own displayed matrix.  Each record below
names the location, the value as printed, and the exact resolution, and
carries a machine check that PROVES the resolution from the brute-force
oracle (or by exact determinant evaluation) instead of trusting either
printed value.  The CLI prints this registry under --typo-ledger, and the
test suite runs every check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import OmegaPoly
from .checks import PASS, CheckResult, fail
from .hankel import HankelSpec, det_fraction_free, hankel_matrix
from .motzkin import banded_motzkin_gf
from .oracle import CountTable, PathSpec
from .schroder import inverse_schroder_entry, inverse_schroder_column_gf


@dataclass(frozen=True)
class Discrepancy:
    key: str
    location: str
    printed: str
    resolved: str
    check: Callable[[], CheckResult]


def _check_grand_mirror() -> CheckResult:
    # The grand table entry at (n, j) = (5, -2) is printed as 20 + 10*w^3,
    # which breaks the mirror symmetry of unrestricted paths; the recursion
    # gives 20*w + 10*w^3, matching the (5, 2) entry.
    table = CountTable(PathSpec.grand(), 5)
    printed = OmegaPoly([20, 0, 0, 10])
    resolved = OmegaPoly([0, 20, 0, 10])
    got = table.value(5, -2)
    if got != resolved:
        return fail("(5,-2)", got, resolved)
    if got != table.value(5, 2):
        return fail("mirror (5,2)", got, table.value(5, 2))
    if got == printed:
        return fail("(5,-2) should differ from the printed value", got, printed)
    return PASS


def _check_banded4_tail() -> CheckResult:
    # The height-4 band table lists 323, 835 at n = 8, 9 (weight 1); the
    # accompanying sequence list has 322, 826 (A005207).  The oracle and the
    # rational generating function both give 322, 826.
    table = CountTable(PathSpec.banded(4), 9)
    got = [table.value(n, 0).evaluate(1) for n in (8, 9)]
    gf = banded_motzkin_gf(4).gf.expand(9).eval_omega(1).int_coeffs()
    if got != [322, 826]:
        return fail("oracle n=8,9", got, [322, 826])
    if gf[8:10] != [322, 826]:
        return fail("generating function n=8,9", gf[8:10], [322, 826])
    if got == [323, 835]:
        return fail("oracle should differ from the table values", got, [323, 835])
    return PASS


def _check_inverse_column_gf() -> CheckResult:
    # The column generating function of the inverse compressed Schroeder
    # triangle is printed as ((1-t)/(1+t))^k, which does not reproduce the
    # displayed matrix; the validated form is t^k ((1-t)/(1+t))^(k+1).
    for k in range(4):
        got = inverse_schroder_column_gf(k, 8).int_coeffs()
        want = [
            inverse_schroder_entry(n, k).evaluate(1) if n >= k else 0 for n in range(9)
        ]
        if got != want:
            return fail(f"validated form, column {k}", got, want)
    # printed form, k = 1: coefficients of (1-t)/(1+t) start 1, -2 while the
    # triangle column starts 0, 1
    printed_k1 = [1, -2]
    want_k1 = [0, inverse_schroder_entry(1, 1).evaluate(1)]
    if printed_k1 == want_k1:
        return fail("printed form unexpectedly matches", printed_k1, want_k1)
    return PASS


def _check_aerated_hankel_delta() -> CheckResult:
    # At weight 0 (pure up/down steps) the determinant of the summed Hankel
    # matrix is claimed to collapse to delta(0,n); exact evaluation gives the
    # period-6 pattern 1, 1, 0, -1, -1, 0, ...
    pattern = [1, 1, 0, -1, -1, 0]
    for n in range(1, 13):
        m = hankel_matrix(HankelSpec(n, alpha=OmegaPoly([1]), beta=OmegaPoly([1])))
        got = det_fraction_free(m.eval_omega(0)).evaluate(0)
        want = pattern[n % 6]
        if got != want:
            return fail(f"dimension {n}", got, want)
    if pattern[1 % 6] == 0:
        return fail("pattern should differ from delta at n=1", pattern[1], 0)
    return PASS


REGISTRY = (
    Discrepancy(
        key="grand-mirror",
        location="grand Motzkin table, entry (n, j) = (5, -2)",
        printed="20 + 10*w^3",
        resolved="20*w + 10*w^3 (equal to the mirrored entry at (5, 2))",
        check=_check_grand_mirror,
    ),
    Discrepancy(
        key="banded4-tail",
        location="height-4 band table, n = 8, 9 (weight 1)",
        printed="323, 835",
        resolved="322, 826 (A005207; oracle and generating function agree)",
        check=_check_banded4_tail,
    ),
    Discrepancy(
        key="inverse-column-gf",
        location="column generating function of the inverse compressed Schroeder triangle (weight 1)",
        printed="((1-t)/(1+t))^k",
        resolved="t^k ((1-t)/(1+t))^(k+1) (reproduces the displayed matrix; A080246)",
        check=_check_inverse_column_gf,
    ),
    Discrepancy(
        key="aerated-hankel-delta",
        location="determinant of the summed Hankel matrix at weight 0",
        printed="delta(0, n)",
        resolved="period-6 pattern 1, 1, 0, -1, -1, 0, ...",
        check=_check_aerated_hankel_delta,
    ),
)


def run_all() -> list:
    """(key, CheckResult) for every registered discrepancy."""
    return [(d.key, d.check()) for d in REGISTRY]
