"""Weighted Motzkin numbers: series, Riordan triangles, inverses, bands.

The Motzkin series mu satisfies mu = 1 + w*t*mu + t^2*mu^2 and is computed by
coefficient recursion, never through a square root, so everything stays in
Z[w].  The grand (unrestricted-height) series is 1/(1 - w*t - 2*t^2*mu),
using the fact that 1 - w*t - 2*t^2*mu equals the radical in the usual
closed form.

The inverse of the Motzkin triangle is produced three independent ways: a
Gegenbauer-type double-binomial sum, a three-term recurrence with exact
integer divisions, and plain triangular inversion.  The row polynomials of
the inverse supply numerator and denominator of the generating function of
path counts confined to 0 <= y < k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    OP_ONE,
    OP_ZERO,
    OmegaPoly,
    RationalGF,
    TPoly,
    TSeries,
    W,
    binom,
)
from .checks import PASS, CheckResult, fail
from .matrices import TriMatrix
from .oracle import CountTable, IndexOutOfTriangle, PathSpec


def motzkin_series(order: int) -> TSeries:
    """Weighted Motzkin numbers M_n as a series, from the quadratic fixed point."""
    m = [OP_ONE]
    for n in range(1, order + 1):
        acc = W * m[n - 1]
        for i in range(n - 1):
            acc = acc + m[i] * m[n - 2 - i]
        m.append(acc)
    return TSeries(m, order)


def grand_motzkin_series(order: int) -> TSeries:
    """Weighted grand Motzkin numbers G_n as a series."""
    mu = motzkin_series(order)
    dm = [OP_ONE, -W] + [-2 * mu.coeff(k - 2) for k in range(2, order + 1)]
    return TSeries(dm[: order + 1], order).inverse()


def catalan(n: int) -> int:
    """Catalan number C_n."""
    return binom(2 * n, n) // (n + 1)


def motzkin_closed(n: int) -> OmegaPoly:
    """M_n by the explicit binomial-Catalan sum (coefficient of w^(n-2k))."""
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = binom(n, 2 * k) * catalan(k)
    return OmegaPoly(coeffs)


def motzkin_from_catalan(n: int) -> int:
    """Weight-1 Motzkin number as the alternating binomial transform of C_{k+1}."""
    return sum(binom(n, k) * (-1) ** (n - k) * catalan(k + 1) for k in range(n + 1))


def motzkin_matrix(n: int) -> TriMatrix:
    """n x n triangle of quadrant path counts; entry (i, j) counts paths to (i, j)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    table = CountTable(PathSpec.quadrant(), n - 1)
    return TriMatrix([[table.value(i, j) for j in range(i + 1)] for i in range(n)])


def grand_matrix(n: int) -> TriMatrix:
    """n x n triangle of grand path counts for heights j >= 0."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    table = CountTable(PathSpec.grand(), n - 1)
    return TriMatrix([[table.value(i, j) for j in range(i + 1)] for i in range(n)])


def motzkin_column_gf(j: int, order: int) -> TSeries:
    """Column j of the Motzkin triangle: mu^(j+1); t^n holds the count to (n+j, j)."""
    if j < 0:
        raise ValueError("height must be nonnegative")
    return motzkin_series(order) ** (j + 1)


def grand_column_gf(j: int, order: int) -> TSeries:
    """Column j of the grand triangle: g * (t*mu)^j; t^n holds the count to (n, j)."""
    if j < 0:
        raise ValueError("height must be nonnegative")
    g = grand_motzkin_series(order)
    if j == 0:
        return g
    mu = motzkin_series(order)
    tmu = TSeries((OP_ZERO,) + mu.coeffs[:order], order)
    return g * tmu**j


def inverse_motzkin_entry(i: int, j: int) -> OmegaPoly:
    """Entry (i, j) of the inverse triangle by the double-binomial sum."""
    if j < 0 or j > i:
        raise IndexOutOfTriangle(f"column {j} outside triangle row {i}")
    d = i - j
    coeffs = [0] * (d + 1)
    for l in range(d // 2 + 1):
        coeffs[d - 2 * l] = (-1) ** (d - l) * binom(i - l, d - l) * binom(d - l, l)
    return OmegaPoly(coeffs)


def inverse_motzkin_entry_rec(i: int, j: int) -> OmegaPoly:
    """Entry (i, j) of the inverse triangle by the three-term recurrence.

    (i-j)*m[i,j] = -w*i*m[i-1,j] - (i+j)*m[i-2,j], starting from m[i,j] =
    delta(i,j) for j >= i.  Every division by (i-j) must be exact in Z[w];
    a remainder raises InexactDivision (it would mean a bug, not bad input).
    """
    if j < 0 or j > i:
        raise IndexOutOfTriangle(f"column {j} outside triangle row {i}")
    prev2, prev = OP_ZERO, OP_ONE  # m[j-1, j], m[j, j]
    for r in range(j + 1, i + 1):
        rhs = -(r * (W * prev)) - (r + j) * prev2
        prev2, prev = prev, rhs.exact_div_int(r - j)
    return prev


def inverse_motzkin_matrix(n: int) -> TriMatrix:
    """Inverse of the n x n Motzkin triangle by forward substitution."""
    return motzkin_matrix(n).inverse_unit_lower()


def inverse_motzkin_poly(k: int) -> TPoly:
    """Row polynomial of the inverse triangle: sum_j m[k,j] t^(k-j).

    Equals sum_l C(k-l, l) (-1)^l t^(2l) (1 - w t)^(k-2l); constant term 1.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    one_minus_wt = TPoly([OP_ONE, -W])
    acc = TPoly(())
    for l in range(k // 2 + 1):
        term = (one_minus_wt ** (k - 2 * l)).shift(2 * l) * ((-1) ** l * binom(k - l, l))
        acc = acc + term
    return acc


@dataclass(frozen=True)
class BandedGF:
    """Rational generating function of path counts confined to 0 <= y < k."""

    k: int
    gf: RationalGF
    level: int = 0  # ending height of the counted paths


def banded_motzkin_gf(k: int) -> BandedGF:
    """Counts of Motzkin paths staying strictly below height k, as num/den.

    Numerator and denominator are the inverse-triangle row polynomials of
    index k-1 and k.
    """
    if k < 1:
        raise ValueError("band height must be >= 1")
    return BandedGF(k, RationalGF(inverse_motzkin_poly(k - 1), inverse_motzkin_poly(k)))


def verify_lemma(i: int, j: int) -> CheckResult:
    """Both triangle-to-sequence expansions at one index pair.

    Checks (symbolically in w):
      quadrant count to (i, j) = sum_{k<=j} m[j,k] M_{i+k}
      m[i,j] = sum_{k<=i-j} m[i+1, j+1+k] M_k
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    mu = motzkin_series(i + j + 1)
    table = CountTable(PathSpec.quadrant(), i)
    lhs1 = table.value(i, j)
    rhs1 = OP_ZERO
    for k in range(j + 1):
        rhs1 = rhs1 + inverse_motzkin_entry(j, k) * mu.coeff(i + k)
    if lhs1 != rhs1:
        return fail(f"count expansion at (i={i}, j={j})", lhs1, rhs1)
    if j <= i:
        lhs2 = inverse_motzkin_entry(i, j)
        rhs2 = OP_ZERO
        for k in range(i - j + 1):
            rhs2 = rhs2 + inverse_motzkin_entry(i + 1, j + 1 + k) * mu.coeff(k)
        if lhs2 != rhs2:
            return fail(f"inverse expansion at (i={i}, j={j})", lhs2, rhs2)
    return PASS


def verify_orthogonality(max_j: int) -> CheckResult:
    """sum_{k<=j} m[j,k] M_{i+k} = delta(i,j) for 0 <= i <= j <= max_j."""
    mu = motzkin_series(2 * max_j + 1)
    inv_rows = [[inverse_motzkin_entry(j, k) for k in range(j + 1)] for j in range(max_j + 1)]
    for j in range(max_j + 1):
        for i in range(j + 1):
            acc = OP_ZERO
            for k in range(j + 1):
                acc = acc + inv_rows[j][k] * mu.coeff(i + k)
            want = OP_ONE if i == j else OP_ZERO
            if acc != want:
                return fail(f"(i={i}, j={j})", acc, want)
    return PASS


def banded_motzkin_recursion_check(k: int, horizon: int) -> CheckResult:
    """Linear recursion equivalent to the banded generating function.

    With counts M^(k) from the oracle and m the inverse-triangle entries:
      sum_{j=0}^{k} M^(k)[n-j] m[k, k-j] = 0            for k <= n <= horizon
      sum_{j=0}^{n} M^(k)[n-j] m[k, k-j] = m[k-1, k-1-n] for 0 <= n < k
    """
    if k < 1:
        raise ValueError("band height must be >= 1")
    table = CountTable(PathSpec.banded(k), horizon)
    counts = [table.value(n, 0) for n in range(horizon + 1)]
    mk = [inverse_motzkin_entry(k, k - j) for j in range(k + 1)]
    for n in range(min(k, horizon + 1)):
        acc = OP_ZERO
        for j in range(n + 1):
            acc = acc + counts[n - j] * mk[j]
        want = inverse_motzkin_entry(k - 1, k - 1 - n)
        if acc != want:
            return fail(f"initial value n={n} (k={k})", acc, want)
    for n in range(k, horizon + 1):
        acc = OP_ZERO
        for j in range(k + 1):
            acc = acc + counts[n - j] * mk[j]
        if not acc.is_zero():
            return fail(f"recursion at n={n} (k={k})", acc, OP_ZERO)
    return PASS


def first_return_check(horizon: int) -> CheckResult:
    """M_{n+2} - w M_{n+1} = sum_{i<=n} M_i M_{n-i}, symbolically, n <= horizon."""
    mu = motzkin_series(horizon + 2)
    sq = mu.truncate(horizon) ** 2
    for n in range(horizon + 1):
        lhs = mu.coeff(n + 2) - W * mu.coeff(n + 1)
        if lhs != sq.coeff(n):
            return fail(f"n={n}", lhs, sq.coeff(n))
    return PASS
