"""Exact Hankel determinants of weighted Motzkin numbers.

Determinants are computed by fraction-free (Bareiss) elimination over the
integral domain Z[w]; every interior division is exact, and a remainder
raises InexactDivision since it can only mean an implementation bug.  A
naive cofactor expansion is kept as a second, independent determinant
engine for small dimensions.

The determinant of (alpha*M[i+j] + beta*M[i+j+1]) has the closed form
sum_i (-beta)^(n-i) alpha^i m[n,i] over the inverse-triangle entries m;
that polynomial form is used here rather than any radical expression, so
results stay exact in Z[w].
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import OP_ONE, OP_ZERO, OmegaPoly, W, as_opoly, binom
from .checks import PASS, CheckResult, fail
from .matrices import SquareMatrix
from .motzkin import inverse_motzkin_entry, motzkin_series


class _ZeroPivot(Exception):
    """Internal: leading-minor scan hit a zero pivot; caller must fall back."""


def det_fraction_free(m: SquareMatrix) -> OmegaPoly:
    """Exact determinant by Bareiss elimination; dimension 0 gives 1."""
    n = m.n
    if n == 0:
        return OP_ONE
    rows = [list(r) for r in m.rows]
    sign = 1
    prev = OP_ONE
    for k in range(n - 1):
        if rows[k][k].is_zero():
            # zero pivot: swap in a nonzero row below, tracking the sign
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return OP_ZERO
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                elt = pivot * rows[i][j] - rik * rows[k][j]
                rows[i][j] = elt.exact_div(prev) if k else elt
            rows[i][k] = OP_ZERO
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det


def det_cofactor(m: SquareMatrix) -> OmegaPoly:
    """Determinant by cofactor expansion; exponential, for cross-checks only."""

    def rec(rows):
        if len(rows) == 1:
            return rows[0][0]
        acc = OP_ZERO
        sign = 1
        for j in range(len(rows)):
            c = rows[0][j]
            if not c.is_zero():
                sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
                term = c * rec(sub)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    if m.n == 0:
        return OP_ONE
    return rec([list(r) for r in m.rows])


def leading_minor_dets(m: SquareMatrix) -> list:
    """Determinants of all leading principal minors (dimensions 1..n).

    One Bareiss sweep gives every minor when no pivot vanishes; on a zero
    pivot it falls back to independent determinants per dimension.
    """
    n = m.n
    try:
        rows = [list(r) for r in m.rows]
        dets = []
        prev = OP_ONE
        for k in range(n):
            pivot = rows[k][k]
            dets.append(pivot)
            if k == n - 1:
                break
            if pivot.is_zero():
                raise _ZeroPivot
            for i in range(k + 1, n):
                rik = rows[i][k]
                for j in range(k + 1, n):
                    elt = pivot * rows[i][j] - rik * rows[k][j]
                    rows[i][j] = elt.exact_div(prev) if k else elt
            prev = pivot
        return dets
    except _ZeroPivot:
        return [
            det_fraction_free(SquareMatrix([r[: d + 1] for r in m.rows[: d + 1]]))
            for d in range(n)
        ]


@dataclass(frozen=True)
class HankelSpec:
    """Hankel matrix spec: entry (i,j) = alpha*M[i+j+shift] + beta*M[i+j+shift+1]."""

    n: int
    shift: int = 0
    alpha: OmegaPoly = OP_ONE
    beta: OmegaPoly = OP_ZERO

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if self.shift not in (0, 1, 2):
            raise ValueError("shift must be 0, 1 or 2")
        if as_opoly(self.alpha).is_zero() and as_opoly(self.beta).is_zero():
            raise ValueError("alpha and beta cannot both be zero")


def hankel_matrix(spec: HankelSpec) -> SquareMatrix:
    """Build the Hankel matrix of weighted Motzkin numbers for a HankelSpec."""
    n, shift = spec.n, spec.shift
    alpha, beta = as_opoly(spec.alpha), as_opoly(spec.beta)
    mu = motzkin_series(2 * n - 2 + shift + 1)
    seq = [alpha * mu.coeff(k) + beta * mu.coeff(k + 1) for k in range(2 * n - 1 + shift)]
    return SquareMatrix([[seq[i + j + shift] for j in range(n)] for i in range(n)])


def shifted_hankel_closed(n: int, alpha, beta) -> OmegaPoly:
    """Closed form sum_i (-beta)^(n-i) alpha^i m[n,i] for det(alpha*M + beta*M')."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    alpha, beta = as_opoly(alpha), as_opoly(beta)
    acc = OP_ZERO
    apow = OP_ONE
    bpows = [OP_ONE]
    for _ in range(n):
        bpows.append(bpows[-1] * (-beta))
    for i in range(n + 1):
        acc = acc + bpows[n - i] * apow * inverse_motzkin_entry(n, i)
        apow = apow * alpha
    return acc


def shifted_hankel_binomial(n: int, alpha, beta) -> OmegaPoly:
    """Same determinant as sum_k C(n-k,k)(-1)^k beta^(2k) (alpha+beta*w)^(n-2k)."""
    alpha, beta = as_opoly(alpha), as_opoly(beta)
    core = alpha + beta * W
    acc = OP_ZERO
    for k in range(n // 2 + 1):
        acc = acc + (-1) ** k * binom(n - k, k) * beta ** (2 * k) * core ** (n - 2 * k)
    return acc


def second_hankel_closed(n: int) -> OmegaPoly:
    """det (M[i+j+1]) closed form: sum_k C(n-k,k)(-1)^k w^(n-2k)."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * binom(n - k, k)
    return OmegaPoly(coeffs)


def hankel_recursion_check(n: int) -> CheckResult:
    """det(M[i+j+2])_n = det(M[i+j+2])_(n-1) + det(M[i+j+1])_n^2, symbolically.

    Dimension-0 determinants are 1 by convention, which the identity itself
    forces at n = 1.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    shift2 = leading_minor_dets(hankel_matrix(HankelSpec(n, shift=2)))
    shift1 = leading_minor_dets(hankel_matrix(HankelSpec(n, shift=1)))
    for d in range(1, n + 1):
        lhs = shift2[d - 1]
        prev = shift2[d - 2] if d >= 2 else OP_ONE
        rhs = prev + shift1[d - 1] * shift1[d - 1]
        if lhs != rhs:
            return fail(f"dimension {d}", lhs, rhs)
    return PASS
