"""Paths with horizontal steps of length w; Schroeder and Delannoy structure.

The step set is {up, down, horizontal (w,0)} with weight w on horizontal
steps.  The column generating functions come from a Fibonacci-like linear
recursion whose solution is expressed through the normalized polynomials

    P_n(t) = sum_j C(n-j, j) (-1)^j t^(2j) (1 - omega t^w)^(n-2j)

with constant term 1; the counts confined to 0 <= y < k have generating
function P_(k-1)/P_k.  For w = 2 ("Schroeder paths") the parity zeros are
removed by t^2 -> t; the compressed triangle, its inverse (via Lagrange
inversion in closed form), Delannoy numbers and polynomials, and the
Laurent-series identity linking the band generating function to the
top-of-band column all live here.

Operations marked weight-1-only implement identities that simply do not
hold for symbolic weight; they take no weight argument at all.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    OP_ONE,
    OP_ZERO,
    TP_ONE,
    InexactDivision,
    LaurentSeries,
    OmegaPoly,
    RationalGF,
    TPoly,
    TSeries,
    W,
    binom,
    binom_general,
)
from .checks import PASS, CheckResult, fail
from .matrices import TriMatrix
from .oracle import CountTable, IndexOutOfTriangle, PathSpec, compressed_series

ONE_MINUS_T = TPoly([1, -1])


@dataclass(frozen=True)
class PPoly:
    """Normalized band polynomial t^n p_n(t) for step length w; constant term 1."""

    n: int
    w: int
    poly: TPoly


@dataclass(frozen=True)
class SPoly:
    """Inverse-triangle row polynomial s_n(t); coefficient of t^(n-k) is s[n,k]."""

    n: int
    poly: TPoly


@dataclass(frozen=True)
class DPoly:
    """Delannoy polynomial d_k(t) = sum_j D(k-j, j) t^j; d_k(0) = 1, degree k."""

    k: int
    poly: TPoly


def w_series(w: int, order: int) -> TSeries:
    """Quadrant path counts at height 0, from mu = 1 + omega t^w mu + t^2 mu^2."""
    if w < 1:
        raise ValueError("horizontal step length must be positive")
    m = [OP_ONE]
    for n in range(1, order + 1):
        acc = W * m[n - w] if n >= w else OP_ZERO
        for i in range(n - 1):
            acc = acc + m[i] * m[n - 2 - i]
        m.append(acc)
    return TSeries(m, order)


def schroder_series(order: int) -> TSeries:
    """Compressed w=2 counts at height 0: mu = 1 + omega t mu + t mu^2."""
    m = [OP_ONE]
    for n in range(1, order + 1):
        acc = W * m[n - 1]
        for i in range(n):
            acc = acc + m[i] * m[n - 1 - i]
        m.append(acc)
    return TSeries(m, order)


def w_p_poly(n: int, w: int) -> PPoly:
    """Normalized t^n p_n(t) = sum_j C(n-j,j) (-1)^j t^(2j) (1 - omega t^w)^(n-2j)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    base = TPoly([OP_ONE] + [OP_ZERO] * (w - 1) + [-W])  # 1 - omega t^w
    acc = TPoly(())
    for j in range(n // 2 + 1):
        acc = acc + (base ** (n - 2 * j)).shift(2 * j) * ((-1) ** j * binom(n - j, j))
    return PPoly(n, w, acc)


def compressed_p_poly(n: int) -> PPoly:
    """w=2 band polynomial after t^2 -> t: sum_j C(n-j,j)(-1)^j t^j (1-omega t)^(n-2j)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    base = TPoly([OP_ONE, -W])
    acc = TPoly(())
    for j in range(n // 2 + 1):
        acc = acc + (base ** (n - 2 * j)).shift(j) * ((-1) ** j * binom(n - j, j))
    return PPoly(n, 2, acc)


def w_column_gf(j: int, w: int, order: int) -> TSeries:
    """Quadrant counts ending at height j: coefficient of t^n counts paths to (n, j).

    Computed as t^(-j) (mu_w P_j - P_(j-1)); the j lowest coefficients of the
    Laurent numerator vanish identically, which shift_down re-checks.  The
    index alignment (no offset) is calibrated against the oracle.
    """
    if j < 0:
        raise ValueError("height must be nonnegative")
    mu = w_series(w, order + j)
    pj = w_p_poly(j, w).poly
    pjm1 = w_p_poly(j - 1, w).poly if j >= 1 else TPoly(())
    return (mu * pj - pjm1).shift_down(j)


def compressed_column_gf(j: int, order: int) -> TSeries:
    """Compressed w=2 counts ending at height j.

    Coefficient of t^n is the compressed-triangle entry (n+j, j), i.e. the
    count of quadrant w=2 paths to (2n+j, j); calibrated against the oracle.
    """
    if j < 0:
        raise ValueError("height must be nonnegative")
    mu = schroder_series(order + j)
    pj = compressed_p_poly(j).poly
    pjm1 = compressed_p_poly(j - 1).poly if j >= 1 else TPoly(())
    return (mu * pj - pjm1).shift_down(j)


def banded_w_gf(k: int, w: int) -> RationalGF:
    """Counts below height k as P_(k-1)/P_k; t^n counts paths to (n, 0)."""
    if k < 1:
        raise ValueError("band height must be >= 1")
    return RationalGF(w_p_poly(k - 1, w).poly, w_p_poly(k, w).poly)


def banded_schroder_series(k: int, order: int) -> TSeries:
    """Compressed banded w=2 counts at height 0, symbolic weight."""
    if k < 1:
        raise ValueError("band height must be >= 1")
    gf = RationalGF(compressed_p_poly(k - 1).poly, compressed_p_poly(k).poly)
    return gf.expand(order)


def schroder_matrix_compressed(n: int) -> TriMatrix:
    """n x n compressed Schroeder triangle; entry (i,j) = compressed count (i,j)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    table = CountTable(PathSpec.quadrant(w=2), 2 * n - 2)
    return TriMatrix(
        [[table.value(2 * i - j, j) for j in range(i + 1)] for i in range(n)]
    )


def inverse_schroder_entry(k: int, j: int) -> OmegaPoly:
    """Entry s[k,j] of the inverse compressed triangle, in closed form.

    s[k,j] = (-1)^(k-j) sum_m C(k+1-2m, k-j-m) (j+1)/(k-m+1) C(k-m+1, m)
             omega^(k-j-m).

    The rational factors always cancel; a non-integral coefficient raises
    InexactDivision (bug sentinel, not a data error).
    """
    if j < 0 or j > k:
        raise IndexOutOfTriangle(f"column {j} outside triangle row {k}")
    d = k - j
    coeffs = [0] * (d + 1)
    sign = (-1) ** d
    for m in range(d + 1):
        c = (
            Fraction(j + 1, k - m + 1)
            * binom(k + 1 - 2 * m, d - m)
            * binom(k - m + 1, m)
        )
        if c.denominator != 1:
            raise InexactDivision(f"s[{k},{j}]: non-integral term at m={m}: {c}")
        coeffs[d - m] = sign * c.numerator
    return OmegaPoly(coeffs)


def inverse_schroder_poly(n: int) -> SPoly:
    """Row polynomial s_n(t) = sum_k s[n,k] t^(n-k) by its explicit m-sum.

    The rational prefactors are accumulated exactly and must cancel in the
    total; a non-integral final coefficient raises InexactDivision.  The
    m = (n+1)/2 term of odd n, whose printed form carries (1 - omega t)^(-1),
    reduces algebraically to (-1)^m t^m and is added in that form.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    acc = defaultdict(Fraction)  # (t power, omega power) -> coefficient
    for m in range(n + 1):
        if 2 * m == n + 1:
            acc[(m, 0)] += (-1) ** m
            continue
        if 2 * m > n + 1:
            continue  # C(n-m+1, m) vanishes
        r = Fraction(binom(n - m + 1, m), n - m + 1) * (-1) ** (m + 1)
        if not r:
            continue
        for a in range(n - 2 * m + 1):
            base = r * binom(n - 2 * m, a) * (-1) ** a
            # base * omega^a t^(m+a) * (m omega t + (m - n - 1))
            if m:
                acc[(m + a + 1, a + 1)] += base * m
            acc[(m + a, a)] += base * (m - n - 1)
    tmax = max(p for p, _ in acc) if acc else 0
    cols = []
    for p in range(tmax + 1):
        wmax = max((wp for (tp, wp) in acc if tp == p), default=-1)
        vec = [0] * (wmax + 1)
        for wp in range(wmax + 1):
            c = acc.get((p, wp), Fraction(0))
            if c.denominator != 1:
                raise InexactDivision(f"s_{n}: non-integral coefficient at t^{p} w^{wp}: {c}")
            vec[wp] = c.numerator
        cols.append(OmegaPoly(vec))
    return SPoly(n, TPoly(cols))


def inverse_schroder_matrix(n: int) -> TriMatrix:
    """Inverse of the compressed triangle by forward substitution."""
    return schroder_matrix_compressed(n).inverse_unit_lower()


def inverse_schroder_column_gf(k: int, order: int) -> TSeries:
    """Weight-1 column generating function of the inverse compressed triangle.

    The validated form is t^k ((1-t)/(1+t))^(k+1): its t^n coefficient equals
    s[n,k] at weight 1 for n >= k.  (The frequently printed variant
    ((1-t)/(1+t))^k does not reproduce the triangle; see the discrepancy
    registry.)
    """
    if k < 0:
        raise ValueError("column must be nonnegative")
    num = (ONE_MINUS_T ** (k + 1)).shift(k)
    den = TPoly([1, 1]) ** (k + 1)
    return RationalGF(num, den).expand(order)


def delannoy_number(n: int, k: int) -> OmegaPoly:
    """Weighted Delannoy number D(n,k) = sum_l C(k,l) C(n+k-l, k) omega^l."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    coeffs = [0] * (min(n, k) + 1)
    for l in range(min(n, k) + 1):
        coeffs[l] = binom(k, l) * binom(n + k - l, k)
    return OmegaPoly(coeffs)


def delannoy_poly(k: int) -> DPoly:
    """Delannoy polynomial d_k(t) = sum_l C(k-l,l) omega^l t^l (1+t)^(k-2l)."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    cols = [[0] * (k // 2 + 1) for _ in range(k + 1)]  # [t power][omega power]
    for l in range(k // 2 + 1):
        c = binom(k - l, l)
        for a in range(k - 2 * l + 1):
            cols[l + a][l] += c * binom(k - 2 * l, a)
    return DPoly(k, TPoly([OmegaPoly(v) for v in cols]))


def _d_neg_at1(k: int) -> TPoly:
    """d_k(-t) specialized to weight 1; zero polynomial for k < 0."""
    if k < 0:
        return TPoly(())
    return delannoy_poly(k).poly.eval_omega(1).at_neg_t()


def _s_at1(n: int) -> TPoly:
    """s_n(t) at weight 1; zero polynomial for n < 0."""
    if n < 0:
        return TPoly(())
    return inverse_schroder_poly(n).poly.eval_omega(1)


def banded_schroder_gf(k: int) -> RationalGF:
    """Weight-1 compressed banded counts as d_(k-1)(-t) / d_k(-t)."""
    if k < 1:
        raise ValueError("band height must be >= 1")
    return RationalGF(_d_neg_at1(k - 1), _d_neg_at1(k))


def banded_schroder_gf_via_s(k: int) -> RationalGF:
    """Weight-1 compressed banded counts assembled from the s polynomials.

    Numerator:   (1-t) sum_i t^(2i) (-1)^i s_(k-2-2i) + [k odd] (-1)^((k-1)/2) t^(k-1)
    Denominator: (1-t) sum_i t^(2i) (-1)^i s_(k-1-2i) + [k even] (-1)^(k/2) t^k
    """
    if k < 1:
        raise ValueError("band height must be >= 1")

    def assemble(top: int, tail_deg: int, tail_on: bool, tail_sign: int) -> TPoly:
        acc = TPoly(())
        i = 0
        while top - 2 * i >= 0:
            acc = acc + _s_at1(top - 2 * i).shift(2 * i) * ((-1) ** i)
            i += 1
        acc = ONE_MINUS_T * acc
        if tail_on:
            acc = acc + (TP_ONE * tail_sign).shift(tail_deg)
        return acc

    num = assemble(k - 2, k - 1, k % 2 == 1, (-1) ** ((k - 1) // 2))
    den = assemble(k - 1, k, k % 2 == 0, (-1) ** (k // 2))
    return RationalGF(num, den)


def delannoy_recursion_check(horizon: int) -> CheckResult:
    """D(n,n+j) = omega D(n-1,n-1+j) + D(n,n+j-1) + D(n-1,n+j), symbolically."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    cache = {}

    def d(n, k):
        if (n, k) not in cache:
            cache[(n, k)] = delannoy_number(n, k)
        return cache[(n, k)]

    for n in range(1, horizon + 1):
        for j in range(horizon + 1):
            lhs = d(n, n + j)
            rhs = W * d(n - 1, n - 1 + j) + d(n, n + j - 1) + d(n - 1, n + j)
            if lhs != rhs:
                return fail(f"(n={n}, j={j})", lhs, rhs)
    return PASS


def delannoy_s_bridge_check(n: int) -> CheckResult:
    """The four weight-1 identities tying s, d and the band polynomials at index n.

    1. (1-t) s_n = t^2 d_(n-1)(-t) + d_(n+1)(-t), with the division by (1-t)
       performed exactly (InexactDivision on remainder);
    2. s_n = d_n(-t) - t d_(n-1)(-t);
    3. the normalized compressed band polynomial of index n equals d_n(-t);
    4. d_(n-1)(-t) = t d_(n-1)(-t) + t d_(n-2)(-t) + d_n(-t).
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    sn = _s_at1(n)
    rhs1 = _d_neg_at1(n - 1).shift(2) + _d_neg_at1(n + 1)
    if rhs1.exact_div(ONE_MINUS_T) != sn:
        return fail(f"quotient identity at n={n}", rhs1.exact_div(ONE_MINUS_T), sn)
    rhs2 = _d_neg_at1(n) - _d_neg_at1(n - 1).shift(1)
    if sn != rhs2:
        return fail(f"difference identity at n={n}", sn, rhs2)
    pn = compressed_p_poly(n).poly.eval_omega(1)
    if pn != _d_neg_at1(n):
        return fail(f"band-polynomial bridge at n={n}", pn, _d_neg_at1(n))
    lhs4 = _d_neg_at1(n - 1)
    rhs4 = _d_neg_at1(n - 1).shift(1) + _d_neg_at1(n - 2).shift(1) + _d_neg_at1(n)
    if lhs4 != rhs4:
        return fail(f"three-term recursion at n={n}", lhs4, rhs4)
    return PASS


def theorem_schroeder_check(k: int, order: int) -> CheckResult:
    """Band series times s_(k-1), viewed in t^(-k)-shifted Laurent form.

    At weight 1 and band k >= 2, with S the compressed banded series:
      principal part of t^(-k) S s_(k-1)  =  t^(-k) s_(k-2)
      regular coefficient of t^n          =  compressed banded count of
                                             paths of length n+k-1 ending at
                                             height k-1 (oracle-checked).
    Equivalently S*s_(k-1) - s_(k-2) = sum_n count(n, k-1) t^(n+1); the
    alignment is calibrated on the oracle.
    """
    if k < 2:
        raise ValueError("band height must be >= 2 (no s polynomial of index -1)")
    top = order + k
    series = banded_schroder_gf(k).expand(top)
    product = series * _s_at1(k - 1)
    skm2 = _s_at1(k - 2)

    laurent = LaurentSeries.from_series(product, -k)
    principal, regular = laurent.split()
    want_principal = LaurentSeries(-k, skm2.coeffs)
    if principal != want_principal:
        return fail(f"principal part (k={k})", principal, want_principal)

    col = compressed_series(k - 1, top - 1, band=k).eval_omega(1)
    for n in range(order + 1):
        got = regular.coeff(n)
        want = col.coeff(n + k - 1)
        if got != want:
            return fail(f"regular coefficient t^{n} (k={k})", got, want)

    diff = product - skm2
    for m in range(top + 1):
        want = col.coeff(m - 1) if m >= 1 else OP_ZERO
        if diff.coeff(m) != want:
            return fail(f"shifted column identity t^{m} (k={k})", diff.coeff(m), want)
    return PASS


def gould_identity_check(k: int, m: int) -> CheckResult:
    """Half-integer binomial identity, exact rational arithmetic.

    sum_l C(k+1,l) C(l/2, m) = (k+1)/(k-2m+1) C(k-m, m) 2^(k+1-2m),
    for 0 <= m <= k/2.
    """
    if not 0 <= 2 * m <= k:
        raise ValueError("need 0 <= m <= k/2")
    lhs = sum(
        (binom(k + 1, l) * binom_general(Fraction(l, 2), m) for l in range(k + 2)),
        Fraction(0),
    )
    rhs = Fraction(k + 1, k - 2 * m + 1) * binom(k - m, m) * 2 ** (k + 1 - 2 * m)
    if lhs != rhs:
        return fail(f"(k={k}, m={m})", lhs, rhs)
    return PASS
