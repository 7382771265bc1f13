"""Exact algebra layer: scalars, series, Laurent split, rational expansion."""

import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathenum.algebra import (
    OP_ONE,
    InexactDivision,
    LaurentSeries,
    NonUnitConstant,
    OmegaPoly,
    RationalGF,
    TPoly,
    TSeries,
    W,
    binom_general,
    laurent_split,
    series_from_rational,
    series_inv,
    series_mul,
    substitute_neg_t,
)
from conftest import random_opoly

opolys = st.lists(st.integers(-9, 9), min_size=0, max_size=5).map(OmegaPoly)


class TestOmegaPoly:
    def test_difference_of_squares(self):
        assert (W + 1) * (W - 1) == OmegaPoly([-1, 0, 1])

    def test_add(self):
        assert OmegaPoly([2, 0, 1]) + OmegaPoly([0, 0, 1]) == OmegaPoly([2, 0, 2])

    def test_square_of_one_plus_w(self):
        # (1 + w)^2; 1 + w is the compressed Schroeder entry at (2, 0)
        assert (1 + W) * (1 + W) == OmegaPoly([1, 2, 1])

    def test_eval(self):
        p = OmegaPoly([2, 0, 6, 0, 1])
        assert p.evaluate(1) == 9
        assert OmegaPoly([6, 6, 1]).evaluate(1) == 13  # central Delannoy D(2,2)

    def test_eval_at_zero_gives_constant_term(self, rng):
        for _ in range(50):
            p = random_opoly(rng)
            assert p.evaluate(0) == (p.coeffs[0] if p.coeffs else 0)

    def test_canonical_form(self):
        assert OmegaPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert OmegaPoly([0, 0]).coeffs == ()
        assert OmegaPoly([]).is_zero()
        assert OmegaPoly([0]).degree == -1

    def test_ring_laws_randomized(self):
        # associativity, commutativity, distributivity on >= 1000 cases
        rng = random.Random(12345)
        for _ in range(1000):
            a, b, c = (random_opoly(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c

    def test_series_ring_laws_randomized(self):
        rng = random.Random(54321)
        for _ in range(1000):
            a, b, c = (
                TSeries([random_opoly(rng, max_deg=2, max_abs=5) for _ in range(4)], 3)
                for _ in range(3)
            )
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a

    def test_exact_div(self):
        assert ((W + 1) * (W - 1)).exact_div(W - 1) == W + 1
        with pytest.raises(InexactDivision):
            (W * W).exact_div(W + 2)
        with pytest.raises(InexactDivision):
            OmegaPoly([1, 1]).exact_div_int(2)
        assert OmegaPoly([2, -4]).exact_div_int(2) == OmegaPoly([1, -2])

    def test_rendering(self):
        assert str(OmegaPoly([2, 0, 6, 0, 1])) == "2 + 6*w^2 + w^4"
        assert str(OmegaPoly([])) == "0"
        assert str(OmegaPoly([-1, 0, 1])) == "-1 + w^2"
        assert str(W) == "w"
        assert str(OmegaPoly([0, 2, 0, -1])) == "2*w - w^3"

    def test_json_roundtrip_big_integers(self):
        p = OmegaPoly([10**40, -(3**50), 0, 7])
        enc = json.dumps(p.to_json())
        assert OmegaPoly.from_json(json.loads(enc)) == p
        assert p.to_json()[0] == str(10**40)


class TestTSeries:
    def test_mul_identity(self, rng):
        for _ in range(20):
            a = TSeries([random_opoly(rng) for _ in range(6)], 5)
            one = TSeries([OP_ONE], 5)
            assert series_mul(a, one) == a

    def test_motzkin_square_low_coefficients(self):
        # (1 + t + 2t^2 + 4t^3)^2 by hand convolution; the t^3 coefficient
        # 12 is also the weight-1 count of quadrant paths to (4, 1)
        mu1 = TSeries([1, 1, 2, 4], 3)
        assert series_mul(mu1, mu1).eval_omega(0).int_coeffs() == [1, 2, 5, 12]

    def test_one_plus_t_times_one_minus_t(self):
        a = TSeries([1, 1, 0], 2)
        b = TSeries([1, -1, 0], 2)
        assert (a * b).eval_omega(0).int_coeffs() == [1, 0, -1]

    def test_order_is_min_of_operands(self):
        a = TSeries([1] * 6, 5)
        b = TSeries([1] * 4, 3)
        assert (a * b).order == 3
        assert (a + b).order == 3
        assert (a - b).order == 3

    def test_coefficients_beyond_order_unreadable(self):
        a = TSeries([1, 2], 1)
        with pytest.raises(IndexError):
            a.coeff(2)

    def test_inverse_of_chebyshev_denominator(self):
        phi = TSeries([OP_ONE, W, OP_ONE], 5)  # 1 + w t + t^2
        inv = series_inv(phi)
        # long division: 1, -w, w^2 - 1, -w^3 + 2w, ...
        assert inv.coeff(0) == OP_ONE
        assert inv.coeff(1) == -W
        assert inv.coeff(2) == OmegaPoly([-1, 0, 1])
        assert inv.coeff(3) == OmegaPoly([0, 2, 0, -1])
        assert inv.eval_omega(1).int_coeffs() == [1, -1, 0, 1, -1, 0]

    def test_inverse_of_one_minus_t(self):
        inv = series_inv(TSeries([1, -1] + [0] * 6, 7))
        assert inv.eval_omega(0).int_coeffs() == [1] * 8

    def test_inverse_requires_unit_constant(self):
        with pytest.raises(NonUnitConstant):
            series_inv(TSeries([2, 1], 3))
        with pytest.raises(NonUnitConstant):
            series_inv(TSeries([W, 1], 3))

    def test_inverse_is_two_sided(self, rng):
        one = TSeries([OP_ONE], 6)
        for _ in range(40):
            coeffs = [random_opoly(rng) for _ in range(7)]
            coeffs[0] = OP_ONE if rng.random() < 0.5 else -OP_ONE
            a = TSeries(coeffs, 6)
            inv = series_inv(a)
            assert a * inv == one
            assert inv * a == one

    def test_negative_constant_inverse(self):
        a = TSeries([-1, 1, 1], 4)
        assert (a * series_inv(a)) == TSeries([OP_ONE], 4)

    def test_json_roundtrip(self):
        ts = TSeries([OmegaPoly([1]), W, OmegaPoly([1, 0, 1])], 2)
        assert TSeries.from_json(json.loads(json.dumps(ts.to_json()))) == ts


class TestRationalGF:
    def test_banded_schroder_two(self):
        r = RationalGF(TPoly([1, -1]), TPoly([1, -3, 1]))
        assert series_from_rational(r, 4).eval_omega(0).int_coeffs() == [1, 2, 5, 13, 34]

    def test_banded_motzkin_four(self):
        r = RationalGF(TPoly([1, -3, 1, 1]), TPoly([1, -4, 3, 2, -1]))
        got = series_from_rational(r, 9).eval_omega(0).int_coeffs()
        assert got == [1, 1, 2, 4, 9, 21, 51, 127, 322, 826]

    def test_p_over_p_is_one(self):
        p = TPoly([OP_ONE, W, OmegaPoly([3])])
        assert series_from_rational(RationalGF(p, p), 6) == TSeries([OP_ONE], 6)

    def test_requires_unit_denominator_constant(self):
        with pytest.raises(NonUnitConstant):
            RationalGF(TPoly([1]), TPoly([2, 1])).expand(3)

    def test_denominator_times_expansion_is_numerator(self, rng):
        for _ in range(30):
            num = TPoly([random_opoly(rng) for _ in range(3)])
            den_c = [random_opoly(rng) for _ in range(3)]
            den_c[0] = OP_ONE if rng.random() < 0.5 else -OP_ONE
            den = TPoly(den_c)
            n = 8
            expansion = RationalGF(num, den).expand(n)
            assert den.to_series(n) * expansion == num.to_series(n)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
           st.lists(st.integers(-5, 5), min_size=0, max_size=3),
           st.integers(0, 8), st.integers(0, 8))
    @settings(max_examples=120, deadline=None)
    def test_truncation_consistency(self, den_tail, num, n1, n2):
        lo, hi = sorted((n1, n2))
        r = RationalGF(TPoly(num), TPoly([1] + den_tail[1:]))
        assert r.expand(hi).truncate(lo) == r.expand(lo)


class TestLaurent:
    def test_split_with_principal_and_regular(self):
        x = LaurentSeries(-4, [1, -4, 2, 0, 1, 7])  # t^-4 - 4t^-3 + 2t^-2 + 1 + 7t
        principal, regular = laurent_split(x)
        assert principal == LaurentSeries(-4, [1, -4, 2])
        assert regular == TSeries([1, 7], 1)

    def test_split_pure_series(self):
        ts = TSeries([3, 0, 5], 2)
        principal, regular = laurent_split(LaurentSeries.from_series(ts))
        assert principal.is_zero()
        assert regular == ts

    def test_cancellation(self):
        # t^-1 (t + t^2) = 1 + t
        x = LaurentSeries(-1, [0, 1, 1])
        principal, regular = laurent_split(x)
        assert principal.is_zero()
        assert regular == TSeries([1, 1], 1)

    @given(st.integers(-5, 0), st.lists(st.integers(-9, 9), min_size=1, max_size=9))
    @settings(max_examples=150, deadline=None)
    def test_split_parts_sum_to_input(self, min_exp, coeffs):
        x = LaurentSeries(min_exp, coeffs)
        principal, regular = laurent_split(x)
        back = principal + LaurentSeries.from_series(regular)
        assert back == x


class TestSubstituteNegT:
    def test_delannoy_polynomial_example(self):
        d3 = TPoly([1, 5, 5, 1])
        assert substitute_neg_t(d3) == TPoly([1, -5, 5, -1])

    def test_even_polynomial_unchanged(self):
        p = TPoly([2, 0, 3, 0, 1])
        assert substitute_neg_t(p) == p

    @given(st.lists(st.integers(-9, 9), max_size=8))
    @settings(max_examples=150, deadline=None)
    def test_involution(self, coeffs):
        p = TPoly(coeffs)
        assert substitute_neg_t(substitute_neg_t(p)) == p


class TestBinomGeneral:
    def test_half_integer(self):
        assert binom_general(Fraction(1, 2), 1) == Fraction(1, 2)
        assert binom_general(Fraction(3, 2), 2) == Fraction(3, 8)

    def test_matches_integer_binomial(self):
        for n in range(10):
            for k in range(n + 2):
                expected = Fraction(math.comb(n, k)) if k <= n else Fraction(0)
                assert binom_general(n, k) == expected

    def test_k_zero(self):
        assert binom_general(Fraction(-7, 3), 0) == 1


class TestTPolyDivision:
    def test_exact_quotient(self):
        num = TPoly([1, -1]) * TPoly([OP_ONE, W, OmegaPoly([2])])
        assert num.exact_div(TPoly([1, -1])) == TPoly([OP_ONE, W, OmegaPoly([2])])

    def test_remainder_raises(self):
        with pytest.raises(InexactDivision):
            TPoly([1, 1, 1]).exact_div(TPoly([1, 1]))
