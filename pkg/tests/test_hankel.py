"""Fraction-free determinants and the closed forms for Motzkin Hankel matrices."""

import random

import pytest

from pathenum.algebra import OP_ONE, OmegaPoly, W
from pathenum.hankel import (
    HankelSpec,
    det_cofactor,
    det_fraction_free,
    hankel_matrix,
    hankel_recursion_check,
    leading_minor_dets,
    second_hankel_closed,
    shifted_hankel_binomial,
    shifted_hankel_closed,
)
from pathenum.matrices import SquareMatrix
from pathenum.motzkin import motzkin_series
from conftest import random_opoly


class TestDeterminantEngine:
    def test_identity(self):
        m = SquareMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert det_fraction_free(m) == OP_ONE

    def test_rank_one(self):
        assert det_fraction_free(SquareMatrix([[1, 2], [2, 4]])).is_zero()

    def test_motzkin_three(self):
        m = SquareMatrix([[1, 1, 2], [1, 2, 4], [2, 4, 9]])
        assert det_fraction_free(m) == OP_ONE

    def test_empty_matrix_convention(self):
        assert det_fraction_free(SquareMatrix([])) == OP_ONE
        assert det_cofactor(SquareMatrix([])) == OP_ONE

    def test_zero_pivot_swap(self):
        assert det_fraction_free(SquareMatrix([[0, 1], [1, 0]])) == OmegaPoly([-1])
        assert det_fraction_free(SquareMatrix([[0, 0], [1, 1]])).is_zero()
        m = SquareMatrix([[0, 1, 2], [3, 0, 1], [1, 1, 0]])
        assert det_fraction_free(m) == det_cofactor(m)

    def test_agrees_with_cofactor_on_random_matrices(self, rng):
        for trial in range(40):
            n = rng.randint(1, 5)
            rows = [[random_opoly(rng, max_deg=2, max_abs=4) for _ in range(n)] for _ in range(n)]
            if trial % 5 == 0 and n > 1:
                rows[0][0] = OmegaPoly([])  # force the pivot-swap path
            m = SquareMatrix(rows)
            assert det_fraction_free(m) == det_cofactor(m), trial

    def test_leading_minors_match_independent_dets(self, rng):
        for trial in range(10):
            n = rng.randint(2, 5)
            rows = [[random_opoly(rng, max_deg=2, max_abs=4) for _ in range(n)] for _ in range(n)]
            m = SquareMatrix(rows)
            got = leading_minor_dets(m)
            want = [
                det_fraction_free(SquareMatrix([r[: d + 1] for r in m.rows[: d + 1]]))
                for d in range(n)
            ]
            assert got == want


class TestHankelMatrix:
    def test_plain_motzkin_three(self):
        m = hankel_matrix(HankelSpec(3)).eval_omega(1)
        assert [list(r) for r in m.rows] == [
            [OmegaPoly([v]) for v in row] for row in [[1, 1, 2], [1, 2, 4], [2, 4, 9]]
        ]

    def test_alpha_beta_two(self):
        spec = HankelSpec(2, alpha=OmegaPoly([1]), beta=OmegaPoly([1]))
        m = hankel_matrix(spec).eval_omega(1)
        assert [[e.evaluate(0) for e in r] for r in m.rows] == [[2, 3], [3, 6]]

    def test_shift_one_singleton(self):
        m = hankel_matrix(HankelSpec(1, shift=1))
        assert m.rows[0][0] == W

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            HankelSpec(0)
        with pytest.raises(ValueError):
            HankelSpec(3, shift=5)
        with pytest.raises(ValueError):
            HankelSpec(3, alpha=OmegaPoly([]), beta=OmegaPoly([]))


class TestClosedForms:
    def test_plain_determinant_is_one_symbolically(self):
        for n in range(1, 11):
            assert det_fraction_free(hankel_matrix(HankelSpec(n))) == OP_ONE
            assert shifted_hankel_closed(n, 1, 0) == OP_ONE

    def test_sum_matrix_two_by_two(self):
        assert shifted_hankel_closed(2, 1, 1).evaluate(1) == 3

    def test_n_plus_one_law(self):
        for n in range(21):
            assert shifted_hankel_closed(n, 1, 1).evaluate(1) == n + 1

    def test_pure_beta_three(self):
        assert shifted_hankel_closed(3, 0, 1).evaluate(1) == -1
        m = hankel_matrix(HankelSpec(3, shift=1)).eval_omega(1)
        assert det_fraction_free(m).evaluate(0) == -1

    def test_closed_equals_determinant_symbolic(self, rng):
        for _ in range(12):
            a, b = rng.randint(-6, 6), rng.randint(-6, 6)
            if (a, b) == (0, 0):
                continue
            spec = HankelSpec(7, alpha=OmegaPoly([a]), beta=OmegaPoly([b]))
            det = det_fraction_free(hankel_matrix(spec))
            assert det == shifted_hankel_closed(7, a, b), (a, b)

    def test_homogeneous_of_degree_n(self, rng):
        for _ in range(10):
            a, b, c = rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 4)
            if (a, b) == (0, 0):
                continue
            n = rng.randint(0, 8)
            scaled = shifted_hankel_closed(n, c * a, c * b)
            assert scaled == c**n * shifted_hankel_closed(n, a, b)

    def test_binomial_form_agrees(self, rng):
        pairs = [(1, 1), (0, 1), (1, 0), (2, -3)] + [
            (random_opoly(rng, 1, 3), random_opoly(rng, 1, 3)) for _ in range(4)
        ]
        for a, b in pairs:
            for n in range(16):
                lhs = shifted_hankel_closed(n, a, b)
                rhs = shifted_hankel_binomial(n, a, b)
                assert lhs == rhs, (n, str(a), str(b))


class TestSecondHankel:
    def test_weight_one_values(self):
        assert [second_hankel_closed(n).evaluate(1) for n in range(1, 7)] == [1, 0, -1, -1, 0, 1]

    def test_symbolic_two(self):
        assert second_hankel_closed(2) == OmegaPoly([-1, 0, 1])

    def test_empty_dimension(self):
        assert second_hankel_closed(0) == OP_ONE

    def test_equals_determinant(self):
        for n in range(1, 9):
            det = det_fraction_free(hankel_matrix(HankelSpec(n, shift=1)))
            assert det == second_hankel_closed(n), n


class TestRecursion:
    def test_hand_size_one(self):
        # 1x1: M_2 = (empty det) + M_1^2, i.e. 1 + w^2
        mu = motzkin_series(2)
        assert mu.coeff(2) == OP_ONE + W * W

    def test_hand_size_two_weight_one(self):
        m = SquareMatrix([[2, 4], [4, 9]])
        assert det_fraction_free(m).evaluate(0) == 2

    def test_symbolic_up_to_ten(self):
        assert hankel_recursion_check(10)


def test_random_alpha_beta_spot_check():
    rng = random.Random(5)
    for _ in range(3):
        a, b = rng.randint(1, 9), rng.randint(1, 9)
        minors = leading_minor_dets(
            hankel_matrix(HankelSpec(9, alpha=OmegaPoly([a]), beta=OmegaPoly([b])))
        )
        for n in range(1, 10):
            assert minors[n - 1] == shifted_hankel_closed(n, a, b)
