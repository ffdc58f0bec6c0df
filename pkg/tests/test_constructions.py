import math

import numpy as np
import pytest

from tropdet import (
    IntMatrix,
    construct_lower,
    construct_lower_blocks,
    construct_lower_uniform,
    construct_upper,
    derive_params,
    lower_bound,
    solve_xy,
    tdet,
    tropdet,
    upper_bound,
    validate_membership,
)
from tropdet.constructions import InfeasiblePairError


def grid(max_kl=4, max_n=6, max_m=10):
    for k in range(1, max_kl + 1):
        for l in range(k, max_kl + 1):
            if math.gcd(k, l) != 1:
                continue
            for n in range(1, max_n + 1):
                for m in range(1, max_m + 1):
                    yield derive_params(k, l, m, n)


class TestLowerUniform:
    def test_golden_5x15(self):
        # Shifting by rl = 6 over 15 columns; reference layout.
        expected = IntMatrix.from_rows(
            [
                [2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                [1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1],
                [2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2],
                [1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1],
                [1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2],
            ]
        )
        assert construct_lower_uniform(derive_params(1, 3, 7, 5)) == expected

    def test_r_zero_gives_constant_matrix(self):
        p = derive_params(1, 2, 4, 2)
        a = construct_lower_uniform(p)
        assert np.all(a.data == p.q)

    def test_two_by_two(self):
        a = construct_lower_uniform(derive_params(1, 1, 3, 2))
        assert a == IntMatrix.from_rows([[2, 1], [1, 2]])
        assert tdet(a).value == 4

    def test_entry_counts(self):
        for p in grid():
            a = construct_lower_uniform(p)
            raised = a.data == p.q + 1
            assert int(raised.sum()) == p.r * p.l * p.rows
            assert all(int(c) == p.r * p.k for c in raised.sum(axis=0))
            assert set(np.unique(a.data)) <= {p.q, p.q + 1}

    def test_tdet_cap(self):
        for p in grid(max_kl=3, max_n=5, max_m=8):
            assert tdet(construct_lower_uniform(p)).value <= p.rows * (p.q + 1)


class TestLowerBlocks:
    def test_reference_10x15(self, member_10x15):
        # The fixture layout is reproduced exactly by this fill order; only
        # membership, the low-block ceiling, and the tdet cap are contractual.
        p = derive_params(2, 3, 6, 5)
        a = construct_lower_blocks(p, 5, 4)
        assert validate_membership(a, p).is_member
        assert int(a.data[:5, :4].max()) <= p.q
        assert tdet(a).value <= p.rows * p.q + 5 + 4 == 19
        assert a == member_10x15

    def test_reference_block_sums(self):
        p = derive_params(2, 3, 6, 5)
        a = construct_lower_blocks(p, 5, 4)
        assert int(a.data[:5, 4:].sum()) == (5 * p.q + p.r * p.k) * (p.cols - 4) == 77
        assert int(a.data[5:, :4].sum()) == (4 * p.q + p.r * p.l) * (p.rows - 5) == 35
        assert int(a.data[:5, :4].sum()) == 13

    def test_optimal_pair_5x10(self):
        p = derive_params(1, 2, 6, 5)
        a = construct_lower_blocks(p, 2, 2)
        assert validate_membership(a, p).is_member
        assert tdet(a).value <= 9

    def test_r_zero_degenerate_blocks(self):
        p = derive_params(1, 2, 4, 2)
        a = construct_lower_blocks(p, 0, 0)
        assert np.all(a.data == p.q)

    @pytest.mark.parametrize(
        "x,y",
        [
            (0, 4),  # x below rk
            (5, 0),  # y below rl
            (9, 4),  # x + y above nk
            (2, 3),  # mixed constraint fails
        ],
    )
    def test_infeasible_pairs_rejected(self, x, y):
        with pytest.raises(InfeasiblePairError):
            construct_lower_blocks(derive_params(2, 3, 6, 5), x, y)

    def test_any_feasible_pair_works(self):
        # Not only the optimum: sweep all feasible pairs for one tuple.
        p = derive_params(2, 3, 6, 5)
        tried = 0
        for x in range(p.r * p.k, p.rows):
            for y in range(p.r * p.l, p.rows - x + 1):
                sigma = p.q * x * y + p.r * (x * p.l + y * p.k) - p.k * p.l * p.n * p.r
                if sigma < 0:
                    continue
                a = construct_lower_blocks(p, x, y)
                assert validate_membership(a, p).is_member
                assert tdet(a).value <= p.rows * p.q + x + y
                tried += 1
        assert tried > 3


class TestConstructLower:
    def test_block_route(self, member_5x10):
        p = derive_params(1, 2, 6, 5)
        assert solve_xy(p).sum < p.rows
        a = construct_lower(p)
        assert validate_membership(a, p).is_member
        assert tdet(a).value == 9 == tdet(member_5x10).value

    def test_uniform_route(self):
        p = derive_params(1, 1, 3, 2)
        assert solve_xy(p).sum >= p.rows
        assert construct_lower(p) == IntMatrix.from_rows([[2, 1], [1, 2]])

    def test_r_zero(self):
        a = construct_lower(derive_params(1, 1, 4, 2))
        assert np.all(a.data == 2)
        assert tdet(a).value == 4


class TestConstructUpper:
    def test_flat(self):
        p = derive_params(1, 1, 3, 2)
        a = construct_upper(p)
        assert a == IntMatrix.from_rows([[2, 1], [1, 2]])
        assert tropdet(a).value == 2 == upper_bound(p)

    def test_excess_boundary(self):
        p = derive_params(1, 1, 1, 2)
        a = construct_upper(p)
        assert tropdet(a).value == 0 == upper_bound(p)
        # permutation-matrix pattern
        assert sorted(map(int, a.data.flatten())) == [0, 0, 1, 1]

    def test_r_zero(self):
        p = derive_params(2, 3, 6, 3)
        a = construct_upper(p)
        assert np.all(a.data == p.q)
        assert tropdet(a).value == p.rows * p.q

    def test_excess_interior(self):
        p = derive_params(2, 3, 5, 3)  # r = 2, r(k+l) = 10 > nl = 9
        assert p.r * (p.k + p.l) > p.cols
        a = construct_upper(p)
        assert validate_membership(a, p).is_member
        assert tropdet(a).value == upper_bound(p)


def test_grid_membership_and_sharpness():
    for p in grid():
        low = construct_lower(p)
        high = construct_upper(p)
        assert validate_membership(low, p).is_member
        assert validate_membership(high, p).is_member
        assert tdet(low).value == lower_bound(p)
        assert tropdet(high).value == upper_bound(p)
