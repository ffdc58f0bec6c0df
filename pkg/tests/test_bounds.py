import math

import pytest

from tropdet import (
    LowerRegime,
    Parity,
    UpperRegime,
    bound_report,
    derive_params,
    doubly_stochastic_x,
    lower_bound,
    lower_bound_corollaries,
    solve_xy,
    upper_bound,
)
from tropdet.bounds import PreconditionViolatedError, is_feasible_pair


def coprime_grid(max_kl=5, max_n=6, max_m=12):
    for k in range(1, max_kl + 1):
        for l in range(k, max_kl + 1):
            if math.gcd(k, l) != 1:
                continue
            for n in range(1, max_n + 1):
                for m in range(1, max_m + 1):
                    yield derive_params(k, l, m, n)


def xy_grid_scan(p):
    """Independent oracle: exhaustive 2-D scan over the bounded region."""
    if p.r == 0:
        return (0, 0)
    hi = p.rows + p.r * p.l
    best = None
    for x in range(p.r * p.k, hi + 1):
        for y in range(p.r * p.l, hi + 1):
            if is_feasible_pair(p, x, y):
                if (
                    best is None
                    or x + y < best[0] + best[1]
                    or (x + y == best[0] + best[1] and x < best[0])
                ):
                    best = (x, y)
    return best


class TestSolveXY:
    @pytest.mark.parametrize(
        "tup,expected",
        [
            ((1, 2, 6, 5), (2, 2)),
            ((1, 1, 4, 2), (0, 0)),
            ((1, 1, 7, 5), (2, 2)),
            ((1, 1, 5, 4), (1, 2)),  # tie with (2, 1); smallest x wins
        ],
    )
    def test_examples(self, tup, expected):
        sol = solve_xy(derive_params(*tup))
        assert (sol.x, sol.y) == expected
        assert sol.sum == expected[0] + expected[1]

    def test_r_zero_skips_witness(self):
        sol = solve_xy(derive_params(1, 1, 4, 2))
        assert not sol.feasible_witness_used

    def test_r_positive_uses_witness(self):
        assert solve_xy(derive_params(1, 2, 6, 5)).feasible_witness_used

    def test_matches_grid_scan_oracle(self):
        for p in coprime_grid():
            sol = solve_xy(p)
            assert (sol.x, sol.y) == xy_grid_scan(p), (p.k, p.l, p.m, p.n)

    def test_solution_is_feasible(self):
        for p in coprime_grid(max_kl=4, max_n=5, max_m=10):
            sol = solve_xy(p)
            assert is_feasible_pair(p, sol.x, sol.y)


class TestLowerBound:
    @pytest.mark.parametrize(
        "tup,expected",
        [
            ((1, 2, 6, 5), 9),
            ((1, 1, 4, 2), 4),
            ((1, 1, 3, 2), 4),  # oracle-verified over all four members
        ],
    )
    def test_examples(self, tup, expected):
        assert lower_bound(derive_params(*tup)) == expected

    def test_brackets(self):
        for p in coprime_grid():
            value = lower_bound(p)
            assert p.rows * p.q <= value <= p.rows * (p.q + 1)


class TestUpperBound:
    @pytest.mark.parametrize(
        "tup,expected",
        [
            ((1, 1, 3, 2), 2),
            ((1, 2, 3, 1), 3),
            ((1, 1, 1, 2), 0),
        ],
    )
    def test_examples(self, tup, expected):
        assert upper_bound(derive_params(*tup)) == expected


class TestCorollaries:
    def test_r_zero(self):
        assert lower_bound_corollaries(derive_params(1, 1, 4, 2)) == 4

    def test_small_remainder_returns_absent(self):
        assert lower_bound_corollaries(derive_params(1, 2, 6, 5)) is None

    def test_large_remainder(self):
        assert lower_bound_corollaries(derive_params(1, 1, 3, 2)) == 4

    def test_agreement_with_lower_bound(self):
        for p in coprime_grid():
            fast = lower_bound_corollaries(p)
            if fast is not None:
                assert fast == lower_bound(p)


class TestDoublyStochasticX:
    def test_off_by_one_small(self):
        p = derive_params(1, 1, 5, 4)
        assert doubly_stochastic_x(p) == (1, Parity.OFF_BY_ONE)
        assert lower_bound(p) == p.n * p.q + 2 * 1 + 1 == 7

    def test_off_by_one_larger(self):
        p = derive_params(1, 1, 9, 7)
        assert doubly_stochastic_x(p) == (2, Parity.OFF_BY_ONE)
        assert lower_bound(p) == p.n * p.q + 2 * 2 + 1 == 12

    def test_equal_parity(self):
        p = derive_params(1, 1, 8, 7)
        assert doubly_stochastic_x(p) == (2, Parity.EQUAL)
        assert lower_bound(p) == p.n * p.q + 2 * 2 == 11

    def test_precondition_large_remainder_rejected(self):
        # r(q+2) = 6 >= n = 5 falls outside the quadratic fast path.
        with pytest.raises(PreconditionViolatedError):
            doubly_stochastic_x(derive_params(1, 1, 7, 5))

    def test_precondition_scale_rejected(self):
        with pytest.raises(PreconditionViolatedError):
            doubly_stochastic_x(derive_params(1, 2, 6, 5))

    def test_precondition_r_zero_rejected(self):
        with pytest.raises(PreconditionViolatedError):
            doubly_stochastic_x(derive_params(1, 1, 4, 2))

    def test_agreement_with_solve_xy(self):
        for n in range(2, 30):
            for m in range(1, 3 * n):
                p = derive_params(1, 1, m, n)
                if p.r < 1 or p.r * (p.q + 2) >= p.n:
                    continue
                x, parity = doubly_stochastic_x(p)
                total = solve_xy(p).sum
                if parity is Parity.EQUAL:
                    assert total == 2 * x
                else:
                    assert total == 2 * x + 1
                assert lower_bound(p) == p.n * p.q + total


class TestBoundReport:
    def test_interior_and_flat(self):
        report = bound_report(derive_params(1, 2, 6, 5))
        assert report.L == 9
        assert report.U == 5
        assert report.lower_regime is LowerRegime.INTERIOR
        assert report.upper_regime is UpperRegime.FLAT

    def test_saturated(self):
        report = bound_report(derive_params(1, 1, 3, 2))
        assert report.lower_regime is LowerRegime.SATURATED
        assert report.L == 4

    def test_excess_boundary(self):
        # r(k+l) = nl exactly: the excess label is used and U = nkq.
        report = bound_report(derive_params(1, 1, 1, 2))
        assert report.upper_regime is UpperRegime.EXCESS
        assert report.U == 0

    def test_report_consistency(self):
        for p in coprime_grid(max_kl=3, max_n=5, max_m=8):
            report = bound_report(p)
            assert report.L == p.rows * p.q + min(p.rows, report.xy.sum)
            assert report.U == max(
                p.rows * p.q, p.rows * p.q + p.r * (p.k + p.l) - p.cols
            )
