import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropdet.params import (
    INT64_MAX,
    NonCoprimeError,
    WrongOrderError,
    derive_params,
)


@pytest.mark.parametrize(
    "k,l,m,n,q,r,rows,cols,row_sum,col_sum",
    [
        (1, 2, 6, 5, 1, 1, 5, 10, 12, 6),
        (1, 1, 4, 2, 2, 0, 2, 2, 4, 4),
        (2, 3, 6, 5, 1, 1, 10, 15, 18, 12),
    ],
)
def test_examples(k, l, m, n, q, r, rows, cols, row_sum, col_sum):
    p = derive_params(k, l, m, n)
    assert (p.q, p.r) == (q, r)
    assert (p.rows, p.cols) == (rows, cols)
    assert (p.row_sum, p.col_sum) == (row_sum, col_sum)


def test_non_coprime_rejected():
    with pytest.raises(NonCoprimeError):
        derive_params(2, 4, 1, 1)


def test_wrong_order_rejected():
    with pytest.raises(WrongOrderError):
        derive_params(3, 2, 1, 1)


def test_budget_overflow_rejected():
    with pytest.raises(OverflowError):
        derive_params(1, 2, 10**9, 10**5)


@pytest.mark.parametrize("bad", [0, -1])
@pytest.mark.parametrize("slot", range(4))
def test_nonpositive_rejected(bad, slot):
    args = [1, 1, 1, 1]
    args[slot] = bad
    with pytest.raises(ValueError):
        derive_params(*args)


def test_non_integers_rejected():
    with pytest.raises(TypeError):
        derive_params(1.0, 2, 6, 5)


coprime_pairs = st.tuples(
    st.integers(min_value=1, max_value=9), st.integers(min_value=1, max_value=9)
).filter(lambda kl: kl[0] <= kl[1] and math.gcd(*kl) == 1)


@given(
    kl=coprime_pairs,
    m=st.integers(min_value=1, max_value=10**6),
    n=st.integers(min_value=1, max_value=1000),
)
def test_division_and_mass_invariants(kl, m, n):
    k, l = kl
    p = derive_params(k, l, m, n)
    assert 0 <= p.r < p.n
    assert p.m == p.q * p.n + p.r
    assert p.rows * p.row_sum == p.cols * p.col_sum == k * l * m * n
    assert p.rows * p.row_sum <= INT64_MAX
