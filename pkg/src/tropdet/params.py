"""Parameter validation for the matrix family under study.

A problem instance is given by four positive integers (k, l, m, n) with
gcd(k, l) = 1 and k <= l.  It describes the set of nk x nl nonnegative
integer matrices whose row sums are all m*l and whose column sums are all
m*k.  Everything downstream (bounds, constructions, oracles) consumes the
derived quantities computed here, in particular the division of m by n
with remainder, m = q*n + r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INT64_MAX = (1 << 63) - 1


class NonCoprimeError(ValueError):
    """k and l must be coprime; callers must reduce by gcd first."""


class WrongOrderError(ValueError):
    """k must not exceed l; transpose the problem instead."""


@dataclass(frozen=True)
class ProblemParams:
    """Validated (k, l, m, n) plus every derived quantity.

    Invariants: gcd(k, l) = 1, k <= l, m = q*n + r with 0 <= r < n, and
    rows*row_sum = cols*col_sum = k*l*m*n.
    """

    k: int
    l: int
    m: int
    n: int
    q: int
    r: int
    rows: int
    cols: int
    row_sum: int
    col_sum: int


def derive_params(k: int, l: int, m: int, n: int) -> ProblemParams:
    """Validate (k, l, m, n) and compute all derived quantities.

    Raises NonCoprimeError, WrongOrderError, or OverflowError when the
    worst downstream intermediate k*l*m*n*max(nk, nl) would not fit in a
    signed 64-bit integer.  Deterministic failure beats silent wraparound.
    """
    for name, value in (("k", k), ("l", l), ("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
    if math.gcd(k, l) != 1:
        raise NonCoprimeError(f"gcd(k, l) must be 1, got gcd({k}, {l}) = {math.gcd(k, l)}")
    if k > l:
        raise WrongOrderError(f"k must be <= l, got k={k}, l={l}")
    if k * l * m * n * max(n * k, n * l) > INT64_MAX:
        raise OverflowError(
            f"parameters (k={k}, l={l}, m={m}, n={n}) exceed the 64-bit safe budget"
        )
    q, r = divmod(m, n)
    return ProblemParams(
        k=k,
        l=l,
        m=m,
        n=n,
        q=q,
        r=r,
        rows=n * k,
        cols=n * l,
        row_sum=m * l,
        col_sum=m * k,
    )
