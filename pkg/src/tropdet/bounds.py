"""Sharp bounds on the tropical determinant over the matrix family.

The sharp minimum of tdet over all nk x nl matrices with margins (ml, mk)
is L = nkq + min(nk, x+y), where (x, y) solves a tiny two-variable
integer program: minimize x+y subject to

    x >= r*k,  y >= r*l,  q*x*y + r*(x*l + y*k) >= k*l*n*r.

The sharp maximum of the min-transversal variant is
U = max(nkq, nkq + r*(k+l) - nl).  Corollary fast paths (r = 0, large r,
and the k = l = 1 quadratic) are provided as cross-checks only.

No floating point anywhere: ceilings are exact integer divisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .params import ProblemParams


class PreconditionViolatedError(ValueError):
    """The k = l = 1 quadratic fast path was called outside its domain."""


class LowerRegime(Enum):
    SATURATED = "saturated"  # nk <= x+y: L = nk(q+1), uniform construction
    INTERIOR = "interior"  # x+y < nk: L = nkq + x + y, block construction


class UpperRegime(Enum):
    FLAT = "flat"  # r(k+l) < nl: U = nkq
    EXCESS = "excess"  # r(k+l) >= nl: U = nkq + r(k+l) - nl


class Parity(Enum):
    EQUAL = "equal"  # L = nq + 2x
    OFF_BY_ONE = "off-by-one"  # L = nq + 2x + 1


@dataclass(frozen=True)
class XYSolution:
    """Minimal-sum feasible (x, y); smallest x among minimal-sum pairs."""

    x: int
    y: int
    sum: int
    feasible_witness_used: bool


@dataclass(frozen=True)
class BoundReport:
    params: ProblemParams
    xy: XYSolution
    L: int
    U: int
    lower_regime: LowerRegime
    upper_regime: UpperRegime


def _ceil_div(num: int, den: int) -> int:
    # exact ceiling for num >= 0, den > 0
    return -(-num // den)


def is_feasible_pair(p: ProblemParams, x: int, y: int) -> bool:
    """All three constraints of the two-variable program."""
    return (
        x >= p.r * p.k
        and y >= p.r * p.l
        and p.q * x * y + p.r * (x * p.l + y * p.k) >= p.k * p.l * p.n * p.r
    )


def solve_xy(p: ProblemParams) -> XYSolution:
    """Minimize x+y over the feasible region by a bounded scan over x.

    For each x the minimal feasible y is closed-form, so scanning
    x in [rk, nk+rl] suffices: (nk, rl) is always feasible (its mixed
    term alone is r*nk*l = klnr), so no optimum has x beyond nk+rl.
    Ties on the sum resolve to the smallest x.
    """
    k, l, n, q, r = p.k, p.l, p.n, p.q, p.r
    if r == 0:
        return XYSolution(x=0, y=0, sum=0, feasible_witness_used=False)

    assert is_feasible_pair(p, p.rows, r * l), "scan-range witness must be feasible"

    best_x = best_y = -1
    best_sum = -1
    for x in range(r * k, p.rows + r * l + 1):
        num = r * (k * l * n - x * l)
        if num > 0:
            y = max(r * l, _ceil_div(num, q * x + r * k))
        else:
            y = r * l
        if best_sum < 0 or x + y < best_sum:
            best_x, best_y, best_sum = x, y, x + y
    assert is_feasible_pair(p, best_x, best_y)
    return XYSolution(x=best_x, y=best_y, sum=best_sum, feasible_witness_used=True)


def lower_bound(p: ProblemParams) -> int:
    """Sharp minimum of tdet over the family: nkq + min(nk, x+y)."""
    return p.rows * p.q + min(p.rows, solve_xy(p).sum)


def upper_bound(p: ProblemParams) -> int:
    """Sharp maximum of the min-transversal value: max(nkq, nkq + r(k+l) - nl)."""
    base = p.rows * p.q
    return max(base, base + p.r * (p.k + p.l) - p.cols)


def bound_report(p: ProblemParams) -> BoundReport:
    """Both bounds plus the active regime on each side."""
    xy = solve_xy(p)
    lower_regime = LowerRegime.SATURATED if p.rows <= xy.sum else LowerRegime.INTERIOR
    upper_regime = (
        UpperRegime.EXCESS if p.r * (p.k + p.l) >= p.cols else UpperRegime.FLAT
    )
    return BoundReport(
        params=p,
        xy=xy,
        L=p.rows * p.q + min(p.rows, xy.sum),
        U=upper_bound(p),
        lower_regime=lower_regime,
        upper_regime=upper_regime,
    )


def lower_bound_corollaries(p: ProblemParams) -> int | None:
    """Fast paths for L: r = 0 gives nkq; r(q+2) >= n gives nkq + min(nk, r(k+l)).

    Returns None outside both regimes; used only to cross-check lower_bound.
    """
    if p.r == 0:
        return p.rows * p.q
    if p.r * (p.q + 2) >= p.n:  # integer form of r >= n/(q+2)
        return p.rows * p.q + min(p.rows, p.r * (p.k + p.l))
    return None


def doubly_stochastic_x(p: ProblemParams) -> tuple[int, Parity]:
    """Smallest positive x for the k = l = 1 small-remainder case, with parity.

    x is the least positive integer satisfying one of
      (1)  q*x^2 + 2*r*x - n*r >= 0
      (2)  q*x^2 + (2*r + q)*x + r - n*r >= 0
    and (1) implies (2).  Parity EQUAL ((1) holds, L = nq + 2x) or
    OFF_BY_ONE (only (2) holds, L = nq + 2x + 1); agrees with solve_xy,
    whose minimal sum is 2x or 2x + 1 respectively.
    """
    if p.k != 1 or p.l != 1:
        raise PreconditionViolatedError("requires k = l = 1")
    if p.r < 1 or p.r * (p.q + 2) >= p.n:
        raise PreconditionViolatedError("requires 1 <= r and r(q+2) < n")
    n, q, r = p.n, p.q, p.r
    x = 1
    while True:
        if q * x * x + 2 * r * x - n * r >= 0:
            return x, Parity.EQUAL
        if q * x * x + (2 * r + q) * x + r - n * r >= 0:
            return x, Parity.OFF_BY_ONE
        x += 1
