"""Exhaustive enumeration of small margin polytopes and bound certification.

enumerate_points walks every nonnegative integer matrix with the
prescribed margins exactly once, by row-major backtracking: cells are
filled left to right, top to bottom, trying values in increasing order,
bounded by the remaining row and column budgets; the last cell of each
row and the whole last row are forced.  verify_bounds scans the stream
and compares the true extrema of tdet and the min-transversal value
against the closed-form bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .assignment import tdet, tropdet
from .bounds import lower_bound, upper_bound
from .matrix import IntMatrix
from .params import ProblemParams

DEFAULT_POINT_CAP = 1_000_000


class CapExceededError(RuntimeError):
    """More member matrices exist than the enumeration cap allows."""

    def __init__(self, params: ProblemParams, cap: int):
        super().__init__(
            f"polytope for (k={params.k}, l={params.l}, m={params.m}, "
            f"n={params.n}) has more than {cap} integer points"
        )
        self.params = params
        self.cap = cap


@dataclass(frozen=True)
class VerificationReport:
    """Oracle-versus-formula comparison for one parameter tuple."""

    params: ProblemParams
    points_enumerated: int
    oracle_min_tdet: int
    oracle_max_tropdet: int
    formula_L: int
    formula_U: int
    lower_match: bool
    upper_match: bool
    argmin_example: IntMatrix
    argmax_example: IntMatrix


def enumerate_points(
    p: ProblemParams, cap: int = DEFAULT_POINT_CAP
) -> Iterator[IntMatrix]:
    """Yield every member matrix exactly once, in deterministic order.

    Raises CapExceededError when the polytope holds more than ``cap``
    points (after the first ``cap`` have been yielded).
    """
    nk, nl = p.rows, p.cols
    grid = np.zeros((nk, nl), dtype=np.int64)
    col_rem = [p.col_sum] * nl
    yielded = 0

    def fill_cell(i: int, j: int, row_rem: int) -> Iterator[IntMatrix]:
        nonlocal yielded
        if i == nk - 1:
            # Whole last row is forced by the column budgets; by mass
            # conservation its sum is exactly one row budget, and each
            # forced value fits it for validated params (mk <= ml).
            if any(c > p.row_sum for c in col_rem):
                return
            grid[i, :] = col_rem
            if yielded >= cap:
                raise CapExceededError(p, cap)
            yielded += 1
            yield IntMatrix(grid.copy())
            return
        if j == nl - 1:
            # Last cell of a non-final row is forced by the row budget.
            if row_rem <= col_rem[j]:
                grid[i, j] = row_rem
                col_rem[j] -= row_rem
                yield from fill_cell(i + 1, 0, p.row_sum)
                col_rem[j] += row_rem
            return
        for v in range(min(row_rem, col_rem[j]) + 1):
            grid[i, j] = v
            col_rem[j] -= v
            yield from fill_cell(i, j + 1, row_rem - v)
            col_rem[j] += v

    yield from fill_cell(0, 0, p.row_sum)


def verify_bounds(p: ProblemParams, cap: int = DEFAULT_POINT_CAP) -> VerificationReport:
    """Scan the whole polytope and certify both closed-form bounds."""
    formula_l = lower_bound(p)
    formula_u = upper_bound(p)
    count = 0
    min_tdet: Optional[int] = None
    max_trop: Optional[int] = None
    argmin: Optional[IntMatrix] = None
    argmax: Optional[IntMatrix] = None
    for point in enumerate_points(p, cap=cap):
        count += 1
        td = tdet(point).value
        tr = tropdet(point).value
        if min_tdet is None or td < min_tdet:
            min_tdet = td
            argmin = point
        if max_trop is None or tr > max_trop:
            max_trop = tr
            argmax = point
    assert count > 0 and min_tdet is not None and max_trop is not None
    return VerificationReport(
        params=p,
        points_enumerated=count,
        oracle_min_tdet=min_tdet,
        oracle_max_tropdet=max_trop,
        formula_L=formula_l,
        formula_U=formula_u,
        lower_match=min_tdet == formula_l,
        upper_match=max_trop == formula_u,
        argmin_example=argmin,
        argmax_example=argmax,
    )
