"""Deterministic constructions of matrices attaining the sharp bounds.

Every choice the underlying recipes leave open (shift direction, run
anchors, seam between fill stages) is pinned down here so outputs are
reproducible and golden-testable:

* circular shifts move right, with row 0 anchored at column 0;
* a block column (row) j carries its run of raised entries starting at
  offset (j * run_length) mod height, which is exactly sequential
  placement continuing where the previous run finished;
* the staged fill of the low block keeps one cursor moving left across
  row boundaries.

Each constructor validates its own output and raises ConstructionError
on any violated postcondition.
"""

from __future__ import annotations

import numpy as np

from .assignment import tdet, tropdet
from .bounds import lower_bound, solve_xy
from .matrix import IntMatrix, validate_membership
from .params import ProblemParams


class InfeasiblePairError(ValueError):
    """The supplied (x, y) violates a precondition of the block construction."""


class ConstructionError(RuntimeError):
    """A constructed matrix failed its own postcondition; a bug, not bad input."""


def _circular_runs(height: int, width: int, base: int, run: int) -> np.ndarray:
    """height x width matrix of ``base`` with a circular run of +1s per row.

    Row i's run covers ``run`` consecutive columns starting at
    (i * run) mod width.  Needs run <= width; run = 0 means flat.
    """
    grid = np.full((height, width), base, dtype=np.int64)
    if run:
        offsets = np.arange(run)
        for i in range(height):
            grid[i, (i * run + offsets) % width] += 1
    return grid


def _check_member(a: IntMatrix, p: ProblemParams, label: str) -> IntMatrix:
    report = validate_membership(a, p)
    if not report.is_member:
        raise ConstructionError(f"{label}: output not a member ({report.reason})")
    return a


def construct_lower_uniform(p: ProblemParams) -> IntMatrix:
    """Member with entries in {q, q+1} and tdet <= nk(q+1).

    Row 0 raises its first rl entries; each following row is the previous
    one circularly shifted right by rl.  Every column ends up with
    exactly rk raised entries, so the margins come out right.
    """
    a = IntMatrix(_circular_runs(p.rows, p.cols, p.q, p.r * p.l))
    return _check_member(a, p, "uniform construction")


def construct_lower_blocks(p: ProblemParams, x: int, y: int) -> IntMatrix:
    """Member built from four blocks with tdet <= nkq + x + y.

    Accepts any feasible pair (x >= rk, y >= rl, x+y <= nk, and the
    mixed constraint), not only the optimum.  Layout:

        [ X  Y ]   X: x-by-y, entries <= q, carries the leftover mass
        [ Z  W ]   W: all q; Y columns / Z rows carry circular runs of
                   raised entries (rk per Y-column, rl per Z-row)

    The leftover mass of X, qxy + r(xl+yk) - klnr, is spread as evenly
    as possible: heavier rows at the bottom, heavier columns at the
    right, which exactly complements the run placement in Y and Z.
    """
    k, l, n, q, r = p.k, p.l, p.n, p.q, p.r
    nk, nl = p.rows, p.cols
    if x < r * k or y < r * l:
        raise InfeasiblePairError(f"need x >= rk and y >= rl, got ({x}, {y})")
    if x + y > nk:
        raise InfeasiblePairError(f"need x + y <= nk, got {x} + {y} > {nk}")
    sigma_x = q * x * y + r * (x * l + y * k) - k * l * n * r
    if sigma_x < 0:
        raise InfeasiblePairError(f"pair ({x}, {y}) violates the mixed constraint")

    # Y: rk raised entries per column, runs walking down the x rows.
    block_y = _circular_runs(nl - y, x, q, r * k).T.copy()
    # Z: rl raised entries per row, runs walking right across the y columns.
    block_z = _circular_runs(nk - x, y, q, r * l)
    block_w = np.full((nk - x, nl - y), q, dtype=np.int64)

    block_x = np.zeros((x, y), dtype=np.int64)
    if x and y:
        per_row, heavy_rows = divmod(sigma_x, x)
        base_heavy, extra_heavy = divmod(per_row + 1, y)
        base_light, extra_light = divmod(per_row, y)
        cursor = 0  # steps taken leftward from the rightmost column
        for i in range(x - 1, -1, -1):
            if i >= x - heavy_rows:
                base, extra = base_heavy, extra_heavy
            else:
                base, extra = base_light, extra_light
            block_x[i, :] = base
            for _ in range(extra):
                block_x[i, (y - 1 - cursor) % y] += 1
                cursor += 1
    elif sigma_x:
        raise ConstructionError("degenerate low block cannot carry mass")

    a = IntMatrix(
        np.vstack(
            [np.hstack([block_x, block_y]), np.hstack([block_z, block_w])]
        )
    )
    _check_member(a, p, "block construction")
    if block_x.size and int(block_x.max()) > q:
        raise ConstructionError("low block has an entry above q")
    if tdet(a).value > nk * q + x + y:
        raise ConstructionError("block construction exceeded its tdet budget")
    return a


def construct_lower(p: ProblemParams) -> IntMatrix:
    """Member attaining the sharp lower bound on tdet."""
    xy = solve_xy(p)
    if xy.sum >= p.rows:
        a = construct_lower_uniform(p)
    else:
        a = construct_lower_blocks(p, xy.x, xy.y)
    if tdet(a).value != lower_bound(p):
        raise ConstructionError("lower construction missed the bound")
    return a


def construct_upper(p: ProblemParams) -> IntMatrix:
    """Member attaining the sharp upper bound on the min-transversal value.

    Flat regime (r(k+l) < nl): the circular {q, q+1} matrix, all entries
    >= q.  Excess regime (r(k+l) >= nl): four blocks with a raised
    rk x rl corner of q+1s, q elsewhere, and the remaining mass pushed
    into the lower-right block by circular runs.
    """
    k, l, q, r = p.k, p.l, p.q, p.r
    nk, nl = p.rows, p.cols
    if r * (k + l) < nl:
        a = IntMatrix(_circular_runs(nk, nl, q, r * l))
        return _check_member(a, p, "flat upper construction")

    rk, rl = r * k, r * l
    block_x = np.full((rk, rl), q + 1, dtype=np.int64)
    block_y = np.full((rk, nl - rl), q, dtype=np.int64)
    block_z = np.full((nk - rk, rl), q, dtype=np.int64)
    # Raise each lower-right row by rl in total, spread as runs.
    lift, rem = divmod(rl, nl - rl)
    block_w = _circular_runs(nk - rk, nl - rl, q + lift, rem)
    a = IntMatrix(
        np.vstack(
            [np.hstack([block_x, block_y]), np.hstack([block_z, block_w])]
        )
    )
    return _check_member(a, p, "excess upper construction")
