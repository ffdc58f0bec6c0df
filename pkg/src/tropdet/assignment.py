"""Tropical determinants, transversal feasibility, and the sorting cost.

A transversal of an s x t matrix picks min(s, t) entries, one per row and
one per column of the shorter side, all on distinct lines.  tdet is the
maximum transversal sum, tropdet the minimum.  Both are assignment
problems and share one exact integer solver; the brute-force enumerator
is kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .matrix import IntMatrix, col_sums, row_sums

DEFAULT_BRUTEFORCE_CAP = 10_000_000
BRUTEFORCE_MAX_DIM = 8

_SAFE_SPREAD = 1 << 61


class TooLargeError(ValueError):
    """Brute force refused: transversal count over the cap or min dim > 8."""


class UnequalRowSumsError(ValueError):
    """sorting_cost needs every row sum (balls per color) to be equal."""


class WrongOrientationError(ValueError):
    """sorting_cost needs rows <= cols (at least as many pails as colors)."""


@dataclass(frozen=True)
class Transversal:
    """A witness selection of cells plus its value (the sum of entries)."""

    cells: tuple[tuple[int, int], ...]
    value: int


def _solve(a: IntMatrix, maximize: bool) -> Transversal:
    if a.rows == 0 or a.cols == 0:
        raise ValueError("matrix must be nonempty")
    lo = int(a.data.min())
    hi = int(a.data.max())
    if (hi - lo) * max(a.rows, a.cols) >= _SAFE_SPREAD:
        raise OverflowError("entry spread too large for exact int64 solve")
    if a.rows <= a.cols:
        value, col4row = kernels.assignment_extremum(a.data, maximize)
        cells = tuple((i, j) for i, j in enumerate(col4row))
    else:
        value, col4row = kernels.assignment_extremum(a.data.T, maximize)
        cells = tuple(sorted((j, i) for i, j in enumerate(col4row)))
    return Transversal(cells=cells, value=value)


def tdet(a: IntMatrix) -> Transversal:
    """Maximum-value transversal (the tropical determinant)."""
    return _solve(a, maximize=True)


def tropdet(a: IntMatrix) -> Transversal:
    """Minimum-value transversal (the min-plus variant)."""
    return _solve(a, maximize=False)


def tdet_bruteforce(
    a: IntMatrix, minimize: bool = False, cap: int = DEFAULT_BRUTEFORCE_CAP
) -> int:
    """Exact optimum by exhaustive enumeration; the oracle for tdet/tropdet.

    Refuses with TooLargeError when min(rows, cols) > 8 or the number of
    transversals (injections of the shorter side into the longer) exceeds
    ``cap``.
    """
    if a.rows == 0 or a.cols == 0:
        raise ValueError("matrix must be nonempty")
    s, t = min(a.rows, a.cols), max(a.rows, a.cols)
    if s > BRUTEFORCE_MAX_DIM:
        raise TooLargeError(f"min dimension {s} exceeds {BRUTEFORCE_MAX_DIM}")
    count = math.perm(t, s)
    if count > cap:
        raise TooLargeError(f"{count} transversals exceed the cap of {cap}")
    data = a.data if a.rows <= a.cols else a.data.T
    return kernels.bruteforce_extremum(data, not minimize)


def _matching(adj: list[list[int]], n_left: int, n_right: int):
    """Maximum bipartite matching (augmenting DFS).

    Returns (size, match_left, match_right) with -1 for unmatched vertices.
    """
    match_left = [-1] * n_left
    match_right = [-1] * n_right

    def try_augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or try_augment(match_right[j], seen):
                    match_left[i] = j
                    match_right[j] = i
                    return True
        return False

    size = 0
    for i in range(n_left):
        if try_augment(i, [False] * n_right):
            size += 1
    return size, match_left, match_right


def _adjacency(a: IntMatrix, predicate) -> list[list[int]]:
    return [[j for j in range(a.cols) if predicate(int(a.data[i, j]))] for i in range(a.rows)]


def threshold_transversal_exists(a: IntMatrix, theta: int) -> bool:
    """True iff some transversal has every entry >= theta.

    Maximum matching on the indicator of qualifying entries; the
    transversal exists iff the matching is perfect on the shorter side.
    """
    if a.rows == 0 or a.cols == 0:
        raise ValueError("matrix must be nonempty")
    adj = _adjacency(a, lambda v: v >= theta)
    size, _, _ = _matching(adj, a.rows, a.cols)
    return size == min(a.rows, a.cols)


def max_low_block_dims(a: IntMatrix, theta: int) -> tuple[int, int]:
    """Dimensions (d1, d2) of a largest all-low submatrix, d1 the row count.

    Largest means maximal d1 + d2 over submatrices (up to row/column
    permutation) whose entries are all <= theta.  Dual to matching:
    d1 + d2 = rows + cols - (max matching over entries > theta), and a
    witness split falls out of the minimum vertex cover, computed via
    alternating reachability from unmatched rows.
    """
    if a.rows == 0 or a.cols == 0:
        raise ValueError("matrix must be nonempty")
    adj = _adjacency(a, lambda v: v > theta)
    size, match_left, match_right = _matching(adj, a.rows, a.cols)

    visited_left = [False] * a.rows
    visited_right = [False] * a.cols
    stack = [i for i in range(a.rows) if match_left[i] == -1]
    for i in stack:
        visited_left[i] = True
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if not visited_right[j]:
                visited_right[j] = True
                i2 = match_right[j]
                if i2 != -1 and not visited_left[i2]:
                    visited_left[i2] = True
                    stack.append(i2)

    d1 = sum(visited_left)
    d2 = a.cols - sum(visited_right)
    assert d1 + d2 == a.rows + a.cols - size
    return d1, d2


def sorting_cost(a: IntMatrix) -> int:
    """Minimum ball moves to sort rows (colors) into some subset of columns (pails).

    For a rows x cols matrix with rows <= cols and common row sum R, the
    answer is rows*R - tdet(a): assign each color a pail via a maximum
    transversal and move every ball that is not already in place.
    """
    if a.rows > a.cols:
        raise WrongOrientationError(f"need rows <= cols, got {a.rows}x{a.cols}")
    sums = row_sums(a)
    if any(s != sums[0] for s in sums):
        raise UnequalRowSumsError(f"row sums differ: {sums}")
    return a.rows * sums[0] - tdet(a).value
