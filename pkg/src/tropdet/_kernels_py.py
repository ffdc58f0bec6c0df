"""Pure-Python kernels: exact rectangular assignment and brute force.

Same interface as the compiled module tropdet._kernels_c; tropdet.kernels
picks whichever is importable.  Both operate on a row-major int matrix
with rows <= cols (callers transpose first) and keep all arithmetic in
Python integers, so results are exact for any 64-bit input.
"""

from __future__ import annotations

from itertools import permutations

_INF = 1 << 62


def assignment_extremum(a, maximize: bool) -> tuple[int, list[int]]:
    """Optimal transversal of an s x t matrix, s <= t, by shortest augmenting paths.

    Returns (value, col4row) where col4row[i] is the column assigned to
    row i.  Entries are first shifted to be nonnegative; a maximum problem
    is solved as a minimum one on (max_entry - a_ij).
    """
    cost = [[int(v) for v in row] for row in a]
    nr = len(cost)
    nc = len(cost[0])
    if nr > nc:
        raise ValueError("kernel requires rows <= cols")

    if maximize:
        shift = max(max(row) for row in cost)
        cost = [[shift - v for v in row] for row in cost]
    else:
        shift = min(min(row) for row in cost)
        cost = [[v - shift for v in row] for row in cost]

    u = [0] * nr
    v = [0] * nc
    col4row = [-1] * nr
    row4col = [-1] * nc
    shortest = [0] * nc
    path = [0] * nc
    done = [False] * nc
    in_tree = [False] * nr

    for cur_row in range(nr):
        for j in range(nc):
            shortest[j] = _INF
            path[j] = -1
            done[j] = False
        for i in range(nr):
            in_tree[i] = False
        min_val = 0
        i = cur_row
        sink = -1
        while sink == -1:
            in_tree[i] = True
            ci = cost[i]
            ui = u[i]
            lowest = _INF
            pick = -1
            for j in range(nc):
                if done[j]:
                    continue
                reduced = min_val + ci[j] - ui - v[j]
                if reduced < shortest[j]:
                    shortest[j] = reduced
                    path[j] = i
                if shortest[j] < lowest or (shortest[j] == lowest and row4col[j] == -1):
                    lowest = shortest[j]
                    pick = j
            min_val = lowest
            j = pick
            done[j] = True
            if row4col[j] == -1:
                sink = j
            else:
                i = row4col[j]
        u[cur_row] += min_val
        for i in range(nr):
            if in_tree[i] and i != cur_row:
                u[i] += min_val - shortest[col4row[i]]
        for j in range(nc):
            if done[j]:
                v[j] -= min_val - shortest[j]
        j = sink
        while True:
            i = path[j]
            row4col[j] = i
            col4row[i], j = j, col4row[i]
            if i == cur_row:
                break

    total = sum(cost[i][col4row[i]] for i in range(nr))
    if maximize:
        value = nr * shift - total
    else:
        value = total + nr * shift
    return value, col4row


def bruteforce_extremum(a, maximize: bool) -> int:
    """Exact optimum by enumerating every injection of rows into columns.

    Independent of the augmenting-path solver by design: no pruning, no
    potentials, just an exhaustive scan.  Callers enforce the size cap.
    """
    rows = [[int(v) for v in row] for row in a]
    nr = len(rows)
    nc = len(rows[0])
    if nr > nc:
        raise ValueError("kernel requires rows <= cols")
    best = -_INF if maximize else _INF
    if maximize:
        for pick in permutations(range(nc), nr):
            total = sum(row[j] for row, j in zip(rows, pick))
            if total > best:
                best = total
    else:
        for pick in permutations(range(nc), nr):
            total = sum(row[j] for row, j in zip(rows, pick))
            if total < best:
                best = total
    return best
