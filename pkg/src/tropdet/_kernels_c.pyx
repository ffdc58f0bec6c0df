# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels: exact rectangular assignment and brute force.

Mirror of tropdet._kernels_py (see there for algorithm notes); all
arithmetic is int64 and both modules return identical values.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t

cdef int64_t INF = (<int64_t>1) << 62


def assignment_extremum(const int64_t[:, ::1] a, bint maximize):
    """Optimal transversal of an s x t matrix, s <= t, by shortest augmenting paths."""
    cdef Py_ssize_t nr = a.shape[0]
    cdef Py_ssize_t nc = a.shape[1]
    if nr > nc:
        raise ValueError("kernel requires rows <= cols")

    cdef int64_t *cost = <int64_t *> calloc(nr * nc, sizeof(int64_t))
    cdef int64_t *u = <int64_t *> calloc(nr, sizeof(int64_t))
    cdef int64_t *v = <int64_t *> calloc(nc, sizeof(int64_t))
    cdef int64_t *shortest = <int64_t *> calloc(nc, sizeof(int64_t))
    cdef Py_ssize_t *col4row = <Py_ssize_t *> calloc(nr, sizeof(Py_ssize_t))
    cdef Py_ssize_t *row4col = <Py_ssize_t *> calloc(nc, sizeof(Py_ssize_t))
    cdef Py_ssize_t *path = <Py_ssize_t *> calloc(nc, sizeof(Py_ssize_t))
    cdef char *done = <char *> calloc(nc, sizeof(char))
    cdef char *in_tree = <char *> calloc(nr, sizeof(char))
    if (cost == NULL or u == NULL or v == NULL or shortest == NULL or
            col4row == NULL or row4col == NULL or path == NULL or
            done == NULL or in_tree == NULL):
        free(cost); free(u); free(v); free(shortest)
        free(col4row); free(row4col); free(path); free(done); free(in_tree)
        raise MemoryError()

    cdef Py_ssize_t i, j, cur_row, pick, sink
    cdef int64_t shift, reduced, lowest, min_val, total

    try:
        shift = a[0, 0]
        if maximize:
            for i in range(nr):
                for j in range(nc):
                    if a[i, j] > shift:
                        shift = a[i, j]
            for i in range(nr):
                for j in range(nc):
                    cost[i * nc + j] = shift - a[i, j]
        else:
            for i in range(nr):
                for j in range(nc):
                    if a[i, j] < shift:
                        shift = a[i, j]
            for i in range(nr):
                for j in range(nc):
                    cost[i * nc + j] = a[i, j] - shift

        for i in range(nr):
            col4row[i] = -1
        for j in range(nc):
            row4col[j] = -1

        for cur_row in range(nr):
            for j in range(nc):
                shortest[j] = INF
                path[j] = -1
                done[j] = 0
            for i in range(nr):
                in_tree[i] = 0
            min_val = 0
            i = cur_row
            sink = -1
            while sink == -1:
                in_tree[i] = 1
                lowest = INF
                pick = -1
                for j in range(nc):
                    if done[j]:
                        continue
                    reduced = min_val + cost[i * nc + j] - u[i] - v[j]
                    if reduced < shortest[j]:
                        shortest[j] = reduced
                        path[j] = i
                    if shortest[j] < lowest or (shortest[j] == lowest and row4col[j] == -1):
                        lowest = shortest[j]
                        pick = j
                min_val = lowest
                j = pick
                done[j] = 1
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
                pick = col4row[i]
                col4row[i] = j
                j = pick
                if i == cur_row:
                    break

        total = 0
        for i in range(nr):
            total += cost[i * nc + col4row[i]]
        if maximize:
            value = nr * shift - total
        else:
            value = total + nr * shift
        assignment = [col4row[i] for i in range(nr)]
    finally:
        free(cost); free(u); free(v); free(shortest)
        free(col4row); free(row4col); free(path); free(done); free(in_tree)
    return value, assignment


cdef int64_t _enumerate(const int64_t[:, ::1] a, Py_ssize_t i, Py_ssize_t nr,
                        Py_ssize_t nc, bint maximize, int64_t partial,
                        char *used) noexcept nogil:
    cdef int64_t best, sub
    cdef Py_ssize_t j
    if i == nr:
        return partial
    best = -INF if maximize else INF
    for j in range(nc):
        if used[j]:
            continue
        used[j] = 1
        sub = _enumerate(a, i + 1, nr, nc, maximize, partial + a[i, j], used)
        used[j] = 0
        if maximize:
            if sub > best:
                best = sub
        else:
            if sub < best:
                best = sub
    return best


def bruteforce_extremum(const int64_t[:, ::1] a, bint maximize):
    """Exact optimum by enumerating every injection of rows into columns."""
    cdef Py_ssize_t nr = a.shape[0]
    cdef Py_ssize_t nc = a.shape[1]
    if nr > nc:
        raise ValueError("kernel requires rows <= cols")
    cdef char *used = <char *> calloc(nc, sizeof(char))
    if used == NULL:
        raise MemoryError()
    cdef int64_t best
    try:
        with nogil:
            best = _enumerate(a, 0, nr, nc, maximize, 0, used)
    finally:
        free(used)
    return best
