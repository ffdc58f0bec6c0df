"""Benchmark the compiled kernels against the pure-Python fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py [--repeats N]

Covers the two hot kernels (rectangular assignment, brute-force
transversal enumeration) on representative sizes, plus one end-to-end
polytope certification which hammers the assignment solver once per
enumerated point.
"""

import argparse
import random
import time

import numpy as np

from tropdet import derive_params, verify_bounds
from tropdet import kernels


def _random_arrays(rng, count, rows, cols, max_entry=99):
    return [
        np.array(
            [[rng.randint(0, max_entry) for _ in range(cols)] for _ in range(rows)],
            dtype=np.int64,
        )
        for _ in range(count)
    ]


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_assignment(backend, arrays):
    def run():
        for a in arrays:
            backend.assignment_extremum(a, True)
            backend.assignment_extremum(a, False)

    return run


def bench_bruteforce(backend, arrays):
    def run():
        for a in arrays:
            backend.bruteforce_extremum(a, True)
            backend.bruteforce_extremum(a, False)

    return run


def bench_verify(backend_name, params):
    def run():
        kernels.use_backend(backend_name)
        try:
            verify_bounds(params)
        finally:
            kernels.use_backend(default_backend)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "c" not in backends:
        print("compiled backend not built; showing pure-Python numbers only")

    rng = random.Random(1)
    workloads = [
        ("assignment 8x12 x200", bench_assignment, _random_arrays(rng, 200, 8, 12)),
        ("assignment 24x40 x50", bench_assignment, _random_arrays(rng, 50, 24, 40)),
        ("bruteforce 6x8 x20", bench_bruteforce, _random_arrays(rng, 20, 6, 8)),
        ("bruteforce 7x10 x3", bench_bruteforce, _random_arrays(rng, 3, 7, 10)),
    ]

    print(f"{'workload':<24} {'python':>10} {'c':>10} {'speedup':>9}")
    for label, factory, arrays in workloads:
        py_time = _time(factory(backends["python"], arrays), args.repeats)
        row = f"{label:<24} {py_time * 1e3:>8.1f}ms"
        if "c" in backends:
            c_time = _time(factory(backends["c"], arrays), args.repeats)
            row += f" {c_time * 1e3:>8.1f}ms {py_time / c_time:>8.1f}x"
        print(row)

    # End to end: enumerate a ~10^5-point polytope, two solves per point.
    params = derive_params(1, 1, 5, 3)
    label = "verify_bounds(1,1,5,3)"
    py_time = _time(bench_verify("python", params), args.repeats)
    row = f"{label:<24} {py_time * 1e3:>8.1f}ms"
    if "c" in backends:
        c_time = _time(bench_verify("c", params), args.repeats)
        row += f" {c_time * 1e3:>8.1f}ms {py_time / c_time:>8.1f}x"
    print(row)


default_backend = kernels.backend_name()

if __name__ == "__main__":
    main()
