"""Backend selection for the hot kernels.

Two interchangeable implementations exist: tropdet._kernels_c (Cython,
built at install time when a compiler is available) and
tropdet._kernels_py (pure Python).  The compiled one is picked at import
when present; everything else in the package is backend-agnostic.

Both backends are exact over int64 inputs and return identical values;
tests assert parity and benchmarks/bench_kernels.py measures the gap.
"""

from __future__ import annotations

import numpy as np

from . import _kernels_py

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

_active = _kernels_c if _kernels_c is not None else _kernels_py


def backend_name() -> str:
    """Name of the backend in use: "c" or "python"."""
    return "c" if _active is _kernels_c else "python"


def available_backends() -> dict[str, object]:
    """Importable backend modules keyed by name."""
    out = {"python": _kernels_py}
    if _kernels_c is not None:
        out["c"] = _kernels_c
    return out


def use_backend(name: str) -> None:
    """Switch the active backend; for tests and benchmarks."""
    global _active
    _active = available_backends()[name]


def _as_c_int64(data: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(data, dtype=np.int64)


def assignment_extremum(data: np.ndarray, maximize: bool) -> tuple[int, list[int]]:
    """Optimal transversal value and per-row column choice; rows <= cols."""
    value, col4row = _active.assignment_extremum(_as_c_int64(data), maximize)
    return int(value), list(col4row)


def bruteforce_extremum(data: np.ndarray, maximize: bool) -> int:
    """Exhaustive-enumeration optimum; rows <= cols; caller enforces the cap."""
    return int(_active.bruteforce_extremum(_as_c_int64(data), maximize))
