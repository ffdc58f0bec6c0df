"""Dense nonnegative integer matrices, margins, and membership tests.

IntMatrix is the universal payload: an immutable 2-D int64 array.  The
text format used by the CLI lives here too: one row per line, base-10
entries separated by whitespace, no header, blank lines ignored, ragged
rows rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .params import ProblemParams


class MatrixParseError(ValueError):
    """Raised on malformed matrix text; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of nonnegative 64-bit integers."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.dtype.kind not in ("i", "u", "O"):
            raise TypeError(f"entries must be integers, got dtype {arr.dtype}")
        arr = arr.astype(np.int64)  # object arrays: numpy raises on overflow
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-D, got {arr.ndim}-D")
        if arr.size and arr.min() < 0:
            raise ValueError("matrix entries must be nonnegative")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(np.asarray(rows))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx):
        return self.data[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.shape, self.data.tobytes()))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.data.T)

    def total(self) -> int:
        return int(self.data.sum())


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of checking one matrix against one parameter tuple.

    ``reason`` is "ok" for members, else "shape", "row-sum" or "col-sum".
    A shape mismatch is reported in-band: non-member with both indices
    absent.  Row sums are checked before column sums.
    """

    is_member: bool
    expected_row_sum: int
    expected_col_sum: int
    first_bad_row: Optional[int] = None
    first_bad_col: Optional[int] = None
    reason: str = "ok"


def row_sums(a: IntMatrix) -> list[int]:
    return [int(s) for s in a.data.sum(axis=1)]


def col_sums(a: IntMatrix) -> list[int]:
    return [int(s) for s in a.data.sum(axis=0)]


def validate_membership(a: IntMatrix, p: ProblemParams) -> MembershipReport:
    """Check that ``a`` has shape nk x nl with row sums ml and column sums mk."""
    if a.shape != (p.rows, p.cols):
        return MembershipReport(
            is_member=False,
            expected_row_sum=p.row_sum,
            expected_col_sum=p.col_sum,
            reason="shape",
        )
    for i, s in enumerate(row_sums(a)):
        if s != p.row_sum:
            return MembershipReport(
                is_member=False,
                expected_row_sum=p.row_sum,
                expected_col_sum=p.col_sum,
                first_bad_row=i,
                reason="row-sum",
            )
    for j, s in enumerate(col_sums(a)):
        if s != p.col_sum:
            return MembershipReport(
                is_member=False,
                expected_row_sum=p.row_sum,
                expected_col_sum=p.col_sum,
                first_bad_col=j,
                reason="col-sum",
            )
    return MembershipReport(
        is_member=True, expected_row_sum=p.row_sum, expected_col_sum=p.col_sum
    )


def parse_matrix_text(text: str) -> IntMatrix:
    """Parse the plain text matrix format; raise MatrixParseError on bad input."""
    rows: list[list[int]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        entries = []
        for tok in tokens:
            try:
                value = int(tok, 10)
            except ValueError:
                raise MatrixParseError(f"not an integer: {tok!r}", lineno) from None
            if value < 0:
                raise MatrixParseError(f"negative entry: {value}", lineno)
            entries.append(value)
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise MatrixParseError(
                f"ragged row: expected {width} entries, got {len(entries)}", lineno
            )
        rows.append(entries)
    if not rows:
        raise MatrixParseError("empty matrix", 1)
    return IntMatrix.from_rows(rows)


def format_matrix_text(a: IntMatrix) -> str:
    """Render in the text format: space-separated, no alignment padding."""
    return "\n".join(" ".join(str(int(v)) for v in row) for row in a.data) + "\n"
