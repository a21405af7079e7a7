"""Exact linear algebra over GF(2) with bit-packed rows.

The :class:`F2Matrix` is the workhorse behind the cut-rank criterion: the
adjacency matrix of a graph lives here, and rank of its submatrices decides
which reductions of the graph state are maximally mixed.

Row and column indices are 1-based throughout, matching the vertex labels
used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .errors import ValidationError


@dataclass(frozen=True)
class F2Matrix:
    """Immutable dense binary matrix; each row is an int bitset.

    Bit j-1 of ``rows[i-1]`` holds entry (i, j).  Bits at positions
    >= n_cols must be zero.
    """

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValidationError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.n_rows:
            raise ValidationError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        mask = (1 << self.n_cols) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~mask:
                raise ValidationError(f"row {i + 1} has bits outside {self.n_cols} columns")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> F2Matrix:
        """Build from a list of 0/1 row lists."""
        n_rows = len(entries)
        n_cols = len(entries[0]) if n_rows else 0
        rows = []
        for r in entries:
            if len(r) != n_cols:
                raise ValidationError("ragged rows")
            rows.append(sum((1 << j) for j, v in enumerate(r) if v & 1))
        return cls(n_rows, n_cols, tuple(rows))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> F2Matrix:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def get(self, i: int, j: int) -> int:
        """Entry at row i, column j (1-based)."""
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise ValidationError(f"index ({i}, {j}) out of range")
        return (self.rows[i - 1] >> (j - 1)) & 1

    def to_entries(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n_cols)] for row in self.rows]


def rank(m: F2Matrix) -> int:
    """GF(2) rank. The input is never modified; elimination runs on a copy."""
    return _kernels.rank_of_rows(m.rows, m.n_cols)


def submatrix(m: F2Matrix, row_idx: Iterable[int], col_idx: Iterable[int]) -> F2Matrix:
    """Submatrix with the given 1-based rows and columns, ascending order."""
    rs = sorted(set(row_idx))
    cs = sorted(set(col_idx))
    if rs and not (1 <= rs[0] and rs[-1] <= m.n_rows):
        raise ValidationError(f"row index out of range 1..{m.n_rows}")
    if cs and not (1 <= cs[0] and cs[-1] <= m.n_cols):
        raise ValidationError(f"column index out of range 1..{m.n_cols}")
    rows = []
    for i in rs:
        src = m.rows[i - 1]
        packed = 0
        for t, j in enumerate(cs):
            packed |= ((src >> (j - 1)) & 1) << t
        rows.append(packed)
    return F2Matrix(len(rs), len(cs), tuple(rows))


def transpose(m: F2Matrix) -> F2Matrix:
    rows = []
    for j in range(m.n_cols):
        packed = 0
        for i in range(m.n_rows):
            packed |= ((m.rows[i] >> j) & 1) << i
        rows.append(packed)
    return F2Matrix(m.n_cols, m.n_rows, tuple(rows))
