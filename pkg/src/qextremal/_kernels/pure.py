"""Pure-Python GF(2) kernels on int bitsets.

Rows are Python ints used as bit vectors: bit j holds column j+1 (columns
are 1-indexed at the API level, bit positions are 0-based).  Width is
unbounded; the compiled twin in ``_fastrank`` covers widths up to 62 and
the dispatcher in ``__init__`` routes between the two.

Subset enumeration is colexicographic: k-subset bitmasks are produced in
increasing numeric order (Gosper's hack), which is exactly colex order on
the subsets they encode.
"""

from __future__ import annotations

from typing import Iterator


def rank_of_rows(rows, n_cols: int | None = None) -> int:
    """GF(2) rank of bit-packed rows.

    Pivot for each row is its first nonzero bit in column order; the pivot
    table is keyed by that bit, so elimination is deterministic.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        r = row
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                rank += 1
                break
            r ^= p
    return rank


def iter_subset_masks(n: int, k: int) -> Iterator[int]:
    """Yield all k-subset bitmasks of an n-set in colex order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((mask ^ ripple) >> 2) // low) | ripple


def cut_rank_of_mask(adj_rows, mask: int) -> int:
    """Rank of the adjacency submatrix rows(mask) x columns(complement)."""
    inv = ~mask
    pivots: dict[int, int] = {}
    rank = 0
    m = mask
    while m:
        low = m & -m
        m ^= low
        r = adj_rows[low.bit_length() - 1] & inv
        while r:
            lb = r & -r
            p = pivots.get(lb)
            if p is None:
                pivots[lb] = r
                rank += 1
                break
            r ^= p
    return rank


def subset_rank_profile(adj_rows, n: int, k: int) -> bytearray:
    """Cut rank of every k-subset, colex order. Ranks fit in a byte."""
    out = bytearray()
    for mask in iter_subset_masks(n, k):
        out.append(cut_rank_of_mask(adj_rows, mask))
    return out


def count_full_rank_cuts(adj_rows, n: int, k: int) -> int:
    """Number of k-subsets whose cut matrix has full rank k."""
    count = 0
    for mask in iter_subset_masks(n, k):
        if cut_rank_of_mask(adj_rows, mask) == k:
            count += 1
    return count
