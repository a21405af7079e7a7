"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

The compiled kernels (Cython) handle matrices up to 62 columns; anything
wider routes to the pure implementation regardless of what was selected.
Set ``QEX_KERNEL=pure`` to force the fallback, ``QEX_KERNEL=compiled`` to
fail loudly when the extension is missing (useful for benchmarking and CI).
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _fastrank
except ImportError:
    _fastrank = None

_choice = os.environ.get("QEX_KERNEL", "").strip().lower()
if _choice == "compiled" and _fastrank is None:
    raise ImportError("QEX_KERNEL=compiled but the _fastrank extension is not built")

USING_COMPILED = _fastrank is not None and _choice != "pure"

_COMPILED_MAX_COLS = 62

iter_subset_masks = pure.iter_subset_masks
cut_rank_of_mask = pure.cut_rank_of_mask


def kernel_name() -> str:
    return "compiled" if USING_COMPILED else "pure"


def rank_of_rows(rows, n_cols: int) -> int:
    if USING_COMPILED and n_cols <= _COMPILED_MAX_COLS:
        return _fastrank.rank_of_rows(rows)
    return pure.rank_of_rows(rows, n_cols)


def subset_rank_profile(adj_rows, n: int, k: int) -> bytearray:
    if USING_COMPILED and n <= _COMPILED_MAX_COLS:
        return _fastrank.subset_rank_profile(adj_rows, n, k)
    return pure.subset_rank_profile(adj_rows, n, k)


def count_full_rank_cuts(adj_rows, n: int, k: int) -> int:
    if USING_COMPILED and n <= _COMPILED_MAX_COLS:
        return _fastrank.count_full_rank_cuts(adj_rows, n, k)
    return pure.count_full_rank_cuts(adj_rows, n, k)
