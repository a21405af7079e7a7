"""Conversions between vertex subsets (1-based tuples) and int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator

from ._kernels import iter_subset_masks
from .errors import ValidationError


def mask_of(subset: Iterable[int], n: int) -> int:
    mask = 0
    for v in subset:
        if not 1 <= v <= n:
            raise ValidationError(f"vertex {v} out of range 1..{n}")
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValidationError(f"repeated vertex {v}")
        mask |= bit
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def iter_k_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {1..n} in colex order."""
    for mask in iter_subset_masks(n, k):
        yield vertices_of(mask)
