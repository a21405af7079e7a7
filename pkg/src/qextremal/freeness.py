"""Structural predicates on the hypergraph of maximally mixed k-subsets.

The set of maximally mixed k-reductions of any pure state must avoid
certain sub-hypergraphs; these checkers verify that avoidance on a
concrete subset family and return a decisive witness when it fails.
They operate on the abstract family, so rank-derived and statevector-
derived sets are both accepted.

Exhaustive enumeration over candidate anchor sets keeps the verdicts
exact; intended for n <= 14 or so.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._kernels import iter_subset_masks
from ._subsets import mask_of, vertices_of
from .errors import ValidationError

COMPLETE_FREE = "complete_free"
HK_FREE = "hk_free"
COMPLEMENT_SYMMETRIC = "complement_symmetric"


@dataclass(frozen=True)
class FreenessVerdict:
    property_name: str
    holds: bool
    witness: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValidationError("a failed verdict must carry a witness")


def _mask_set(mm_set: Iterable[Iterable[int]], n: int, k: int) -> set[int]:
    masks = set()
    for subset in mm_set:
        mask = mask_of(subset, n)
        if mask.bit_count() != k:
            raise ValidationError(f"subset {tuple(subset)} is not a {k}-set")
        masks.add(mask)
    return masks


def check_complete_free(mm_set, n: int, k: int, l: int) -> FreenessVerdict:
    """No l-subset has all of its k-subsets maximally mixed.

    The first violating anchor in colex order is returned as witness.
    """
    if not 1 <= k <= l <= n:
        raise ValidationError("need 1 <= k <= l <= n")
    masks = _mask_set(mm_set, n, k)
    for a_mask in iter_subset_masks(n, l):
        verts = vertices_of(a_mask)
        if all(mask_of(b, n) in masks for b in combinations(verts, k)):
            return FreenessVerdict(COMPLETE_FREE, False, verts)
    return FreenessVerdict(COMPLETE_FREE, True)


def check_hk_free(mm_set, n: int, k: int) -> FreenessVerdict:
    """For every (k+2)-subset A there is a k-subset B touching A in exactly
    1 or k vertices whose reduction is not maximally mixed.

    Only defined for n = 2k+1, where the |B intersect A| = 1 hyperedges are
    forced to be {a} together with the whole complement of A.
    """
    if n != 2 * k + 1:
        raise ValidationError("hypergraph is defined for n = 2k+1 only")
    masks = _mask_set(mm_set, n, k)
    full = (1 << n) - 1
    for a_mask in iter_subset_masks(n, k + 2):
        verts = vertices_of(a_mask)
        inside_ok = all(mask_of(b, n) in masks for b in combinations(verts, k))
        if not inside_ok:
            continue
        rest = full ^ a_mask  # k-1 vertices
        if all((rest | (1 << (v - 1))) in masks for v in verts):
            return FreenessVerdict(HK_FREE, False, verts)
    return FreenessVerdict(HK_FREE, True)


def complement_symmetry(mm_set, n: int, k: int) -> FreenessVerdict:
    """On n = 2k qubits, K is maximally mixed iff its complement is."""
    if n != 2 * k:
        raise ValidationError("complement symmetry is defined for n = 2k only")
    masks = _mask_set(mm_set, n, k)
    full = (1 << n) - 1
    for mask in iter_subset_masks(n, k):
        if (mask in masks) != ((full ^ mask) in masks):
            return FreenessVerdict(COMPLEMENT_SYMMETRIC, False, vertices_of(mask))
    return FreenessVerdict(COMPLEMENT_SYMMETRIC, True)
