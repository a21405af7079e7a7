"""Rank-backend marginal analysis of graph states.

For a graph state, the reduction to a subset K is maximally mixed exactly
when the adjacency submatrix with rows K and columns outside K has full
GF(2) rank; more generally its purity is 2^(-cut rank).  Everything here
is exact: purities and their averages are rationals, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from . import _kernels
from ._subsets import mask_of, vertices_of
from .errors import ValidationError
from .graphs import Graph


def cut_rank(g: Graph, subset: Iterable[int]) -> int:
    """GF(2) rank of the adjacency block rows(K) x columns(complement of K)."""
    mask = mask_of(subset, g.n)
    size = mask.bit_count()
    if not 1 <= size <= g.n - 1:
        raise ValidationError("subset must be proper and nonempty")
    return _kernels.cut_rank_of_mask(g.adjacency.rows, mask)


def is_maximally_mixed_rank(g: Graph, subset: Iterable[int]) -> bool:
    """True iff the reduction of the graph state to the subset is I/2^|K|."""
    mask = mask_of(subset, g.n)
    size = mask.bit_count()
    if size < 1 or size > g.n // 2:
        raise ValidationError(f"subset size must be in 1..floor(n/2) = {g.n // 2}")
    return _kernels.cut_rank_of_mask(g.adjacency.rows, mask) == size


def marginal_purity_rank(g: Graph, subset: Iterable[int]) -> Fraction:
    """Exact purity 2^(-cut rank) of the reduction to the subset."""
    return Fraction(1, 1 << cut_rank(g, subset))


def rank_profile(g: Graph, k: int) -> bytearray:
    """Cut rank of every k-subset, colex order."""
    if not 1 <= k <= g.n - 1:
        raise ValidationError("need 1 <= k <= n-1")
    return _kernels.subset_rank_profile(g.adjacency.rows, g.n, k)


def count_mm_reductions(g: Graph, k: int) -> tuple[int, list[tuple[int, ...]]]:
    """m_k and the list of maximally mixed k-subsets, colex order."""
    if not 1 <= k <= g.n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {g.n // 2}")
    mm = [
        vertices_of(mask)
        for mask, r in zip(_kernels.iter_subset_masks(g.n, k), rank_profile(g, k))
        if r == k
    ]
    return len(mm), mm


def uniformity_order(g: Graph) -> int:
    """Largest s such that every reduction of size <= s is maximally mixed.

    Scans s upward; a failed size bounds all larger sizes (a non-mixed
    subset poisons every superset), so the first gap is the answer.
    """
    half = g.n // 2
    order = 0
    for s in range(1, half + 1):
        if _kernels.count_full_rank_cuts(g.adjacency.rows, g.n, s) != comb(g.n, s):
            break
        order = s
    return order


def potential_me(g: Graph) -> Fraction:
    """Average purity over all floor(n/2)-subsets, exact."""
    if g.n < 2:
        raise ValidationError("potential of multipartite entanglement needs n >= 2")
    half = g.n // 2
    total = Fraction(0)
    for r in rank_profile(g, half):
        total += Fraction(1, 1 << r)
    return total / comb(g.n, half)


def linear_entropy(pi_me: Fraction, k: int) -> Fraction:
    """Average linear entropy matching an average purity over k-body cuts."""
    if k < 1:
        raise ValidationError("need k >= 1")
    d = 1 << k
    return (1 - Fraction(pi_me)) * d / (d - 1)


def uniformity_threshold(n: int, k: int, s: int) -> int:
    """Smallest m_k count that forces s-uniformity by the covering argument.

    Any state with m_k strictly above the returned value is s-uniform:
    the maximally mixed k-sets are too many to avoid covering every s-set.
    For n = 2k the threshold drops because mixed k-sets come in
    complementary pairs.  Sufficient, not necessary.
    """
    if s == 0:
        return 0
    if not 0 < s < k or k > n // 2:
        raise ValidationError("need 0 <= s < k <= floor(n/2)")
    factor = 2 if n == 2 * k else 1
    return comb(n, k) - factor * comb(n - s, k - s)


@dataclass(frozen=True)
class MarginalReport:
    """Exact per-(graph, k) analysis produced by the rank backend."""

    n: int
    k: int
    m_k: int
    total: int
    mm_subsets: tuple[tuple[int, ...], ...]
    non_mm: tuple[tuple[tuple[int, ...], int, Fraction], ...]  # (subset, cut rank, purity)
    uniformity_order: int
    pi_me: Fraction
    s_linear: Fraction


def analyze_graph_marginals(g: Graph, k: int) -> MarginalReport:
    """Full rank-backend report: every k-subset classified, plus the
    state-level uniformity order and half-body purity average."""
    if not 1 <= k <= g.n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {g.n // 2}")
    mm = []
    non_mm = []
    for mask, r in zip(_kernels.iter_subset_masks(g.n, k), rank_profile(g, k)):
        if r == k:
            mm.append(vertices_of(mask))
        else:
            non_mm.append((vertices_of(mask), r, Fraction(1, 1 << r)))
    pi = potential_me(g)
    return MarginalReport(
        n=g.n,
        k=k,
        m_k=len(mm),
        total=comb(g.n, k),
        mm_subsets=tuple(mm),
        non_mm=tuple(non_mm),
        uniformity_order=uniformity_order(g),
        pi_me=pi,
        s_linear=linear_entropy(pi, g.n // 2),
    )
