"""Rank-backend marginal analysis: cut ranks, counts, purity averages."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from qextremal.bounds import tk_closed_form
from qextremal.errors import ValidationError
from qextremal.graphs import graph_from_edges, make_random_graph, make_turan_pair_graph
from qextremal.marginal import (
    analyze_graph_marginals,
    count_mm_reductions,
    cut_rank,
    is_maximally_mixed_rank,
    linear_entropy,
    marginal_purity_rank,
    potential_me,
    uniformity_order,
    uniformity_threshold,
)


def test_cut_rank_t4_clique_side(t4):
    assert cut_rank(t4, {1, 2, 3, 4}) == 4


def test_cut_rank_t4_mixed_pair(t4):
    # both clique halves contribute the same two indices: rank drops to 2
    assert cut_rank(t4, {1, 2, 5, 6}) == 2


def test_cut_rank_isolated_vertex():
    g = graph_from_edges(3, [(1, 2)])
    assert cut_rank(g, {3}) == 0


def test_cut_rank_rejects_empty_and_full(t4):
    with pytest.raises(ValidationError):
        cut_rank(t4, set())
    with pytest.raises(ValidationError):
        cut_rank(t4, set(range(1, 9)))


def test_is_maximally_mixed_t4(t4):
    assert is_maximally_mixed_rank(t4, {1, 2, 3, 4})


def test_is_maximally_mixed_t2_cases():
    # matched pair across the cliques is mixed, the crossed pair is not
    g = make_turan_pair_graph(2)
    assert is_maximally_mixed_rank(g, {1, 3})
    assert not is_maximally_mixed_rank(g, {1, 4})
    assert count_mm_reductions(g, 2)[0] == 4


def test_single_edge_one_body():
    g = graph_from_edges(2, [(1, 2)])
    assert is_maximally_mixed_rank(g, {1})


def test_is_maximally_mixed_rejects_oversized(t4):
    with pytest.raises(ValidationError):
        is_maximally_mixed_rank(t4, {1, 2, 3, 4, 5})


def test_purity_values(t4):
    assert marginal_purity_rank(t4, {1, 2, 3, 4}) == Fraction(1, 16)
    assert marginal_purity_rank(t4, {1, 2, 5, 6}) == Fraction(1, 4)
    assert marginal_purity_rank(t4, {2, 3, 4, 5}) == Fraction(1, 8)


@pytest.mark.parametrize("k,expected", [(2, 4), (3, 20), (4, 56), (5, 192), (6, 512)])
def test_count_mm_paired_clique(k, expected):
    m_k, mm = count_mm_reductions(make_turan_pair_graph(k), k)
    assert m_k == expected == len(mm)


def test_count_mm_circulant(circulant12):
    assert count_mm_reductions(circulant12, 6)[0] == 540


def test_mm_subsets_are_colex_sorted(t4):
    _, mm = count_mm_reductions(t4, 4)
    keys = [sum(1 << (v - 1) for v in s) for s in mm]
    assert keys == sorted(keys)
    assert mm[0] == (1, 2, 3, 4)


def test_uniformity_orders(t4, circulant12):
    assert uniformity_order(t4) == 3
    assert uniformity_order(circulant12) == 5
    assert uniformity_order(make_turan_pair_graph(3)) == 3  # AME of six qubits


def test_uniformity_order_zero_for_isolated_vertex():
    g = graph_from_edges(3, [(1, 2)])
    assert uniformity_order(g) == 0


def test_potential_me_t4(t4):
    assert potential_me(t4) == Fraction(3, 35)


def test_potential_me_ame6():
    g = make_turan_pair_graph(3)
    pi = potential_me(g)
    assert pi == Fraction(1, 8)
    assert linear_entropy(pi, 3) == 1


def test_profile_average_example():
    # the 70-subset average 56 x 1/16 + 14 x 1/4 equals 1/10
    assert (56 * Fraction(1, 16) + 14 * Fraction(1, 4)) / 70 == Fraction(1, 10)


def test_linear_entropy_formula():
    assert linear_entropy(Fraction(3, 35), 4) == Fraction(512, 525)


def test_uniformity_threshold_values():
    assert uniformity_threshold(8, 4, 3) == 60
    assert uniformity_threshold(7, 3, 2) == 30
    assert uniformity_threshold(9, 4, 0) == 0


def test_uniformity_threshold_rejects_bad_order():
    with pytest.raises(ValidationError):
        uniformity_threshold(8, 4, 4)
    with pytest.raises(ValidationError):
        uniformity_threshold(8, 5, 2)


def test_threshold_is_sufficient_on_t4(t4):
    # m_4 = 56 is below the generic threshold 60, yet the state is
    # 3-uniform: the bound is sufficient, not necessary
    m4, _ = count_mm_reductions(t4, 4)
    assert m4 <= uniformity_threshold(8, 4, 3)
    assert uniformity_order(t4) == 3


@pytest.mark.parametrize("k", range(2, 9))
def test_counts_match_closed_form(k):
    g = make_turan_pair_graph(k)
    assert count_mm_reductions(g, k)[0] == tk_closed_form(k)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.sampled_from([4, 6, 8]))
def test_complement_symmetry_of_cut_rank(seed, n):
    g = make_random_graph(n, seed)
    k = n // 2
    full = set(range(1, n + 1))
    for _, mm in [count_mm_reductions(g, k)]:
        mm_set = set(mm)
        for subset in mm_set:
            assert tuple(sorted(full - set(subset))) in mm_set


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_monotonicity_failed_subset_poisons_supersets(seed):
    g = make_random_graph(8, seed)
    _, mm3 = count_mm_reductions(g, 3)
    mm3 = set(mm3)
    _, mm4 = count_mm_reductions(g, 4)
    for superset in mm4:
        for drop in superset:
            smaller = tuple(v for v in superset if v != drop)
            # if a 3-set is not mixed, no mixed 4-set may contain it
            assert smaller in mm3


def test_analyze_report_consistency(t4):
    rep = analyze_graph_marginals(t4, 4)
    assert rep.m_k + len(rep.non_mm) == rep.total == comb(8, 4)
    assert all(p == Fraction(1, 1 << r) for _, r, p in rep.non_mm)
    assert rep.pi_me == Fraction(3, 35)
    assert rep.s_linear == Fraction(512, 525)
    assert rep.uniformity_order == 3
