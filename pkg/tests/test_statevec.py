"""Statevector backend against brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qextremal.errors import (
    ParseError,
    ResourceLimitError,
    UnknownStateError,
    ValidationError,
)
from qextremal.graphs import graph_from_edges, make_random_graph, make_turan_pair_graph
from qextremal.marginal import count_mm_reductions, rank_profile
from qextremal.statevec import (
    PauliTerm,
    PureState,
    analyze_state_marginals,
    anticommutator,
    bloch_coefficient,
    count_mm_reductions_sv,
    graph_state_vector,
    is_maximally_mixed_sv,
    named_state,
    parse_amplitude_file,
    pauli_product,
    purity,
    reduced_density,
    serialize_amplitude_file,
    subset_purity,
    weight_sector_norm,
)
from qextremal._kernels import iter_subset_masks
from qextremal._subsets import vertices_of

PAULI = {
    "0": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def naive_reduced(psi: PureState, keep):
    """Partial trace by explicit index splitting; independent of the
    reshape/transpose implementation."""
    n = psi.n
    keep = sorted(keep)
    out = [q for q in range(1, n + 1) if q not in keep]
    rho = np.zeros((1 << len(keep), 1 << len(keep)), dtype=complex)
    for a in range(1 << len(keep)):
        for b in range(1 << len(keep)):
            for e in range(1 << len(out)):
                ia = ib = 0
                for pos, q in enumerate(keep):
                    ia |= ((a >> (len(keep) - 1 - pos)) & 1) << (n - q)
                    ib |= ((b >> (len(keep) - 1 - pos)) & 1) << (n - q)
                for pos, q in enumerate(out):
                    bit = ((e >> (len(out) - 1 - pos)) & 1) << (n - q)
                    ia |= bit
                    ib |= bit
                rho[a, b] += psi.amplitudes[ia] * np.conj(psi.amplitudes[ib])
    return rho


def pauli_matrix(term: PauliTerm) -> np.ndarray:
    m = np.array([[term.coefficient]], dtype=complex)
    for c in term.letters:
        m = np.kron(m, PAULI[c])
    return m


def test_single_edge_graph_state():
    g = graph_from_edges(2, [(1, 2)])
    psi = graph_state_vector(g)
    assert np.allclose(psi.amplitudes * 2, [1, 1, 1, -1])


def test_empty_graph_uniform_superposition():
    g = graph_from_edges(3, [])
    psi = graph_state_vector(g)
    assert np.allclose(psi.amplitudes, np.full(8, 8 ** -0.5))


def test_named_states():
    phi = named_state("phi4")
    nz = np.flatnonzero(phi.amplitudes)
    assert list(nz) == [0b0000, 0b0111, 0b1001, 0b1110]
    assert np.allclose(phi.amplitudes[nz], 0.5)

    m4 = named_state("m4")
    nz = np.flatnonzero(m4.amplitudes)
    assert len(nz) == 6
    assert np.allclose(np.abs(m4.amplitudes[nz]), 6 ** -0.5)
    thirds = np.round(np.angle(m4.amplitudes[nz]) / (2 * np.pi / 3)).astype(int)
    assert sorted(set(thirds % 3)) == [0, 1, 2]  # phases 1, w, w^2 all present

    assert np.allclose(named_state("tk3").amplitudes,
                       graph_state_vector(make_turan_pair_graph(3)).amplitudes)

    with pytest.raises(UnknownStateError):
        named_state("bogus")


def test_reduced_density_product_state():
    psi = PureState(2, np.array([1, 0, 0, 0], dtype=complex))
    rho = reduced_density(psi, {1})
    assert np.allclose(rho.matrix, np.diag([1, 0]))


def test_reduced_density_bell_pair():
    bell = PureState(2, np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))
    rho = reduced_density(bell, {1})
    assert np.allclose(rho.matrix, np.eye(2) / 2)


def test_reduced_density_phi4_front_pair():
    rho = reduced_density(named_state("phi4"), {1, 2})
    assert np.allclose(rho.matrix, np.eye(4) / 4)


@pytest.mark.parametrize("subset", [(1,), (2, 4), (1, 3), (1, 2, 3)])
def test_reduced_density_matches_naive(subset):
    rng = np.random.default_rng(5)
    amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    psi = PureState(4, amps / np.linalg.norm(amps))
    assert np.allclose(reduced_density(psi, subset).matrix, naive_reduced(psi, subset))


def test_purity_endpoints():
    mixed = reduced_density(named_state("phi4"), {1, 2})
    assert purity(mixed) == pytest.approx(1 / 4, abs=1e-12)
    pure_rho = reduced_density(PureState(2, np.array([0, 1, 0, 0], complex)), {1, 2})
    assert purity(pure_rho) == pytest.approx(1.0, abs=1e-12)
    assert is_maximally_mixed_sv(named_state("phi4"), {1, 2})


def test_m4_two_body_purities_are_one_third():
    m4 = named_state("m4")
    for pair in combinations(range(1, 5), 2):
        assert subset_purity(m4, pair) == pytest.approx(1 / 3, abs=1e-12)
    assert count_mm_reductions_sv(m4, 2)[0] == 0


def test_phi4_is_2_extremal():
    assert count_mm_reductions_sv(named_state("phi4"), 2)[0] == 4


def test_schmidt_complementary_purities_agree():
    rng = np.random.default_rng(11)
    amps = rng.normal(size=64) + 1j * rng.normal(size=64)
    psi = PureState(6, amps / np.linalg.norm(amps))
    full = set(range(1, 7))
    for size in (1, 2, 3):
        for subset in combinations(range(1, 7), size):
            rest = tuple(sorted(full - set(subset)))
            assert subset_purity(psi, subset) == pytest.approx(
                subset_purity(psi, rest), abs=1e-9)


def test_reduced_density_trace_one():
    rng = np.random.default_rng(17)
    amps = rng.normal(size=32) + 1j * rng.normal(size=32)
    psi = PureState(5, amps / np.linalg.norm(amps))
    for subset in [(1,), (2, 5), (1, 3, 4)]:
        assert abs(np.trace(reduced_density(psi, subset).matrix) - 1) < 1e-12


def test_projector_identity_on_t4(t4):
    # when the complement of K is maximally mixed with l parties, the
    # reduction to K squares to 2^-l times itself
    psi = graph_state_vector(t4)
    full = set(range(1, 9))
    _, mm = count_mm_reductions(t4, 4)
    for kbar in [mm[0], mm[1], (1,), (5, 6)]:
        l = len(kbar)
        keep = tuple(sorted(full - set(kbar)))
        rho = reduced_density(psi, keep).matrix
        assert np.max(np.abs(rho @ rho - 2.0 ** (-l) * rho)) < 1e-9


def test_bloch_weight_zero_is_trace():
    rng = np.random.default_rng(23)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi = PureState(3, amps / np.linalg.norm(amps))
    assert bloch_coefficient(psi, "000") == pytest.approx(1.0, abs=1e-12)


def test_bloch_single_qubit_zero_state():
    psi = PureState(1, np.array([1, 0], dtype=complex))
    assert bloch_coefficient(psi, "z") == pytest.approx(1.0, abs=1e-12)
    assert bloch_coefficient(psi, "x") == pytest.approx(0.0, abs=1e-12)
    assert weight_sector_norm(psi, 1) == pytest.approx(1.0, abs=1e-12)


def test_bloch_matches_dense_trace():
    rng = np.random.default_rng(29)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi = PureState(3, amps / np.linalg.norm(amps))
    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    sampler = random.Random(31)
    for _ in range(40):
        letters = tuple(sampler.choice("0xyz") for _ in range(3))
        dense = float(np.trace(pauli_matrix(PauliTerm(3, letters)) @ rho).real)
        assert bloch_coefficient(psi, letters) == pytest.approx(dense, abs=1e-10)


def naive_sector_norm(psi: PureState, j: int) -> float:
    total = 0.0
    for letters in product("0xyz", repeat=psi.n):
        if sum(1 for c in letters if c != "0") != j:
            continue
        total += bloch_coefficient(psi, letters) ** 2
    return total


def test_weight_sector_norm_matches_naive_enumeration():
    rng = np.random.default_rng(37)
    amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    psi = PureState(4, amps / np.linalg.norm(amps))
    for j in (1, 2, 3, 4):
        assert weight_sector_norm(psi, j) == pytest.approx(
            naive_sector_norm(psi, j), abs=1e-10)


def test_t4_sectors_vanish_up_to_three(t4):
    psi = graph_state_vector(t4)
    for j in (1, 2, 3):
        assert weight_sector_norm(psi, j) < 1e-12
    assert weight_sector_norm(psi, 4) > 1.0


def test_weight_sector_norm_resource_guard():
    psi = PureState(13, np.eye(1, 1 << 13, 0, dtype=complex)[0])
    with pytest.raises(ResourceLimitError):
        weight_sector_norm(psi, 1)


def test_pauli_product_phase():
    x0 = PauliTerm(2, ("x", "0"))
    z0 = PauliTerm(2, ("z", "0"))
    prod = pauli_product(x0, z0)
    assert prod.letters == ("y", "0")
    assert prod.coefficient == pytest.approx(-1j)


def test_anticommutator_examples():
    assert anticommutator(PauliTerm(2, ("x", "0")), PauliTerm(2, ("z", "0"))) is None
    ac = anticommutator(PauliTerm(2, ("x", "0")), PauliTerm(2, ("x", "z")))
    assert ac is not None
    assert ac.letters == ("0", "z")
    assert ac.coefficient == pytest.approx(2.0)
    assert ac.weight == 1
    assert ac.weight % 2 == (1 + 2) % 2


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_anticommutator_matches_dense_algebra(data):
    n = data.draw(st.integers(1, 4))
    letters_a = tuple(data.draw(st.sampled_from("0xyz")) for _ in range(n))
    letters_b = tuple(data.draw(st.sampled_from("0xyz")) for _ in range(n))
    a = PauliTerm(n, letters_a, data.draw(st.sampled_from([1.0, -1.0, 0.5])))
    b = PauliTerm(n, letters_b, data.draw(st.sampled_from([1.0, -1.0, 2.0])))
    dense = pauli_matrix(a) @ pauli_matrix(b) + pauli_matrix(b) @ pauli_matrix(a)
    ac = anticommutator(a, b)
    if ac is None:
        assert np.max(np.abs(dense)) < 1e-12
    else:
        assert np.allclose(dense, pauli_matrix(ac))
        assert (ac.weight - a.weight - b.weight) % 2 == 0


@settings(max_examples=500, deadline=None)
@given(st.data())
def test_parity_rule_sampled(data):
    n = data.draw(st.integers(1, 8))
    a = PauliTerm(n, tuple(data.draw(st.sampled_from("0xyz")) for _ in range(n)))
    b = PauliTerm(n, tuple(data.draw(st.sampled_from("0xyz")) for _ in range(n)))
    ac = anticommutator(a, b)
    if ac is not None:
        assert (ac.weight - a.weight - b.weight) % 2 == 0


@pytest.mark.parametrize("n,seed", [(4, 0), (6, 1), (8, 2)])
def test_backends_agree_on_random_graph_states(n, seed):
    g = make_random_graph(n, seed)
    psi = graph_state_vector(g)
    for k in range(1, n // 2 + 1):
        profile = rank_profile(g, k)
        for mask, r in zip(iter_subset_masks(n, k), profile):
            subset = vertices_of(mask)
            assert is_maximally_mixed_sv(psi, subset) == (r == k)
            assert subset_purity(psi, subset) == pytest.approx(2.0 ** (-r), abs=1e-9)


def test_sv_marginal_report_on_graph_state(t4):
    rep = analyze_state_marginals(graph_state_vector(t4), 4)
    assert rep.m_k == 56
    assert rep.uniformity_order == 3
    assert rep.pi_me == pytest.approx(3 / 35, abs=1e-12)


def test_amplitude_file_round_trip():
    psi = named_state("m4")
    text = serialize_amplitude_file(psi)
    back = parse_amplitude_file(text)
    assert back.n == 4
    assert np.allclose(back.amplitudes, psi.amplitudes)


def test_amplitude_file_normalizes_small_deviation():
    a = (0.5 ** 0.5) * (1 + 5e-7)
    text = f"n 1\n0 {a!r} 0.0\n1 {a!r} 0.0\n"
    psi = parse_amplitude_file(text)
    assert np.linalg.norm(psi.amplitudes) == pytest.approx(1.0, abs=1e-12)


def test_amplitude_file_rejects_bad_norm():
    with pytest.raises(ValidationError):
        parse_amplitude_file("n 1\n0 0.5 0.0\n1 0.5 0.0\n")


@pytest.mark.parametrize("text,line", [
    ("n 2\n00 0.9 0.0\n00 0.1 0.0\n", 3),   # duplicate basis state
    ("n 2\n012 1.0 0.0\n", 2),              # bad bitstring
    ("n 2\n00 1.0\n", 2),                   # missing field
])
def test_amplitude_file_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_amplitude_file(text)
    assert err.value.line == line


def test_graph_state_resource_guard():
    g = graph_from_edges(27, [])
    with pytest.raises(ResourceLimitError):
        graph_state_vector(g)
