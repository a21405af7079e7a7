"""GF(2) matrix rank against a naive textbook oracle, plus invariances."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from qextremal.errors import ValidationError
from qextremal.f2linalg import F2Matrix, rank, submatrix, transpose

from conftest import PAIRED_CLIQUE_8


def naive_rank(entries) -> int:
    """Row reduction on explicit 0/1 lists; independent of the bitset path."""
    m = [row[:] for row in entries]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] == 1), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(n_rows):
            if i != r and m[i][c] == 1:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def random_entries(rng, n_rows, n_cols):
    return [[rng.randint(0, 1) for _ in range(n_cols)] for _ in range(n_rows)]


def test_zero_matrix_rank():
    assert rank(F2Matrix.zeros(3, 3)) == 0


def test_identity_rank():
    assert rank(F2Matrix.identity(3)) == 3


def test_t4_block_is_identity_of_rank_4():
    m = F2Matrix.from_entries(PAIRED_CLIQUE_8)
    block = submatrix(m, {1, 2, 3, 4}, {5, 6, 7, 8})
    assert block == F2Matrix.identity(4)
    assert rank(block) == 4


def test_rank_matches_naive_oracle_on_random_8x8():
    rng = random.Random(628318)
    for _ in range(300):
        entries = random_entries(rng, 8, 8)
        assert rank(F2Matrix.from_entries(entries)) == naive_rank(entries)


def test_rank_matches_naive_oracle_rectangular():
    rng = random.Random(141421)
    for _ in range(150):
        n_rows = rng.randint(1, 12)
        n_cols = rng.randint(1, 12)
        entries = random_entries(rng, n_rows, n_cols)
        assert rank(F2Matrix.from_entries(entries)) == naive_rank(entries)


@given(st.integers(0, 2**256 - 1), st.data())
def test_rank_equals_transpose_rank(seed, data):
    rng = random.Random(seed)
    n_rows = data.draw(st.integers(1, 16))
    n_cols = data.draw(st.integers(1, 16))
    m = F2Matrix.from_entries(random_entries(rng, n_rows, n_cols))
    assert rank(m) == rank(transpose(m))


@given(st.integers(0, 2**64 - 1))
def test_rank_invariant_under_row_ops(seed):
    rng = random.Random(seed)
    entries = random_entries(rng, 6, 9)
    m = F2Matrix.from_entries(entries)
    base = rank(m)

    i, j = rng.sample(range(6), 2)
    swapped = entries[:]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert rank(F2Matrix.from_entries(swapped)) == base

    added = [row[:] for row in entries]
    added[i] = [(a + b) % 2 for a, b in zip(added[i], added[j])]
    assert rank(F2Matrix.from_entries(added)) == base


def test_rank_does_not_modify_input():
    m = F2Matrix.from_entries([[1, 1], [1, 0]])
    before = m.rows
    rank(m)
    assert m.rows == before


def test_submatrix_identity_corner():
    assert submatrix(F2Matrix.identity(4), {1, 2}, {1, 2}) == F2Matrix.identity(2)


def test_submatrix_empty_rows():
    m = F2Matrix.from_entries([[1, 0], [0, 1]])
    empty = submatrix(m, set(), {1, 2})
    assert (empty.n_rows, empty.n_cols) == (0, 2)
    assert rank(empty) == 0


def test_submatrix_out_of_range():
    m = F2Matrix.identity(3)
    with pytest.raises(ValidationError):
        submatrix(m, {4}, {1})
    with pytest.raises(ValidationError):
        submatrix(m, {1}, {0})


def test_constructor_rejects_stray_bits():
    with pytest.raises(ValidationError):
        F2Matrix(1, 2, (0b100,))


def test_entries_round_trip():
    entries = [[1, 0, 1], [0, 1, 1]]
    assert F2Matrix.from_entries(entries).to_entries() == entries
