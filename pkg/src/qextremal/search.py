"""Randomized search for graph states with many maximally mixed reductions.

Counting runs on the rank backend only; the statevector backend never
enters these loops.  Per-trial generators are split from the master seed
in counter mode (SHA-256 of seed and trial index), so runs are
reproducible and trials are independent, which also makes them safe to
evaluate in worker threads.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import sqrt

from . import _kernels
from ._subsets import iter_k_subsets
from .bounds import random_lower_bound
from .errors import ValidationError
from .graphs import Graph, make_random_graph


@dataclass(frozen=True)
class SearchResult:
    best_graph: Graph
    best_m_k: int
    trials: int
    empirical_mean: float
    empirical_std: float
    expected_mean: float
    master_seed: int


def trial_seed(master_seed: int, trial: int) -> int:
    """Counter-mode split: an independent 63-bit stream seed per trial."""
    digest = hashlib.sha256(f"qex-search:{master_seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _count_for_trial(n: int, k: int, master_seed: int, trial: int) -> int:
    g = make_random_graph(n, trial_seed(master_seed, trial))
    return _kernels.count_full_rank_cuts(g.adjacency.rows, n, k)


def random_search(n: int, k: int, trials: int, seed: int, threads: int = 1) -> SearchResult:
    """Sample `trials` graphs from G(n, 1/2) and track the best m_k.

    Ties go to the lowest trial index.  The result is a pure function of
    (n, k, trials, seed); `threads` only affects wall time.
    """
    if trials < 1:
        raise ValidationError("need at least one trial")
    if not 1 <= k <= n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {n // 2}")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(
                lambda t: _count_for_trial(n, k, seed, t), range(trials)))
    else:
        values = [_count_for_trial(n, k, seed, t) for t in range(trials)]

    best_trial = max(range(trials), key=lambda t: (values[t], -t))
    total = sum(values)
    total_sq = sum(v * v for v in values)
    mean = total / trials
    var = (total_sq - total * total / trials) / (trials - 1) if trials > 1 else 0.0
    expected, _ = random_lower_bound(n, k)
    return SearchResult(
        best_graph=make_random_graph(n, trial_seed(seed, best_trial)),
        best_m_k=values[best_trial],
        trials=trials,
        empirical_mean=mean,
        empirical_std=sqrt(max(var, 0.0)),
        expected_mean=expected,
        master_seed=seed,
    )


def hill_climb(start: Graph, k: int, max_steps: int, seed: int) -> SearchResult:
    """Greedy single-edge toggles: accept the move with the largest strict
    m_k gain, ties broken by colex-least edge, stop at a local optimum or
    after max_steps accepted moves.  m_k never decreases.

    The seed is recorded for report symmetry; the climb itself is
    deterministic.
    """
    if max_steps < 0:
        raise ValidationError("max_steps must be >= 0")
    n = start.n
    if not 1 <= k <= n // 2:
        raise ValidationError(f"need 1 <= k <= floor(n/2) = {n // 2}")
    current = start
    current_mk = _kernels.count_full_rank_cuts(current.adjacency.rows, n, k)
    steps = 0
    while steps < max_steps:
        best_gain = 0
        best_edge = None
        for u, v in iter_k_subsets(n, 2):
            cand = current.with_edge_toggled(u, v)
            gain = _kernels.count_full_rank_cuts(cand.adjacency.rows, n, k) - current_mk
            if gain > best_gain:
                best_gain = gain
                best_edge = (u, v)
        if best_edge is None:
            break
        current = current.with_edge_toggled(*best_edge)
        current_mk += best_gain
        steps += 1
    expected, _ = random_lower_bound(n, k)
    return SearchResult(
        best_graph=current,
        best_m_k=current_mk,
        trials=steps,
        empirical_mean=float(current_mk),
        empirical_std=0.0,
        expected_mean=expected,
        master_seed=seed,
    )
