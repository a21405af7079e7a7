#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the pure-Python fallback.

The workloads mirror the package's hot paths: full m_k enumeration over
all k-subsets, and the per-trial counting loop of the random search.

Usage:  python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from qextremal._kernels import pure
from qextremal.graphs import make_random_graph, make_turan_pair_graph
from qextremal.search import trial_seed

try:
    from qextremal._kernels import _fastrank
except ImportError:
    _fastrank = None


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def bench_enumeration(kernel, adj, n, k, label):
    elapsed, count = best_of(lambda: kernel.count_full_rank_cuts(adj, n, k))
    return elapsed, count


def bench_search_trials(kernel, n, k, trials):
    def run():
        total = 0
        for t in range(trials):
            g = make_random_graph(n, trial_seed(0, t))
            total += kernel.count_full_rank_cuts(g.adjacency.rows, n, k)
        return total
    return best_of(run)


def main():
    workloads = []
    for k in (6, 7, 8):
        g = make_turan_pair_graph(k)
        workloads.append((f"m_{k} of paired-clique n={2 * k}",
                          lambda kern, g=g, k=k: bench_enumeration(
                              kern, g.adjacency.rows, g.n, k, "")))
    workloads.append(("500 search trials n=8 k=4",
                      lambda kern: bench_search_trials(kern, 8, 4, 500)))
    workloads.append(("profile n=14 k=7 (random graph)", None))
    g14 = make_random_graph(14, 1)
    workloads[-1] = ("m_7 of random n=14",
                     lambda kern: bench_enumeration(kern, g14.adjacency.rows, 14, 7, ""))

    print(f"{'workload':<34} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    print("-" * 66)
    for label, fn in workloads:
        t_pure, v_pure = fn(pure)
        if _fastrank is not None:
            t_fast, v_fast = fn(_fastrank)
            assert v_pure == v_fast, f"kernel disagreement on {label}"
            print(f"{label:<34} {t_pure * 1e3:>8.1f}ms {t_fast * 1e3:>8.1f}ms "
                  f"{t_pure / t_fast:>7.1f}x")
        else:
            print(f"{label:<34} {t_pure * 1e3:>8.1f}ms {'n/a':>10} {'':>8}")
    if _fastrank is None:
        print("\ncompiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
