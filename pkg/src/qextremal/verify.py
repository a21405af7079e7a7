"""End-to-end verification suite: every published value this package can
reproduce, checked against fresh computation.

Each check returns a CheckResult; the CLI prints one line per check and
fails if any check fails.  All randomness is seeded here, so two runs
produce identical results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from . import bounds, freeness, marginal, report, search, statevec
from ._kernels import iter_subset_masks
from ._subsets import vertices_of
from .graphs import make_circulant, make_random_graph, make_turan_pair_graph

TK_EXPECTED = {2: 4, 3: 20, 4: 56, 5: 192, 6: 512}
LIMIT_CONSTANT_REF = 0.288788095
PARITY_PAIRS = 100_000
MC_TRIALS = 2000
MC_SEED = 7
AGREEMENT_GRAPHS_PER_SIZE = 50
COMPLETE_FREE_GRAPHS = 500
HK_FREE_GRAPHS = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str


def check_tk_counts() -> CheckResult:
    counts = tuple(
        marginal.count_mm_reductions(make_turan_pair_graph(k), k)[0]
        for k in range(2, 7)
    )
    closed_ok = all(
        marginal.count_mm_reductions(make_turan_pair_graph(k), k)[0]
        == bounds.tk_closed_form(k)
        for k in range(2, 9)
    )
    expected = tuple(TK_EXPECTED[k] for k in range(2, 7))
    return CheckResult(
        "paired_clique_counts",
        counts == expected and closed_ok,
        f"m_k = {expected}, closed form matches for k=2..8",
        f"m_k = {counts}, closed form matches: {closed_ok}",
    )


def check_circulant() -> CheckResult:
    g = make_circulant(12, (1, 3, 6))
    m6, _ = marginal.count_mm_reductions(g, 6)
    uni = marginal.uniformity_order(g)
    return CheckResult(
        "circulant_12",
        m6 == 540 and uni == 5,
        "m_6 = 540, uniformity order 5",
        f"m_6 = {m6}, uniformity order {uni}",
    )


def check_purity_profile() -> CheckResult:
    g = make_turan_pair_graph(4)
    rep = marginal.analyze_graph_marginals(g, 4)
    profile: dict[Fraction, int] = {Fraction(1, 16): rep.m_k}
    for _, _, p in rep.non_mm:
        profile[p] = profile.get(p, 0) + 1
    want = {Fraction(1, 16): 56, Fraction(1, 4): 6, Fraction(1, 8): 8}
    ok = (
        rep.pi_me == Fraction(3, 35)
        and profile == want
        and rep.s_linear == marginal.linear_entropy(Fraction(3, 35), 4)
        and rep.s_linear == Fraction(512, 525)
    )
    return CheckResult(
        "t4_purity_profile",
        ok,
        "pi_ME = 3/35, purities {56 x 1/16, 6 x 1/4, 8 x 1/8}, S_L = 512/525",
        f"pi_ME = {rep.pi_me}, profile {{{', '.join(f'{v} x {k}' for k, v in sorted(profile.items(), reverse=True))}}}, S_L = {rep.s_linear}",
    )


def check_bounds_table() -> CheckResult:
    got = {
        "even": tuple(bounds.upper_bound_even(k) for k in (4, 5, 6)),
        "odd": tuple(bounds.upper_bound_odd(k) for k in (3, 4)),
        "4m": tuple(bounds.upper_bound_4m(m) for m in (2, 3)),
    }
    want = {"even": (65, 240, 892), "odd": (32, 120), "4m": (56, 792)}
    rows = {row.n: row for row in bounds.table_of_bounds(range(4, 13))}
    computed_upper_ok = all(
        rows[n].best_computed_upper == v
        for n, v in {7: 32, 8: 56, 9: 120, 10: 240, 12: 792}.items()
    )
    literature_ok = all(
        (rows[n].literature_lower, rows[n].literature_upper) == pair
        for n, pair in bounds.LITERATURE.items()
    )
    bracket_ok = all(
        row.literature_lower is None
        or row.literature_lower <= min(row.best_computed_upper,
                                       row.literature_upper or row.best_computed_upper)
        for row in rows.values()
    )
    ok = got == want and computed_upper_ok and literature_ok and bracket_ok
    return CheckResult(
        "bounds_reproduction",
        ok,
        f"{want}, table computed uppers {{7: 32, 8: 56, 9: 120, 10: 240, 12: 792}}, literature columns intact",
        f"{got}, computed uppers ok: {computed_upper_ok}, literature ok: {literature_ok}, brackets ok: {bracket_ok}",
    )


def check_limit_constant() -> CheckResult:
    value = bounds.limit_constant(60)
    return CheckResult(
        "density_limit_constant",
        abs(value - LIMIT_CONSTANT_REF) <= 1e-9,
        f"{LIMIT_CONSTANT_REF} within 1e-9",
        f"{value!r}",
    )


def _agreement_failures(g, tol: float = 1e-9):
    """Subsets where the two backends disagree, and how many were checked."""
    psi = statevec.graph_state_vector(g)
    failures = []
    checked = 0
    for k in range(1, g.n // 2 + 1):
        profile = marginal.rank_profile(g, k)
        for mask, r in zip(iter_subset_masks(g.n, k), profile):
            subset = vertices_of(mask)
            checked += 1
            sv_mm = statevec.is_maximally_mixed_sv(psi, subset, tol)
            sv_purity = statevec.subset_purity(psi, subset)
            if sv_mm != (r == k) or abs(sv_purity - 2.0 ** (-r)) > tol:
                failures.append((subset, r, sv_purity))
    return failures, checked


def agreement_states():
    for k in (2, 3, 4):
        yield f"tk{k}", make_turan_pair_graph(k)
    yield "circulant:12:1,3,6", make_circulant(12, (1, 3, 6))
    for n in (6, 8, 10):
        for i in range(AGREEMENT_GRAPHS_PER_SIZE):
            yield f"random:{n}:{1000 + i}", make_random_graph(n, 1000 + i)


def check_backend_agreement() -> CheckResult:
    total_checked = 0
    bad: list[str] = []
    for name, g in agreement_states():
        failures, checked = _agreement_failures(g)
        total_checked += checked
        if failures:
            bad.append(f"{name}: {failures[:3]}")
    return CheckResult(
        "backend_agreement",
        not bad,
        "rank and statevector verdicts identical, purity = 2^-rank within 1e-9",
        f"{total_checked} subsets checked, disagreements: {bad or 'none'}",
    )


def check_monte_carlo() -> CheckResult:
    res = search.random_search(8, 4, MC_TRIALS, MC_SEED)
    stderr = res.empirical_std / sqrt(res.trials)
    dev = abs(res.empirical_mean - res.expected_mean)
    return CheckResult(
        "random_graph_expectation",
        dev <= 3 * stderr,
        f"mean within 3 standard errors of {res.expected_mean:.6g}",
        f"mean {res.empirical_mean:.6g}, std err {stderr:.4g}, deviation {dev:.4g}",
    )


def check_freeness() -> CheckResult:
    problems: list[str] = []
    observations: list[str] = []

    for k in (2, 3, 4, 5, 6):
        g = make_turan_pair_graph(k)
        _, mm = marginal.count_mm_reductions(g, k)
        verdict = freeness.check_complete_free(mm, 2 * k, k, k + 2)
        if k == 3:
            # outside the guaranteed regime; the state is absolutely
            # maximally entangled, so the complete pattern must appear
            observations.append(f"tk3 complete_free holds={verdict.holds}")
        elif not verdict.holds:
            problems.append(f"tk{k} complete witness {verdict.witness}")
        sym = freeness.complement_symmetry(mm, 2 * k, k)
        if not sym.holds:
            problems.append(f"tk{k} complement witness {sym.witness}")

    for i in range(COMPLETE_FREE_GRAPHS):
        g = make_random_graph(8, 2000 + i)
        _, mm = marginal.count_mm_reductions(g, 4)
        verdict = freeness.check_complete_free(mm, 8, 4, 5)
        if not verdict.holds:
            problems.append(f"random:8:{2000 + i} complete witness {verdict.witness}")
        sym = freeness.complement_symmetry(mm, 8, 4)
        if not sym.holds:
            problems.append(f"random:8:{2000 + i} complement witness {sym.witness}")

    for i in range(HK_FREE_GRAPHS):
        g = make_random_graph(9, 3000 + i)
        _, mm = marginal.count_mm_reductions(g, 4)
        verdict = freeness.check_hk_free(mm, 9, 4)
        if not verdict.holds:
            problems.append(f"random:9:{3000 + i} hk witness {verdict.witness}")

    return CheckResult(
        "freeness_invariants",
        not problems,
        f"no forbidden pattern in {COMPLETE_FREE_GRAPHS}+{HK_FREE_GRAPHS} random "
        "graph states and the paired-clique family",
        f"violations: {problems or 'none'}; observations: {observations}",
    )


def check_statevector_examples() -> CheckResult:
    problems = []

    phi = statevec.named_state("phi4")
    m2_phi, _ = statevec.count_mm_reductions_sv(phi, 2)
    if m2_phi != 4:
        problems.append(f"phi4 m_2 = {m2_phi}")

    m4 = statevec.named_state("m4")
    purities = [
        statevec.subset_purity(m4, vertices_of(mask))
        for mask in iter_subset_masks(4, 2)
    ]
    if any(abs(p - 1.0 / 3.0) > 1e-12 for p in purities):
        problems.append(f"m4 purities {purities}")
    m2_m4, _ = statevec.count_mm_reductions_sv(m4, 2)
    if m2_m4 != 0:
        problems.append(f"m4 m_2 = {m2_m4}")

    t4 = statevec.named_state("tk4")
    from itertools import combinations, product
    worst = 0.0
    for w in (1, 2, 3):
        for support in combinations(range(1, 9), w):
            for letters in product("xyz", repeat=w):
                alpha = ["0"] * 8
                for q, c in zip(support, letters):
                    alpha[q - 1] = c
                worst = max(worst, abs(statevec.bloch_coefficient(t4, alpha)))
    if worst > 1e-12:
        problems.append(f"t4 weight<=3 coefficient {worst!r}")

    return CheckResult(
        "statevector_examples",
        not problems,
        "m_2(phi4) = 4; all 2-body purities of m4 = 1/3 so m_2 = 0; "
        "t4 weight 1..3 coefficients vanish",
        f"violations: {problems or 'none'}",
    )


def check_parity_rule() -> CheckResult:
    rng = random.Random(97531)
    violations = 0
    nonzero = 0
    for _ in range(PARITY_PAIRS):
        n = rng.randint(1, 8)
        letters_m = tuple(rng.choice("0xyz") for _ in range(n))
        letters_n = tuple(rng.choice("0xyz") for _ in range(n))
        m = statevec.PauliTerm(n, letters_m, rng.choice((1.0, -1.0)) * rng.uniform(0.5, 1.5))
        other = statevec.PauliTerm(n, letters_n, rng.choice((1.0, -1.0)) * rng.uniform(0.5, 1.5))
        ac = statevec.anticommutator(m, other)
        if ac is None:
            continue
        nonzero += 1
        if (ac.weight - m.weight - other.weight) % 2 != 0:
            violations += 1
    return CheckResult(
        "pauli_parity_rule",
        violations == 0,
        f"0 violations over {PARITY_PAIRS} sampled pairs",
        f"{violations} violations ({nonzero} nonvanishing anticommutators)",
    )


def check_determinism() -> CheckResult:
    a = search.random_search(8, 4, 50, 12345)
    b = search.random_search(8, 4, 50, 12345)
    json_a = report.emit_json(report.search_result_to_dict(a, 8, 4))
    json_b = report.emit_json(report.search_result_to_dict(b, 8, 4))
    rep_a = marginal.analyze_graph_marginals(make_turan_pair_graph(4), 4)
    rep_b = marginal.analyze_graph_marginals(make_turan_pair_graph(4), 4)
    ok = json_a == json_b and rep_a == rep_b
    return CheckResult(
        "determinism",
        ok,
        "identical seeds give byte-identical JSON and identical reports",
        "identical" if ok else "mismatch",
    )


ALL_CHECKS = (
    check_tk_counts,
    check_circulant,
    check_purity_profile,
    check_bounds_table,
    check_limit_constant,
    check_backend_agreement,
    check_monte_carlo,
    check_freeness,
    check_statevector_examples,
    check_parity_rule,
    check_determinism,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
