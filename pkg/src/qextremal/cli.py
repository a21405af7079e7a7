"""Command-line interface.

Subcommands:
  analyze  marginal + freeness report for a named state or input file
  bounds   the bounds table for one n or a range
  search   seeded random-graph search, optional hill climbing
  verify   run the full verification suite

Exit codes: 0 success, 1 failed verification, 2 bad input,
3 backend disagreement.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import bounds, freeness, marginal, report, search, statevec, verify
from .errors import BackendMismatchError, QexError, ValidationError
from .graphs import Graph, named_graph, parse_edge_list
from ._kernels import kernel_name

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BACKEND_MISMATCH = 3


def thread_budget() -> int:
    """Worker-thread cap from QEX_THREADS (0 or unset = auto)."""
    raw = os.environ.get("QEX_THREADS", "0").strip()
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"QEX_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValidationError("QEX_THREADS must be >= 0")
    if value == 0:
        return os.cpu_count() or 1
    return value


@dataclass
class ResolvedState:
    descriptor: dict
    graph: Graph | None
    state: statevec.PureState | None

    @property
    def n(self) -> int:
        return self.graph.n if self.graph is not None else self.state.n


def _sniff_file(text: str) -> str:
    """Guess 'graph' or 'amplitudes' from the first body line."""
    past_header = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not past_header:
            past_header = True
            continue
        return "amplitudes" if len(line.split()) == 3 else "graph"
    return "graph"


def resolve_state(spec: str) -> ResolvedState:
    """Map --state to a graph and/or statevector plus its descriptor."""
    if os.path.exists(spec):
        with open(spec, "rb") as fh:
            data = fh.read()
        text = data.decode("utf-8")
        if _sniff_file(text) == "graph":
            g = parse_edge_list(text)
            desc = report.state_descriptor(os.path.basename(spec), "graph-file", data)
            return ResolvedState(desc, g, None)
        psi = statevec.parse_amplitude_file(text)
        desc = report.state_descriptor(os.path.basename(spec), "amplitude-file", data)
        return ResolvedState(desc, None, psi)
    desc = report.state_descriptor(spec, "named", spec)
    if spec in ("phi4", "m4"):
        return ResolvedState(desc, None, statevec.named_state(spec))
    return ResolvedState(desc, named_graph(spec), None)


def _freeness_for(mm_subsets, n: int, k: int) -> list[dict]:
    """The structural checks that apply at this (n, k)."""
    out = []
    if k + 2 <= n:
        verdict = freeness.check_complete_free(mm_subsets, n, k, k + 2)
        note = None
        if n != 2 * k or k < 2 or k == 3:
            note = "outside the guaranteed regime (n = 2k, k >= 2, k != 3); observation only"
        out.append(report.freeness_to_dict(verdict, {"l": k + 2}, note))
    if n == 2 * k and k % 2 == 0 and k >= 2:
        # n = 4m with k = 2m: the sharper anchor of size 2m+1
        verdict = freeness.check_complete_free(mm_subsets, n, k, k + 1)
        note = None if k >= 4 else "outside the guaranteed regime (m >= 2); observation only"
        out.append(report.freeness_to_dict(verdict, {"l": k + 1}, note))
    if n == 2 * k + 1:
        verdict = freeness.check_hk_free(mm_subsets, n, k)
        note = None
        if k < 3 or k == 5:
            note = "outside the guaranteed regime (k >= 3, k != 5); observation only"
        out.append(report.freeness_to_dict(verdict, {}, note))
    if n == 2 * k:
        out.append(report.freeness_to_dict(
            freeness.complement_symmetry(mm_subsets, n, k), {}, None))
    return out


def _crosscheck(g: Graph, psi: statevec.PureState, k: int, tol: float) -> dict:
    """Compare the two backends on every k-subset; raise on disagreement."""
    from ._subsets import iter_k_subsets

    checked = 0
    for subset, r in zip(iter_k_subsets(g.n, k), marginal.rank_profile(g, k)):
        sv_mm = statevec.is_maximally_mixed_sv(psi, subset, tol)
        sv_purity = statevec.subset_purity(psi, subset)
        if sv_mm != (r == k) or abs(sv_purity - 2.0 ** (-r)) > tol:
            raise BackendMismatchError(
                f"backends disagree on subset {subset}: cut rank {r}, "
                f"statevector purity {sv_purity!r}, maximally mixed (sv) {sv_mm}")
        checked += 1
    return {"k": k, "subsets_checked": checked, "tolerance": tol, "agree": True}


def cmd_analyze(args) -> int:
    resolved = resolve_state(args.state)
    n = resolved.n
    half = n // 2
    if args.all_k:
        ks = list(range(1, half + 1))
    elif args.k is not None:
        ks = [args.k]
    else:
        raise ValidationError("one of --k or --all-k is required")
    for k in ks:
        if not 1 <= k <= half:
            raise ValidationError(f"k = {k} outside 1..floor(n/2) = {half}")

    backend = args.backend
    if backend in ("rank", "both") and resolved.graph is None:
        raise ValidationError(
            f"backend {backend!r} needs a graph state; "
            f"{args.state!r} is only available as a statevector")

    marginals = []
    freeness_all = []
    crosschecks = []
    psi = None
    if backend in ("statevector", "both"):
        psi = resolved.state or statevec.graph_state_vector(resolved.graph)

    for k in ks:
        if backend == "statevector":
            rep = statevec.analyze_state_marginals(psi, k, args.tol)
            marginals.append(report.sv_marginal_to_dict(rep))
            freeness_all.extend(_freeness_for(rep.mm_subsets, n, k))
        else:
            rep = marginal.analyze_graph_marginals(resolved.graph, k)
            marginals.append(report.marginal_to_dict(rep))
            freeness_all.extend(_freeness_for(rep.mm_subsets, n, k))
            if backend == "both":
                crosschecks.append(_crosscheck(resolved.graph, psi, k, args.tol))

    doc = report.analysis_report(
        state=resolved.descriptor,
        backend=backend,
        marginals=marginals,
        freeness=freeness_all,
        bounds_context=report.bounds_row_to_dict(bounds.bounds_row(n)) if n >= 2 else None,
        crosscheck={"checks": crosschecks} if crosschecks else None,
    )

    if args.format == "json":
        payload = report.emit_json(doc)
    elif args.format == "csv":
        payload = "".join(report.marginal_csv(m) for m in marginals)
    else:
        blocks = [report.marginal_text(m) for m in marginals]
        for fv in freeness_all:
            status = "holds" if fv["holds"] else f"FAILS (witness {fv['witness']})"
            suffix = f" [{fv['note']}]" if fv["note"] else ""
            blocks.append(f"freeness {fv['property']} {fv['params']}: {status}{suffix}\n")
        payload = "".join(blocks)
    _write_output(payload, args.out)
    return EXIT_OK


def _parse_range(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.range:
        lo_s, _, hi_s = args.range.partition(":")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValidationError(f"bad range {args.range!r}, expected a:b") from None
        if lo > hi:
            raise ValidationError(f"empty range {args.range!r}")
        return list(range(lo, hi + 1))
    raise ValidationError("one of --n or --range is required")


def cmd_bounds(args) -> int:
    rows = bounds.table_of_bounds(_parse_range(args))
    if args.format == "json":
        payload = report.emit_json(
            {"schema_version": report.SCHEMA_VERSION,
             "rows": [report.bounds_row_to_dict(r) for r in rows]})
    elif args.format == "csv":
        payload = bounds.format_table_csv(rows)
    else:
        payload = bounds.format_table_text(rows)
    _write_output(payload, args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    threads = thread_budget()
    result = search.random_search(args.n, args.k, args.trials, args.seed, threads=threads)
    doc = report.search_result_to_dict(result, args.n, args.k)
    if args.hill_climb:
        refined = search.hill_climb(result.best_graph, args.k, args.max_steps, args.seed)
        doc["hill_climb"] = {
            "accepted_steps": refined.trials,
            "best_m_k": refined.best_m_k,
            "best_graph_edges": [list(e) for e in refined.best_graph.edges],
        }
    if args.format == "json":
        payload = report.emit_json(doc)
    else:
        lines = [
            f"n={args.n} k={args.k} trials={args.trials} seed={args.seed}",
            f"expected mean  {result.expected_mean:.6f}",
            f"empirical mean {result.empirical_mean:.6f} (sample std {result.empirical_std:.6f})",
            f"best m_k       {result.best_m_k}",
        ]
        if args.hill_climb:
            lines.append(f"after hill climb: m_k {doc['hill_climb']['best_m_k']} "
                         f"({doc['hill_climb']['accepted_steps']} accepted steps)")
        payload = "\n".join(lines) + "\n"
    _write_output(payload, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_all()
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name}: expected {res.expected}; got {res.actual}")
    all_passed = all(r.passed for r in results)
    print(f"{'all checks passed' if all_passed else 'SOME CHECKS FAILED'} "
          f"({sum(r.passed for r in results)}/{len(results)}) [kernel: {kernel_name()}]")
    if args.out:
        doc = {
            "schema_version": report.SCHEMA_VERSION,
            "all_passed": all_passed,
            "checks": [
                {"name": r.name, "passed": r.passed,
                 "expected": r.expected, "actual": r.actual}
                for r in results
            ],
        }
        _write_output(report.emit_json(doc), args.out)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def _write_output(payload: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qex",
        description="Maximally mixed reductions of n-qubit pure states: "
                    "exact counts, bounds, search, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="marginal + freeness report for one state")
    p.add_argument("--state", required=True,
                   help="named state (tk4, circulant:12:1,3,6, random:8:7, phi4, m4) "
                        "or a path to an edge-list / amplitude file")
    p.add_argument("--k", type=int, default=None, help="reduction size to analyze")
    p.add_argument("--all-k", action="store_true", help="analyze every k up to floor(n/2)")
    p.add_argument("--backend", choices=("rank", "statevector", "both"), default="rank")
    p.add_argument("--tol", type=float, default=1e-9,
                   help="statevector tolerance for maximal mixedness")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="bounds table")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--range", default=None, help="inclusive range a:b")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="random graph-state search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--hill-climb", action="store_true",
                   help="refine the best sampled graph by greedy edge toggles")
    p.add_argument("--max-steps", type=int, default=100,
                   help="hill-climb step budget")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--out", default=None, help="also write a JSON summary")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BackendMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BACKEND_MISMATCH
    except (QexError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
