"""Report assembly and serialization: JSON (schema_version "1"), CSV, text.

Reports are built from JSON-native values only (dicts, lists, strings,
numbers, null), so emit/parse is an exact round trip and two identical
runs serialize to identical bytes.  Exact rationals appear as "p/q"
strings next to a float twin field.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .bounds import BoundsRow
from .freeness import FreenessVerdict
from .marginal import MarginalReport
from .search import SearchResult
from .statevec import SvMarginalReport

SCHEMA_VERSION = "1"


def rational_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def parse_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or "1"))


def content_hash(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def state_descriptor(name: str | None, source: str, content: bytes | str) -> dict:
    """Identify the analyzed state: its name or file, plus a content hash."""
    return {"name": name, "source": source, "sha256": content_hash(content)}


def marginal_to_dict(rep: MarginalReport) -> dict:
    return {
        "backend": "rank",
        "n": rep.n,
        "k": rep.k,
        "m_k": rep.m_k,
        "total": rep.total,
        "mm_subsets": [list(s) for s in rep.mm_subsets],
        "non_mm": [
            {
                "subset": list(subset),
                "cut_rank": r,
                "purity": rational_str(p),
                "purity_float": float(p),
            }
            for subset, r, p in rep.non_mm
        ],
        "uniformity_order": rep.uniformity_order,
        "pi_me": rational_str(rep.pi_me),
        "pi_me_float": float(rep.pi_me),
        "s_linear": rational_str(rep.s_linear),
        "s_linear_float": float(rep.s_linear),
    }


def sv_marginal_to_dict(rep: SvMarginalReport) -> dict:
    return {
        "backend": "statevector",
        "n": rep.n,
        "k": rep.k,
        "m_k": rep.m_k,
        "total": rep.total,
        "mm_subsets": [list(s) for s in rep.mm_subsets],
        "non_mm": [
            {"subset": list(subset), "cut_rank": None, "purity": None,
             "purity_float": p}
            for subset, p in rep.non_mm
        ],
        "uniformity_order": rep.uniformity_order,
        "pi_me": None,
        "pi_me_float": rep.pi_me,
        "s_linear": None,
        "s_linear_float": rep.s_linear,
    }


def freeness_to_dict(verdict: FreenessVerdict, params: dict | None = None,
                     note: str | None = None) -> dict:
    return {
        "property": verdict.property_name,
        "holds": verdict.holds,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "params": params or {},
        "note": note,
    }


def bounds_row_to_dict(row: BoundsRow) -> dict:
    return {
        "n": row.n,
        "computed_upper": [{"value": v, "label": lab} for v, lab in row.computed_upper],
        "computed_lower": [{"value": v, "label": lab} for v, lab in row.computed_lower],
        "literature_lower": row.literature_lower,
        "literature_upper": row.literature_upper,
        "notes": list(row.notes),
    }


def search_result_to_dict(res: SearchResult, n: int, k: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "k": k,
        "trials": res.trials,
        "master_seed": res.master_seed,
        "best_m_k": res.best_m_k,
        "best_graph_edges": [list(e) for e in res.best_graph.edges],
        "empirical_mean": res.empirical_mean,
        "empirical_std": res.empirical_std,
        "expected_mean": res.expected_mean,
    }


def analysis_report(state: dict, backend: str, marginals: list[dict],
                    freeness: list[dict], bounds_context: dict | None,
                    crosscheck: dict | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "state": state,
        "backend": backend,
        "marginals": marginals,
        "freeness": freeness,
        "bounds_context": bounds_context,
        "crosscheck": crosscheck,
    }


def emit_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def parse_json(text: str):
    return json.loads(text)


def marginal_csv(marginal: dict) -> str:
    """Per-subset CSV for one marginal analysis."""
    lines = ["subset,cut_rank,purity,maximally_mixed"]
    for s in marginal["mm_subsets"]:
        rank = marginal["k"] if marginal["backend"] == "rank" else ""
        pur = f"1/{1 << marginal['k']}" if marginal["backend"] == "rank" else ""
        lines.append(f"\"{' '.join(map(str, s))}\",{rank},{pur},1")
    for entry in marginal["non_mm"]:
        rank = entry["cut_rank"] if entry["cut_rank"] is not None else ""
        pur = entry["purity"] if entry["purity"] is not None else repr(entry["purity_float"])
        lines.append(f"\"{' '.join(map(str, entry['subset']))}\",{rank},{pur},0")
    return "\n".join(lines) + "\n"


def marginal_text(marginal: dict) -> str:
    head = (
        f"n={marginal['n']} k={marginal['k']} backend={marginal['backend']}: "
        f"m_k = {marginal['m_k']} of {marginal['total']}"
    )
    lines = [head,
             f"  uniformity order: {marginal['uniformity_order']}"]
    if marginal["pi_me"] is not None:
        lines.append(f"  pi_ME = {marginal['pi_me']} ({marginal['pi_me_float']:.10g})")
        lines.append(f"  S_L   = {marginal['s_linear']} ({marginal['s_linear_float']:.10g})")
    else:
        lines.append(f"  pi_ME = {marginal['pi_me_float']:.12g}")
        lines.append(f"  S_L   = {marginal['s_linear_float']:.12g}")
    if marginal["non_mm"]:
        lines.append("  not maximally mixed:")
        for entry in marginal["non_mm"]:
            sub = ",".join(map(str, entry["subset"]))
            if entry["purity"] is not None:
                lines.append(f"    {{{sub}}} cut_rank={entry['cut_rank']} purity={entry['purity']}")
            else:
                lines.append(f"    {{{sub}}} purity={entry['purity_float']:.12g}")
    return "\n".join(lines) + "\n"
