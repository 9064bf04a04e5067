"""Bounded counterexample scans for the unresolved cases."""

from __future__ import annotations

from fractions import Fraction

from ..errors import SettledQuery
from ..gadgets import GadgetSpec, build
from ..graph import Graph, canonical_form, to_graph6
from ..patterns import pattern
from . import catalog
from .enumeration import MAX_ENUM_N, enumerate_graphs
from .verify import cached_free, cached_measure

PROBLEMS = ("OP1-FVS-K13", "OP2-OCT-identical", "OP3-OCT-bounded-scan", "OP-IVC-tightness")

OP2_OPEN = ("K1,3", "K1,3^+", "2P1+P3")
OP3_OPEN = ("K1,4", "K1,3^+", "K1,4^+")
IVC_UNTIGHT = ("VC-3", "VC-4", "VC-6", "VC-8", "VC-9")

# graphs that are (not necessarily induced) subgraphs of P4, minus 2P2
_P4_SUBGRAPHS = ("P1", "2P1", "3P1", "4P1", "P2", "P1+P2", "2P1+P2", "P3", "P1+P3", "P4")

# small graphs known to have ioct > oct, offered as witnesses for settled H
_OCT_WITNESSES = (
    GadgetSpec("fig_oct1"),
    GadgetSpec("fig_oct2"),
    GadgetSpec("Q", s=2),
    GadgetSpec("Z", s=2),
    GadgetSpec("Y", s=1),
)


def _check_n(max_n: int) -> None:
    if not 1 <= max_n <= MAX_ENUM_N:
        raise ValueError(f"max_n must be in 1..{MAX_ENUM_N}, got {max_n}")


def _scan(cls: str, h: str, max_n: int, measures: tuple[str, str], min_n: int = 1):
    """Yield (n, graph6, (a, b)) for H-free graphs in cls, and fill a certificate."""
    cert: list[dict] = []

    def gen():
        for n in range(min_n, max_n + 1):
            count = 0
            for g in enumerate_graphs(n, cls):
                g6 = to_graph6(g)
                if not cached_free(g6, h):
                    continue
                count += 1
                yield n, g6, tuple(cached_measure(g6, m) for m in measures)
            cert.append({"n": n, "class": cls, "pattern": h, "count": count})

    return gen(), cert


def _found(g6: str, n: int, h: str, names, values) -> dict:
    return {"graph6": g6, "n": n, "pattern": h, "measured": dict(zip(names, values))}


def op1_fvs_k13(max_n: int) -> dict:
    _check_n(max_n)
    it, cert = _scan("near-bipartite", "K1,3", max_n, ("fvs", "ifvs"))
    found = None
    for n, g6, (fvs, ifvs) in it:
        if ifvs > fvs:
            found = _found(g6, n, "K1,3", ("fvs", "ifvs"), (fvs, ifvs))
            break
    return {"problem": "OP1-FVS-K13", "max_n": max_n, "found": found, "exhausted": found is None, "certificate": cert}


def _same_graph(a: str, b: str) -> bool:
    return canonical_form(pattern(a)) == canonical_form(pattern(b))


def _oct_witness(h: str) -> dict | None:
    for spec in _OCT_WITNESSES:
        g = build(spec)
        g6 = to_graph6(g)
        if not cached_free(g6, h):
            continue
        oct_, ioct = cached_measure(g6, "oct"), cached_measure(g6, "ioct")
        if ioct is not None and ioct > oct_:
            return {"gadget": spec.label(), "graph6": g6, "n": g.n, "measured": {"oct": oct_, "ioct": ioct}}
    return None


def op2_oct_identical(max_n: int, h: list[str] | None = None) -> dict:
    _check_n(max_n)
    targets = list(h) if h else list(OP2_OPEN)
    entries = []
    for name in targets:
        pattern(name)  # validate early
        if any(_same_graph(name, p) for p in _P4_SUBGRAPHS):
            raise SettledQuery(f"{name}-free 3-colourable graphs are known to satisfy ioct = oct")
        open_case = any(_same_graph(name, p) for p in OP2_OPEN)
        it, cert = _scan("3-colourable", name, max_n, ("oct", "ioct"))
        found = None
        for n, g6, (oct_, ioct) in it:
            if ioct > oct_:
                found = _found(g6, n, name, ("oct", "ioct"), (oct_, ioct))
                break
        entry = {
            "pattern": name,
            "status": "open" if open_case else "settled non-identical",
            "found": found,
            "exhausted": found is None,
            "certificate": cert,
        }
        if not open_case:
            entry["witness"] = _oct_witness(name)
        entries.append(entry)
    return {"problem": "OP2-OCT-identical", "max_n": max_n, "patterns": entries}


def op3_oct_bounded_scan(max_n: int, h: list[str] | None = None) -> dict:
    """Largest ioct/oct per n; the table is evidence only."""
    _check_n(max_n)
    tables = []
    for name in h or OP3_OPEN:
        it, cert = _scan("3-colourable", name, max_n, ("oct", "ioct"))
        best: dict[int, tuple[Fraction, str]] = {}
        for n, g6, (oct_, ioct) in it:
            if not oct_:
                continue
            ratio = Fraction(ioct, oct_)
            if n not in best or ratio > best[n][0]:
                best[n] = (ratio, g6)
        rows, running = [], None
        for entry in cert:
            n = entry["n"]
            ratio, g6 = best.get(n, (None, None))
            if ratio is not None and (running is None or ratio > running):
                running = ratio
            rows.append(
                {
                    "n": n,
                    "scanned": entry["count"],
                    "max_ratio": None if ratio is None else str(ratio),
                    "max_ratio_float": None if ratio is None else float(ratio),
                    "witness": g6,
                    "running_max": None if running is None else str(running),
                }
            )
        tables.append({"pattern": name, "rows": rows, "certificate": cert})
    return {"problem": "OP3-OCT-bounded-scan", "max_n": max_n, "tables": tables}


def op_ivc_tightness(max_n: int) -> dict:
    """Largest ivc - vc and smallest slack for the statements not known to be tight."""
    _check_n(max_n)
    out = []
    for sid in IVC_UNTIGHT:
        stmt = catalog.get(sid)
        for params in stmt.param_sets():
            pats = stmt.patterns_for(params)
            count = 0
            max_gap = min_slack = None
            arg_gap = arg_slack = None
            cert = []
            for n in range(1, max_n + 1):
                scanned = 0
                for g in enumerate_graphs(n, stmt.cls):
                    g6 = to_graph6(g)
                    if not all(cached_free(g6, p) for p in pats):
                        continue
                    scanned += 1
                    vc, ivc = cached_measure(g6, "vc"), cached_measure(g6, "ivc")
                    env = {**params, "vc": vc, "ivc": ivc}
                    bound = catalog.evaluate(catalog.main_comparison(stmt.relation).comparators[0], env)
                    if max_gap is None or ivc - vc > max_gap:
                        max_gap, arg_gap = ivc - vc, g6
                    if min_slack is None or bound - ivc < min_slack:
                        min_slack, arg_slack = bound - ivc, g6
                cert.append({"n": n, "class": stmt.cls, "pattern": "+".join(pats), "count": scanned})
                count += scanned
            out.append(
                {
                    "id": sid,
                    "params": params,
                    "scanned": count,
                    "max_gap": max_gap,
                    "max_gap_witness": arg_gap,
                    "min_slack": min_slack,
                    "min_slack_witness": arg_slack,
                    "certificate": cert,
                }
            )
    return {"problem": "OP-IVC-tightness", "max_n": max_n, "statements": out}


def search_counterexample(problem: str, max_n: int, h: list[str] | None = None) -> dict:
    if problem == "OP1-FVS-K13":
        return op1_fvs_k13(max_n)
    if problem == "OP2-OCT-identical":
        return op2_oct_identical(max_n, h)
    if problem == "OP3-OCT-bounded-scan":
        return op3_oct_bounded_scan(max_n, h)
    if problem == "OP-IVC-tightness":
        return op_ivc_tightness(max_n)
    raise ValueError(f"unknown problem {problem!r}; choose from {', '.join(PROBLEMS)}")


def found_any(report: dict) -> bool:
    if report.get("found"):
        return True
    return any(p.get("found") for p in report.get("patterns", ()))
