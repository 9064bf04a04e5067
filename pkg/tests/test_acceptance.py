"""Acceptance criteria 1-11, each at its stated tolerance.

Every test prints one ``CRITERION <k> PASS|FAIL`` line; the lines are also
repeated in the terminal summary.  Set ``INDTRANS_ACCEPT_N8=1`` to extend the
exhaustive identity checks of criterion 7 to n = 8.
"""

import os
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from indtrans.gadgets import GadgetSpec, build
from indtrans.graph import Graph, from_graph6, to_graph6
from indtrans.harness import catalog
from indtrans.harness.enumeration import enumerate_graphs
from indtrans.harness.search import search_counterexample
from indtrans.harness.verify import certify_records, verify_statement
from indtrans.patterns import pattern
from indtrans.recognition import contains_induced, enumerate_three_colourings, is_three_colourable
from indtrans.solvers import MEASURES, SOLVERS, is_fvs, is_oct, is_vertex_cover, measure

from oracles import brute_min, edge_list, random_edges

MAX_N = 7


def _record(k: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {k} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def _free(g, *names):
    return all(contains_induced(g, pattern(h)) is None for h in names)


# ---------------------------------------------------------------- 1


def test_criterion_1_d_gadgets():
    t0 = time.perf_counter()
    bad = []
    for s in (2, 3):
        for r in (1, 2):
            g = build(GadgetSpec("D", s=s, r=r))
            vc, ivc = measure(g, "vc"), measure(g, "ivc")
            if (vc, ivc) != (r + 1, r + s):
                bad.append(f"D(s={s},r={r}): vc={vc} ivc={ivc}")
    took = time.perf_counter() - t0
    _record(1, not bad and took < 60, f"vc=r+1, ivc=r+s on 4 gadgets in {took:.2f}s {bad}")


# ---------------------------------------------------------------- 2


def test_criterion_2_s_gadgets():
    bad = []
    for s in (2, 3):
        g = build(GadgetSpec("S", s=s, r=2))
        fvs, oct_ = measure(g, "fvs"), measure(g, "oct")
        ifvs, ioct = measure(g, "ifvs"), measure(g, "ioct")
        if not (fvs == oct_ == 2 and ifvs == ioct and ifvs >= s + 1):
            bad.append(f"S(s={s}): fvs={fvs} oct={oct_} ifvs={ifvs} ioct={ioct}")
    _record(2, not bad, f"fvs=oct=2 and ifvs=ioct>=s+1 for s in 2,3 {bad}")


# ---------------------------------------------------------------- 3


def test_criterion_3_t_gadgets():
    t0 = time.perf_counter()
    bad = []
    for s in (3, 4, 5):
        g = build(GadgetSpec("T", s=s))
        gp = build(GadgetSpec("T_prime", s=s))
        fvs, ifvs = measure(g, "fvs"), measure(g, "ifvs")
        if fvs != 3 or ifvs is None or ifvs < s - 1:
            bad.append(f"T(s={s}): fvs={fvs} ifvs={ifvs}")
        if not _free(g, "P1+P3", "2P1+P2", "2P2"):
            bad.append(f"T(s={s}) contains a forbidden pattern")
        if not _free(gp, "P4"):
            bad.append(f"T'(s={s}) contains P4")
    took = time.perf_counter() - t0
    _record(3, not bad and took < 60, f"T_s and T_s' claims for s in 3..5 in {took:.2f}s {bad}")


# ---------------------------------------------------------------- 4


def test_criterion_4_q_and_z_gadgets():
    bad = []
    for s in (2, 3, 4):
        q = build(GadgetSpec("Q", s=s))
        if (measure(q, "oct"), measure(q, "ioct")) != (2, s):
            bad.append(f"Q(s={s}): oct={measure(q, 'oct')} ioct={measure(q, 'ioct')}")
        if not _free(q, "P1+P4", "2P2"):
            bad.append(f"Q(s={s}) contains a forbidden pattern")
        z = build(GadgetSpec("Z", s=s))
        zo, zi = measure(z, "oct"), measure(z, "ioct")
        if zo != 2 or zi is None or zi < s:
            bad.append(f"Z(s={s}): oct={zo} ioct={zi}")
    _record(4, not bad, f"oct(Q_s)=2, ioct(Q_s)=s, Q_s pattern-free, oct(Z_s)=2, ioct(Z_s)>=s {bad}")


# ---------------------------------------------------------------- 5


def test_criterion_5_y_gadgets():
    bad = []
    timings = {}
    for s in (1, 2):
        t0 = time.perf_counter()
        g = build(GadgetSpec("Y", s=s))
        if not _free(g, "K1,5"):
            bad.append(f"Y(s={s}) contains K1,5")
        o, io = measure(g, "oct"), measure(g, "ioct")
        if (o, io) != (2, 4 * s):
            bad.append(f"Y(s={s}): oct={o} ioct={io}")
        cols = len(enumerate_three_colourings(g))
        if cols != 1:
            bad.append(f"Y(s={s}): {cols} colourings")
        timings[s] = time.perf_counter() - t0
    ok = not bad and timings[2] < 600
    _record(5, ok, f"Y_s claims for s=1,2; Y_2 took {timings[2]:.2f}s {bad}")


# ---------------------------------------------------------------- 6


def test_criterion_6_figure_graphs():
    bad = []
    g = build(GadgetSpec("fig_fvs1"))
    if not (_free(g, "4P1") and measure(g, "fvs") == 2 and measure(g, "ifvs") == 3):
        bad.append("fig_fvs1")
    g = build(GadgetSpec("fig_oct1"))
    if not (_free(g, "K1,4", "K1,3+P1", "5P1") and measure(g, "oct") == 2 and measure(g, "ioct") == 3):
        bad.append("fig_oct1")
    g = build(GadgetSpec("fig_oct2"))
    if not (_free(g, "3P1+P2") and measure(g, "oct") == 2 and measure(g, "ioct") == 3):
        bad.append("fig_oct2")
    _record(6, not bad, f"three figure graphs, exact values and pattern claims {bad}")


# ---------------------------------------------------------------- 7


def test_criterion_7_identities_exhaustive():
    max_n = 8 if os.environ.get("INDTRANS_ACCEPT_N8") else MAX_N
    t0 = time.perf_counter()
    lines = []
    fails = 0
    for sid in ("VC-1", "FVS-1", "OCT-1"):
        for block in verify_statement(sid, max_n, with_witnesses=False):
            fails += block["fail"]
            lines.append(f"{sid}{block['params']}: {block['applicable']} graphs")
    took = time.perf_counter() - t0
    limit = 3600
    _record(7, fails == 0 and took < limit, f"n<={max_n}, {fails} failures in {took:.1f}s; " + "; ".join(lines))


# ---------------------------------------------------------------- 8

BOUND_IDS = [f"VC-{i}" for i in range(2, 10)] + ["FVS-2", "FVS-3", "FVS-4"] + [f"OCT-{i}" for i in range(2, 7)]

TIGHT_WITNESSES = {
    "VC-2": lambda p: "double_star(p=2, q=2)",
    "VC-5": lambda p: f"double_star(p={p['s'] - 1}, q={p['s'] - 1})",
    "VC-7": lambda p: f"double_star(p={p['r'] - 2}, q={p['r'] - 2})",
}


def test_criterion_8_bounds_exhaustive():
    fails = 0
    missing = []
    checked = 0
    for sid in BOUND_IDS:
        for block in verify_statement(sid, MAX_N):
            fails += block["fail"]
            checked += block["applicable"]
            if sid in TIGHT_WITNESSES:
                want = "gadget:" + TIGHT_WITNESSES[sid](block["params"])
                if want not in block["tight_sources"]:
                    missing.append(f"{sid}{block['params']}")
    ok = fails == 0 and not missing
    _record(8, ok, f"{len(BOUND_IDS)} statements, {checked} applicable checks, {fails} failures, "
                   f"tight witnesses missing for {missing}")


# ---------------------------------------------------------------- 9


def _formula_checks():
    # (op id, params, class of the bound, independent recomputation of the bound)
    out = []
    for r in (1, 2, 3):
        for s in (1, 2):
            out.append(("star-plus-indep", {"r": r, "s": s}, "vc", lambda g, p: p["r"] * measure(g, "vc") + p["r"] * p["s"]))
    for r in (2, 3, 4):
        out.append(("subdivided-star", {"r": r}, "vc", lambda g, p: (p["r"] - 1) * measure(g, "vc") ** 2))
    out.append(("ifvs-replacement", {"r": 3}, "fvs", lambda g, p: 6 * measure(g, "fvs")))
    out.append(("ioct-replacement", {}, "oct", lambda g, p: 3 * measure(g, "oct")))
    for s in (1, 2):
        out.append(("ioct-lift", {"r": 3, "s": s}, "oct", lambda g, p: 3 * measure(g, "oct") + 9 * p["s"] + 3))
    out.append(("ioct-cograph", {}, "oct", None))
    return out


_VALID = {"vc": is_vertex_cover, "fvs": is_fvs, "oct": is_oct}


def test_criterion_9_constructive_certification():
    problems = []
    summary = []
    for op_id, params, kind, bound in _formula_checks():
        recs = certify_records(op_id, MAX_N, params)
        applicable = [r for r in recs if r.verdict != "inapplicable"]
        for rec in applicable:
            g = from_graph6(rec.graph6)
            if rec.verdict != "pass":
                problems.append(f"{op_id}{params} {rec.graph6}: {rec.detail}")
                continue
            chosen = rec.measured["set"]
            if not (g.is_independent(chosen) and _VALID[kind](g, chosen)):
                problems.append(f"{op_id}{params} {rec.graph6}: invalid output")
            size = rec.measured["size"]
            if bound is None:
                if size != measure(g, "oct"):
                    problems.append(f"{op_id} {rec.graph6}: size {size} != oct")
            elif size > bound(g, params):
                problems.append(f"{op_id}{params} {rec.graph6}: {size} > {bound(g, params)}")
        summary.append(f"{op_id}{params or ''}={len(applicable)}")
    _record(9, not problems, f"n<={MAX_N}; graphs per op: {', '.join(summary)}; problems: {problems[:5]}")


# ---------------------------------------------------------------- 10


def _agree(g: Graph) -> list[str]:
    edges = edge_list(g)
    bad = []
    for m in MEASURES:
        want = brute_min(g.n, edges, m)
        got = SOLVERS[m](g)
        if (want is None) != (got is None) or (got is not None and tuple(got.vertices()) != want):
            bad.append(f"{m} on {to_graph6(g)}")
    return bad


def test_criterion_10_oracle_equivalence():
    t0 = time.perf_counter()
    bad = []
    seven = list(enumerate_graphs(7))
    for g in seven:
        bad += _agree(g)
    rng = random.Random(20240607)
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, random_edges(rng, n, rng.uniform(0.1, 0.6)))
        bad += _agree(g)
    took = time.perf_counter() - t0
    ok = not bad and len(seven) == 1044 and took < 600
    _record(10, ok, f"{len(seven)} graphs on 7 vertices + 1000 random (n<=10), six measures, "
                    f"{len(bad)} disagreements, {took:.1f}s")


# ---------------------------------------------------------------- 11


def _certificate_ok(cert, cls, pat):
    return [c["n"] for c in cert] == list(range(1, MAX_N + 1)) and all(
        c["class"] == cls and c["pattern"] == pat and c["count"] >= 0 for c in cert
    )


def _reproduces(found, low, high):
    g = from_graph6(found["graph6"])
    if contains_induced(g, pattern(found["pattern"])) is not None:
        return False
    return measure(g, high) > measure(g, low) == found["measured"][low]


def test_criterion_11_open_problem_scans():
    notes, problems = [], []
    op1 = search_counterexample("OP1-FVS-K13", MAX_N)
    if not _certificate_ok(op1["certificate"], "near-bipartite", "K1,3"):
        problems.append("OP1 certificate")
    if op1["found"] and not _reproduces(op1["found"], "fvs", "ifvs"):
        problems.append("OP1 counterexample does not reproduce")
    scanned = sum(c["count"] for c in op1["certificate"])
    notes.append(f"OP1 {'found ' + op1['found']['graph6'] if op1['found'] else 'exhausted'} ({scanned} graphs)")

    op2 = search_counterexample("OP2-OCT-identical", MAX_N)
    for entry in op2["patterns"]:
        if not _certificate_ok(entry["certificate"], "3-colourable", entry["pattern"]):
            problems.append(f"OP2 {entry['pattern']} certificate")
        if entry["found"]:
            if not (_reproduces(entry["found"], "oct", "ioct") and is_three_colourable(from_graph6(entry["found"]["graph6"]))):
                problems.append(f"OP2 {entry['pattern']} counterexample does not reproduce")
        scanned = sum(c["count"] for c in entry["certificate"])
        notes.append(f"OP2 {entry['pattern']} {'found' if entry['found'] else 'exhausted'} ({scanned} graphs)")

    op3 = search_counterexample("OP3-OCT-bounded-scan", MAX_N)
    for table in op3["tables"]:
        if [row["n"] for row in table["rows"]] != list(range(1, MAX_N + 1)):
            problems.append(f"OP3 {table['pattern']} table incomplete")
        top = table["rows"][-1]["running_max"]
        notes.append(f"OP3 {table['pattern']} max ratio {top}")
    _record(11, not problems, "; ".join(notes) + (f"; problems: {problems}" if problems else ""))


def test_statement_catalog_covers_criteria_8():
    # guard against silently dropping statements from the catalog
    for sid in BOUND_IDS:
        assert catalog.get(sid).param_sets()


@pytest.mark.parametrize("sid", ["VC-3", "FVS-3", "OCT-2"])
def test_independent_set_statements_use_their_stated_range(sid):
    assert all(p["s"] >= 5 for p in catalog.get(sid).param_sets())
