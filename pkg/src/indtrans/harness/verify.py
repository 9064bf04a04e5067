"""Exhaustive checking of catalog statements and constructive procedures."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .. import constructive as cons
from ..errors import PreconditionError, StructuralViolation, UnsupportedError
from ..gadgets import build
from ..graph import Graph, from_graph6, to_graph6
from ..patterns import pattern
from ..recognition import contains_induced, near_bipartition, three_colouring
from ..solvers import SOLVERS, min_fvs, min_ioct, min_oct, min_vc
from . import catalog
from .catalog import BoundStatement
from .enumeration import enumerate_upto, in_class, read_corpus

TIGHT_CAP = 10


@dataclass
class ReportRecord:
    statement: str
    params: dict
    graph6: str
    n: int
    source: str
    measured: dict = field(default_factory=dict)
    bound: int | None = None
    verdict: str = "inapplicable"
    tight: bool = False
    lhs: int | None = None  # left side of the main comparison
    detail: str = ""

    def to_json(self) -> dict:
        out = asdict(self)
        if not out["detail"]:
            del out["detail"]
        return out


# ---------------------------------------------------------------- caches


@lru_cache(maxsize=None)
def cached_measure(g6: str, name: str) -> int | None:
    g = from_graph6(g6)
    if name == "parts":
        return catalog.parts_count(g)
    sol = SOLVERS[name](g)
    return None if sol is None else sol.size


@lru_cache(maxsize=None)
def cached_free(g6: str, name: str) -> bool:
    return contains_induced(from_graph6(g6), pattern(name)) is None


@lru_cache(maxsize=None)
def cached_class(g6: str, cls: str) -> bool:
    return in_class(from_graph6(g6), cls)


# ---------------------------------------------------------------- corpus


@dataclass(frozen=True)
class Item:
    graph6: str
    source: str


def internal_corpus(cls: str, max_n: int, min_n: int = 1) -> list[Item]:
    return [Item(to_graph6(g), "enumerated") for g in enumerate_upto(max_n, cls, min_n)]


def file_corpus(path, cls: str = "all", max_n: int | None = None) -> list[Item]:
    return [Item(to_graph6(g), f"file:{path}") for g in read_corpus(path, cls, max_n)]


def witness_items(stmt: BoundStatement, params: dict) -> list[Item]:
    return [Item(to_graph6(build(spec)), f"gadget:{spec.label()}") for spec in stmt.witnesses(params)]


# ---------------------------------------------------------------- statements


def check_one(stmt: BoundStatement, params: dict, item: Item) -> ReportRecord:
    g6 = item.graph6
    n = from_graph6(g6).n
    rec = ReportRecord(stmt.id, dict(params), g6, n, item.source)
    if not cached_class(g6, stmt.cls):
        rec.detail = f"not {stmt.cls}"
        return rec
    for name in stmt.patterns_for(params):
        if not cached_free(g6, name):
            rec.detail = f"contains {name}"
            return rec
    if stmt.extra and not catalog.EXTRA_FILTERS[stmt.extra](from_graph6(g6)):
        rec.detail = f"not {stmt.extra}"
        return rec
    env = dict(params)
    for m in stmt.measures():
        env[m] = cached_measure(g6, m)
        rec.measured[m] = env[m]
    if any(env[m] is None for m in stmt.measures()):
        rec.verdict = "fail"
        rec.detail = "no independent transversal inside the class"
        return rec
    cmp = catalog.main_comparison(stmt.relation)
    lhs = catalog.evaluate(cmp.left, env)
    rhs = catalog.evaluate(cmp.comparators[0], env)
    rec.lhs, rec.bound = lhs, rhs
    rec.verdict = "pass" if catalog.evaluate(stmt.relation, env) else "fail"
    rec.tight = rec.verdict == "pass" and lhs == rhs
    return rec


def _check_chunk(stmt_id: str, params: dict, items: list[Item]) -> list[ReportRecord]:
    stmt = catalog.get(stmt_id)
    return [check_one(stmt, params, it) for it in items]


def _run_parallel(fn: Callable, stmt_id: str, params: dict, items: list[Item], jobs: int) -> list:
    if jobs <= 1 or len(items) < 2 * jobs:
        return fn(stmt_id, params, items)
    size = -(-len(items) // (jobs * 4))
    chunks = [items[i : i + size] for i in range(0, len(items), size)]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(fn, [stmt_id] * len(chunks), [params] * len(chunks), chunks):
            out.extend(part)
    return out


def check_statement(
    stmt: BoundStatement | str,
    corpus: Iterable[Item | Graph],
    params: dict | None = None,
    jobs: int = 1,
) -> list[ReportRecord]:
    """One record per corpus graph: inapplicable, pass or fail."""
    if isinstance(stmt, str):
        stmt = catalog.get(stmt)
    params = {} if params is None else dict(params)
    items = [it if isinstance(it, Item) else Item(to_graph6(it), "given") for it in corpus]
    if jobs <= 1 or stmt.id not in catalog.BY_ID:
        return [check_one(stmt, params, it) for it in items]
    return _run_parallel(_check_chunk, stmt.id, params, items, jobs)


def summarise(stmt_id: str, params: dict, records: list[ReportRecord]) -> dict:
    verdicts = Counter(r.verdict for r in records)
    applicable = [r for r in records if r.verdict != "inapplicable"]
    tight = [r.graph6 for r in applicable if r.tight]
    block = {
        "id": stmt_id,
        "params": params,
        "applicable": len(applicable),
        "pass": verdicts["pass"],
        "fail": verdicts["fail"],
        "inapplicable": verdicts["inapplicable"],
        "tight_count": len(tight),
        "tight_witnesses": tight[:TIGHT_CAP],
        "tight_sources": sorted({r.source for r in applicable if r.tight and r.source != "enumerated"}),
        "fails": [r.to_json() for r in records if r.verdict == "fail"],
        "by_n": by_n(records),
    }
    slack = [r.bound - r.lhs for r in applicable if r.bound is not None and r.lhs is not None]
    if slack:
        block["min_slack"] = min(slack)
    return block


def by_n(records: list[ReportRecord]) -> list[dict]:
    rows: dict[int, Counter] = {}
    for r in records:
        rows.setdefault(r.n, Counter())[r.verdict] += 1
    return [
        {
            "n": n,
            "applicable": c["pass"] + c["fail"],
            "pass": c["pass"],
            "fail": c["fail"],
            "inapplicable": c["inapplicable"],
        }
        for n, c in sorted(rows.items())
    ]


def verify_statement(
    stmt_id: str,
    max_n: int,
    params: dict | None = None,
    corpus_path=None,
    jobs: int = 1,
    with_witnesses: bool = True,
) -> list[dict]:
    """Summaries for one statement over its grid (or the given params)."""
    stmt = catalog.get(stmt_id)
    grid = [params] if params else stmt.param_sets()
    if corpus_path:
        base = file_corpus(corpus_path, "all", max_n)
    else:
        base = internal_corpus(stmt.cls, max_n)
    out = []
    for p in grid:
        items = list(base)
        if with_witnesses:
            items += witness_items(stmt, p)
        records = check_statement(stmt, items, p, jobs)
        out.append(summarise(stmt.id, p, records))
    return out


# ---------------------------------------------------------------- constructive


@dataclass(frozen=True)
class ConstructiveCheck:
    id: str
    cls: str
    patterns: tuple[str, ...]
    grid: tuple
    run: Callable[[Graph, dict], object]
    summary: str = ""


def _dichotomy(g: Graph, p: dict):
    from ..recognition import bipartition

    cert = bipartition(g)
    need = p["r"] * p["s"] + p["r"] - 1
    if min(cert.parts[0].bit_count(), cert.parts[1].bit_count()) < need:
        return None  # sides too small for the dichotomy
    return cons.degree_dichotomy(g, cert, cons.BoundParams(p["r"], p["s"]), check=False)


def _swap(g: Graph, p: dict):
    cover = min_vc(g)
    out = cons.ivc_local_improve_2p1p3(g, cover.set, check=False)
    return cons.BoundedResult(out, cover.size, "vc")


def _ioct_cograph(g: Graph, p: dict):
    res = cons.ioct_cograph(g, check=False)
    exact = min_ioct(g).size
    if res.size != exact:
        raise StructuralViolation(f"cograph routine gave {res.size}, ioct is {exact}")
    return res


CONSTRUCTIVE: tuple[ConstructiveCheck, ...] = (
    ConstructiveCheck("degree-dichotomy", "bipartite", ("K1,{r}+{s}P1",), catalog._grid(r=[1, 2, 3], s=[1, 2]), _dichotomy,
                      "degree dichotomy for large-sided graphs"),
    ConstructiveCheck("star-plus-indep", "bipartite", ("K1,{r}+{s}P1",), catalog._grid(r=[1, 2, 3], s=[1, 2]),
                      lambda g, p: cons.ivc_bound_star_plus_indep(g, cons.BoundParams(p["r"], p["s"]), check=False),
                      "ivc <= r*vc + rs"),
    ConstructiveCheck("subdivided-star", "bipartite", ("K1,{r}^+",), catalog._grid(r=[2, 3, 4]),
                      lambda g, p: cons.ivc_bound_subdivided_star(g, p["r"], check=False),
                      "ivc <= (r-1)*vc^2"),
    ConstructiveCheck("star-free", "bipartite", ("K1,{r}",), catalog._grid(r=[4, 5]),
                      lambda g, p: cons.ivc_bound_star_free(g, p["r"], check=False),
                      "ivc <= (r/2)*vc - 1"),
    ConstructiveCheck("swap-2P1+P3", "bipartite", ("2P1+P3",), ((),), _swap, "swap loop keeps the cover minimum"),
    ConstructiveCheck("ifvs-replacement", "near-bipartite", ("K1,{r}",), catalog._grid(r=[3]),
                      lambda g, p: cons.ifvs_replacement(g, min_fvs(g).set, near_bipartition(g), p["r"], check=False),
                      "ifvs <= (2r^2-5r+3)*fvs"),
    ConstructiveCheck("ioct-replacement", "3-colourable", ("K1,3",), ((),),
                      lambda g, p: cons.ioct_replacement(g, min_oct(g).set, three_colouring(g), check=False),
                      "ioct <= 3*oct"),
    ConstructiveCheck("ioct-lift", "3-colourable", ("K1,{r}+{s}P1",), catalog._grid(r=[1, 2, 3], s=[1, 2]),
                      lambda g, p: cons.ioct_lift(g, cons.BoundParams(p["r"], p["s"]), check=False),
                      "ioct <= max(oct*r+r^2+3rs-2r, f(oct))"),
    ConstructiveCheck("ioct-cograph", "3-colourable", ("P4",), ((),), _ioct_cograph, "ioct = oct on cographs"),
)

CONSTRUCTIVE_BY_ID = {c.id: c for c in CONSTRUCTIVE}


def _certify_chunk(op_id: str, params: dict, items: list[Item]) -> list[ReportRecord]:
    op = CONSTRUCTIVE_BY_ID[op_id]
    out = []
    for it in items:
        g = from_graph6(it.graph6)
        rec = ReportRecord(op_id, dict(params), it.graph6, g.n, it.source)
        if not cached_class(it.graph6, op.cls):
            out.append(rec)
            continue
        if not all(cached_free(it.graph6, t.format(**params)) for t in op.patterns):
            out.append(rec)
            continue
        try:
            res = op.run(g, params)
        except (PreconditionError, StructuralViolation, UnsupportedError) as exc:
            rec.verdict = "fail"
            rec.detail = f"{type(exc).__name__}: {exc}"
            out.append(rec)
            continue
        if res is None:
            rec.detail = "outside hypothesis"
        elif isinstance(res, cons.DichotomyOutcome):
            rec.verdict = "pass"
            rec.detail = res.branch
        else:
            rec.measured = {"size": res.size, "set": res.set}
            rec.bound = res.claimed_bound
            rec.verdict = "pass" if res.size <= res.claimed_bound else "fail"
            rec.tight = res.size == res.claimed_bound
            rec.detail = res.branch
        out.append(rec)
    return out


def certify_records(op_id: str, max_n: int, params: dict | None = None, jobs: int = 1) -> list[ReportRecord]:
    op = CONSTRUCTIVE_BY_ID[op_id]
    return _run_parallel(_certify_chunk, op.id, dict(params or {}), internal_corpus(op.cls, max_n), jobs)


def certify(op_id: str, max_n: int, params: dict | None = None, jobs: int = 1) -> list[dict]:
    """Run a constructive procedure on every applicable graph up to ``max_n``."""
    op = CONSTRUCTIVE_BY_ID[op_id]
    grid = [params] if params else [dict(p) for p in op.grid]
    out = []
    for p in grid:
        records = certify_records(op_id, max_n, p, jobs)
        verdicts = Counter(r.verdict for r in records)
        out.append(
            {
                "id": op.id,
                "params": p,
                "applicable": verdicts["pass"] + verdicts["fail"],
                "pass": verdicts["pass"],
                "fail": verdicts["fail"],
                "inapplicable": verdicts["inapplicable"],
                "fails": [r.to_json() for r in records if r.verdict == "fail"],
                "by_n": by_n(records),
            }
        )
    return out
