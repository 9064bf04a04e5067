"""Declarative table of bound and identity statements.

Each entry names the graph class, the forbidden pattern(s) as templates over
the parameters, a relation over solver measures, the parameter grid checked by
default and the gadgets known to attain the bound.  Adding a statement means
adding a row here.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass, field
from typing import Callable

from ..gadgets import GadgetSpec
from ..graph import Graph
from ..recognition import is_almost_complete_bipartite, is_complete_multipartite

Params = dict


@dataclass(frozen=True)
class BoundStatement:
    id: str
    cls: str
    patterns: tuple[str, ...]
    relation: str
    grid: tuple[tuple[tuple[str, object], ...], ...] = ((),)
    tight: bool = False
    witnesses: Callable[[Params], list[GadgetSpec]] = field(default=lambda p: [], compare=False)
    extra: str | None = None  # name of an additional class predicate
    summary: str = ""

    def param_sets(self) -> list[Params]:
        return [dict(p) for p in self.grid]

    def patterns_for(self, params: Params) -> list[str]:
        return [t.format(**params) for t in self.patterns]

    def measures(self) -> list[str]:
        return sorted({n.id for n in ast.walk(ast.parse(self.relation, mode="eval")) if isinstance(n, ast.Name)} & MEASURE_NAMES)


MEASURE_NAMES = {"vc", "ivc", "fvs", "ifvs", "oct", "ioct", "parts"}

EXTRA_FILTERS: dict[str, Callable[[Graph], bool]] = {
    "almost-complete-bipartite": is_almost_complete_bipartite,
}


def _grid(**axes) -> tuple:
    rows: list[tuple] = [()]
    for name, values in axes.items():
        rows = [row + ((name, v),) for row in rows for v in values]
    return tuple(rows)


def _ds(p, q):
    return GadgetSpec("double_star", p=p, q=q)


STATEMENTS: tuple[BoundStatement, ...] = (
    # bipartite graphs: vc against ivc
    BoundStatement("VC-1", "bipartite", ("{H}",), "ivc == vc", _grid(H=["K1,3^+", "2P1+P3"]), tight=True,
                   summary="ivc = vc for K1,3^+-free or 2P1+P3-free"),
    BoundStatement("VC-2", "bipartite", ("K1,3+P1",), "ivc <= vc + 1", tight=True,
                   witnesses=lambda p: [_ds(2, 2)], summary="ivc <= vc+1 for K1,3+P1-free"),
    BoundStatement("VC-3", "bipartite", ("{s}P1",), "ivc <= vc + s - 3", _grid(s=[5, 6]),
                   summary="ivc <= vc+s-3 for sP1-free, s >= 5"),
    BoundStatement("VC-4", "bipartite", ("{s}P1+P2",), "ivc <= vc + s - 2", _grid(s=[3, 4]),
                   summary="ivc <= vc+s-2 for sP1+P2-free, s >= 3"),
    BoundStatement("VC-5", "bipartite", ("{s}P1+P3",), "ivc <= vc + s - 2", _grid(s=[3, 4]), tight=True,
                   witnesses=lambda p: [_ds(p["s"] - 1, p["s"] - 1)],
                   summary="ivc <= vc+s-2 for sP1+P3-free, s >= 3"),
    BoundStatement("VC-6", "bipartite", ("K1,3+{s}P1",), "ivc <= vc + 3*s + 2", _grid(s=[2, 3]),
                   summary="ivc <= vc+3s+2 for K1,3+sP1-free, s >= 2"),
    BoundStatement("VC-7", "bipartite", ("K1,{r}",), "ivc <= max(vc, r*vc//2 - 1)", _grid(r=[4, 5]), tight=True,
                   witnesses=lambda p: [_ds(p["r"] - 2, p["r"] - 2)],
                   summary="ivc <= (r/2)vc-1 when a minimum cover is not independent, for K1,r-free, r >= 4"),
    BoundStatement("VC-8", "bipartite", ("K1,{r}+{s}P1",), "ivc <= r*vc + r*s", _grid(r=[4], s=[1, 2, 3]),
                   summary="ivc <= r*vc+rs for K1,r+sP1-free"),
    BoundStatement("VC-9", "bipartite", ("K1,{r}^+",), "ivc <= (r-1)*vc*vc", _grid(r=[4]),
                   summary="ivc <= (r-1)vc^2 for K1,r^+-free"),
    # near-bipartite graphs: fvs against ifvs
    BoundStatement("FVS-1", "near-bipartite", ("{H}",), "ifvs == fvs",
                   _grid(H=["P1", "2P1", "3P1", "P2", "P1+P2", "P3"]), tight=True,
                   summary="ifvs = fvs when H is a subgraph of P3"),
    BoundStatement("FVS-2", "near-bipartite", ("4P1",), "ifvs <= fvs + 1", tight=True,
                   witnesses=lambda p: [GadgetSpec("fig_fvs1")], summary="ifvs <= fvs+1 for 4P1-free"),
    BoundStatement("FVS-3", "near-bipartite", ("{s}P1",), "ifvs <= fvs + s - 3", _grid(s=[5, 6]),
                   summary="ifvs <= fvs+s-3 for sP1-free, s >= 5"),
    BoundStatement("FVS-4", "near-bipartite", ("K1,{r}",), "ifvs <= (2*r*r - 5*r + 3)*fvs", _grid(r=[3, 4]),
                   summary="ifvs <= (2r^2-5r+3)fvs for K1,r-free"),
    # 3-colourable graphs: oct against ioct
    BoundStatement("OCT-1", "3-colourable", ("{H}",), "ioct == oct",
                   _grid(H=["P4", "4P1", "P1+P3", "2P1+P2"]), tight=True,
                   summary="ioct = oct when H is a subgraph of P4 other than 2P2"),
    BoundStatement("OCT-2", "3-colourable", ("{s}P1",), "ioct <= oct + s - 3", _grid(s=[5, 6]),
                   summary="ioct <= oct+s-3 for sP1-free, s >= 5"),
    BoundStatement("OCT-3", "3-colourable", ("{s}P1+P2",), "ioct <= oct + 3*s - 1", _grid(s=[3, 4]),
                   witnesses=lambda p: [GadgetSpec("fig_oct2")],
                   summary="ioct <= oct+3s-1 for sP1+P2-free, s >= 3"),
    BoundStatement("OCT-4", "3-colourable", ("{s}P1+P3",), "ioct <= 2*oct + 6*s", _grid(s=[2, 3]),
                   summary="ioct <= 2oct+6s for sP1+P3-free, s >= 2"),
    BoundStatement("OCT-5", "3-colourable", ("K1,3",), "ioct <= 3*oct",
                   summary="ioct <= 3oct for K1,3-free"),
    BoundStatement("OCT-6", "3-colourable", ("K1,3+{s}P1",), "ioct <= 3*oct + 9*s + 3", _grid(s=[1, 2, 3]),
                   witnesses=lambda p: [GadgetSpec("fig_oct1")],
                   summary="ioct <= 3oct+9s+3 for K1,3+sP1-free"),
    # structural identities
    BoundStatement("ID-VC", "bipartite", (), "ivc == vc", tight=True, extra="almost-complete-bipartite",
                   summary="ivc = vc on almost complete bipartite graphs"),
    BoundStatement("ID-FVS", "near-bipartite", ("P1+P2",), "ifvs == fvs and parts <= 3", tight=True,
                   summary="P1+P2-free near-bipartite graphs are complete multipartite with at most 3 parts and ifvs = fvs"),
    BoundStatement("ID-OCT", "3-colourable", ("P4",), "ioct == oct", tight=True,
                   summary="ioct = oct on P4-free 3-colourable graphs"),
)

BY_ID = {s.id: s for s in STATEMENTS}


def get(stmt_id: str) -> BoundStatement:
    try:
        return BY_ID[stmt_id]
    except KeyError:
        raise ValueError(f"unknown statement {stmt_id!r}; choose from {', '.join(BY_ID)}") from None


def parts_count(g: Graph) -> int | None:
    parts = is_complete_multipartite(g)
    return None if parts is None else len(parts)


# ---------------------------------------------------------------- relations

_BIN = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
}
_CMP = {
    ast.Eq: operator.eq,
    ast.LtE: operator.le,
    ast.GtE: operator.ge,
    ast.Lt: operator.lt,
    ast.Gt: operator.gt,
}
_FUNCS = {"max": max, "min": min}


def evaluate(expr: str | ast.AST, env: dict):
    """Evaluate a relation over integers: + - * //, comparisons, and, max/min."""
    node = ast.parse(expr, mode="eval").body if isinstance(expr, str) else expr
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        return env[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BIN:
        return _BIN[type(node.op)](evaluate(node.left, env), evaluate(node.right, env))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -evaluate(node.operand, env)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
        return _FUNCS[node.func.id](*(evaluate(a, env) for a in node.args))
    if isinstance(node, ast.Compare) and len(node.ops) == 1 and type(node.ops[0]) in _CMP:
        return _CMP[type(node.ops[0])](evaluate(node.left, env), evaluate(node.comparators[0], env))
    if isinstance(node, ast.BoolOp) and isinstance(node.op, ast.And):
        return all(evaluate(v, env) for v in node.values)
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


def main_comparison(expr: str) -> ast.Compare:
    """The first comparison in a relation; its sides give the measured value and the bound."""
    body = ast.parse(expr, mode="eval").body
    if isinstance(body, ast.BoolOp):
        body = body.values[0]
    if not isinstance(body, ast.Compare):
        raise ValueError(f"relation {expr!r} does not start with a comparison")
    return body
