"""Exact minimum (independent) vertex covers, feedback vertex sets and odd cycle
transversals.

Every solver returns the lexicographically smallest optimum, meaning the
optimum whose sorted vertex list comes first, and re-checks it before return.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _search
from .errors import StructuralViolation
from .graph import Graph, bits, delete
from .recognition import bipartition, is_bipartite, is_forest, near_bipartition


@dataclass(frozen=True)
class Solution:
    set: int
    size: int
    independent: bool

    def vertices(self) -> list[int]:
        return list(bits(self.set))


MEASURES = ("vc", "ivc", "fvs", "ifvs", "oct", "ioct")


def is_vertex_cover(g: Graph, s: int) -> bool:
    return all(s >> u & 1 or s >> v & 1 for u, v in g.edges())


def is_fvs(g: Graph, s: int) -> bool:
    return is_forest(delete(g, s))


def is_oct(g: Graph, s: int) -> bool:
    return is_bipartite(delete(g, s))


_CHECK = {"vc": is_vertex_cover, "fvs": is_fvs, "oct": is_oct}


def _wrap(g: Graph, s: int, kind: str, need_independent: bool) -> Solution:
    if not _CHECK[kind](g, s):
        raise StructuralViolation(f"{kind} solver returned an invalid set for {g!r}")
    independent = g.is_independent(s)
    if need_independent and not independent:
        raise StructuralViolation(f"independent {kind} solver returned a non-independent set")
    return Solution(s, s.bit_count(), independent)


def min_vc(g: Graph) -> Solution:
    return _wrap(g, _search.smallest_deletion_set(g, _search.VC), "vc", False)


def min_ivc(g: Graph) -> Solution | None:
    """Per component, the smaller side of its bipartition (first side on ties)."""
    cert = bipartition(g)
    if cert is None:
        return None
    x, y = cert.parts
    s = 0
    for comp in g.components():
        a, b = x & comp, y & comp
        s |= a if a.bit_count() <= b.bit_count() else b
    return _wrap(g, s, "vc", True)


def min_fvs(g: Graph) -> Solution:
    return _wrap(g, _search.smallest_deletion_set(g, _search.FVS), "fvs", False)


def min_ifvs(g: Graph) -> Solution | None:
    cert = near_bipartition(g)
    if cert is None:
        return None
    return _wrap(g, cert.parts[0], "fvs", True)


def min_oct(g: Graph) -> Solution:
    return _wrap(g, _search.smallest_deletion_set(g, _search.OCT), "oct", False)


def min_ioct(g: Graph) -> Solution | None:
    s = _search.min_independent_oct(g)
    if s is None:
        return None
    return _wrap(g, s, "oct", True)


SOLVERS = {
    "vc": min_vc,
    "ivc": min_ivc,
    "fvs": min_fvs,
    "ifvs": min_ifvs,
    "oct": min_oct,
    "ioct": min_ioct,
}


def measure(g: Graph, name: str) -> int | None:
    """Optimum size for ``name``, None when no independent transversal exists."""
    sol = SOLVERS[name](g)
    return None if sol is None else sol.size
