"""Class membership tests and structural classifiers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import _search
from .errors import PreconditionError, StructuralViolation
from .graph import Embedding, Graph, bits, complement, induced_subgraph, paw
from .patterns import pattern

BIPARTITION = "bipartition"
NEAR_BIPARTITION = "near-bipartition"
THREE_COLOURING = "three-colouring"


@dataclass(frozen=True)
class Certificate:
    kind: str
    parts: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        """Raise StructuralViolation unless this is a valid witness for ``g``."""
        expected = 3 if self.kind == THREE_COLOURING else 2
        if len(self.parts) != expected:
            raise StructuralViolation(f"{self.kind} needs {expected} parts")
        seen = 0
        for p in self.parts:
            if p & seen:
                raise StructuralViolation("certificate parts overlap")
            seen |= p
        if seen != g.full:
            raise StructuralViolation("certificate parts do not cover the vertex set")
        if self.kind == NEAR_BIPARTITION:
            indep, forest = self.parts
            if not g.is_independent(indep) or not is_forest(induced_subgraph(g, forest)):
                raise StructuralViolation("invalid near-bipartition")
        elif not all(g.is_independent(p) for p in self.parts):
            raise StructuralViolation(f"a {self.kind} part is not independent")


def _two_colour(g: Graph, comp: int) -> tuple[int, int] | None:
    # BFS layers from the lowest vertex; even layers form the first side
    start = comp & -comp
    even, odd = start, 0
    frontier, parity = start, 0
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & comp & ~(even | odd)
        parity ^= 1
        if parity:
            odd |= frontier
        else:
            even |= frontier
    if not (g.is_independent(even) and g.is_independent(odd)):
        return None
    return even, odd


def bipartition(g: Graph) -> Certificate | None:
    x = y = 0
    for comp in g.components():
        sides = _two_colour(g, comp)
        if sides is None:
            return None
        x |= sides[0]
        y |= sides[1]
    cert = Certificate(BIPARTITION, (x, y))
    cert.validate(g)
    return cert


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(g.components())


def three_colouring(g: Graph) -> Certificate | None:
    colour = _search.first(_search.colourings(g))
    if colour is None:
        return None
    cert = Certificate(THREE_COLOURING, _search.canonical_classes(colour))
    cert.validate(g)
    return cert


def is_three_colourable(g: Graph) -> bool:
    return _search.first(_search.colourings(g)) is not None


def enumerate_three_colourings(g: Graph, cap: int = 1000) -> list[Certificate]:
    """3-colourings up to renaming the colours, at most ``cap`` of them, sorted."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    found = []
    for colour in _search.colourings(g):
        found.append(_search.canonical_classes(colour))
        if len(found) >= cap:
            break
    return [Certificate(THREE_COLOURING, parts) for parts in sorted(found)]


def near_bipartition(g: Graph) -> Certificate | None:
    """(I, F) with I a minimum independent set whose removal leaves a forest."""
    indep = _search.smallest_deletion_set(g, _search.FVS, independent=True)
    if indep is None:
        return None
    cert = Certificate(NEAR_BIPARTITION, (indep, g.full & ~indep))
    cert.validate(g)
    return cert


def is_near_bipartite(g: Graph) -> bool:
    return near_bipartition(g) is not None


def contains_induced(g: Graph, h: Graph) -> Embedding | None:
    """First induced embedding of ``h`` into ``g``, mapping h's vertices in order."""
    k = h.n
    if k > g.n:
        return None
    gdeg = [nb.bit_count() for nb in g.adj]
    hdeg = [nb.bit_count() for nb in h.adj]
    allowed = []
    for i in range(k):
        allowed.append(sum(1 << v for v in range(g.n) if gdeg[v] >= hdeg[i]))
    emb: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = allowed[i] & ~used
        for j, v in enumerate(emb):
            if h.adj[i] >> j & 1:
                cand &= g.adj[v]
            else:
                cand &= ~g.adj[v]
            if not cand:
                return False
        for v in bits(cand):
            emb.append(v)
            if rec(i + 1, used | 1 << v):
                return True
            emb.pop()
        return False

    return tuple(emb) if rec(0, 0) else None


def is_free(g: Graph, patterns: Iterable[Graph | str]) -> bool:
    for h in patterns:
        if isinstance(h, str):
            h = pattern(h)
        if contains_induced(g, h) is not None:
            return False
    return True


def is_complete_multipartite(g: Graph) -> tuple[int, ...] | None:
    """Parts of a complete multipartite structure, read off complement components."""
    parts = tuple(complement(g).components())
    if all(g.is_independent(p) for p in parts):
        return parts
    return None


def is_almost_complete_bipartite(g: Graph) -> bool:
    """Bipartite with sides X, Y where the X-Y non-edges form a matching."""
    if g.num_edges == 0:
        return True
    comps = g.components()
    if len(comps) > 3:
        # two vertices of X in different components would share a Y non-neighbour
        return False
    sides = []
    for comp in comps:
        two = _two_colour(g, comp)
        if two is None:
            return False
        sides.append(two)
    for flips in product((0, 1), repeat=len(comps)):
        x = y = 0
        for (a, b), f in zip(sides, flips):
            x |= b if f else a
            y |= a if f else b
        if all((y & ~g.adj[v]).bit_count() <= 1 for v in bits(x)) and all(
            (x & ~g.adj[v]).bit_count() <= 1 for v in bits(y)
        ):
            return True
    return False


PATH, CYCLE, ACB, NOT_APPLICABLE = "path", "cycle", "almost-complete-bipartite", "not-applicable"


def alekseev_classify(g: Graph) -> str:
    if not g.is_connected():
        raise PreconditionError("alekseev_classify needs a connected graph")
    if not is_bipartite(g) or contains_induced(g, pattern("K1,3^+")) is not None:
        return NOT_APPLICABLE
    degs = [g.degree(v) for v in range(g.n)]
    if max(degs, default=0) <= 2 and g.num_edges == g.n - 1:
        return PATH
    if degs and all(d == 2 for d in degs):
        return CYCLE
    if is_almost_complete_bipartite(g):
        return ACB
    raise StructuralViolation(f"connected K1,3^+-free bipartite graph {g!r} fits no structure")


C3_FREE, MULTIPARTITE = "C3-free", "complete-multipartite"


def olariu_decompose(g: Graph) -> list[str] | None:
    """Per-component tags for a paw-free graph, or None if a paw is present."""
    if contains_induced(g, paw()) is not None:
        return None
    tags = []
    triangle = pattern("K3")
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        if contains_induced(sub, triangle) is None:
            tags.append(C3_FREE)
        elif is_complete_multipartite(sub) is not None:
            tags.append(MULTIPARTITE)
        else:
            raise StructuralViolation(f"paw-free component {sub!r} is neither C3-free nor complete multipartite")
    return tags


__all__ = [
    "Certificate",
    "alekseev_classify",
    "bipartition",
    "contains_induced",
    "enumerate_three_colourings",
    "is_almost_complete_bipartite",
    "is_bipartite",
    "is_complete_multipartite",
    "is_forest",
    "is_free",
    "is_near_bipartite",
    "is_three_colourable",
    "near_bipartition",
    "olariu_decompose",
    "three_colouring",
]
