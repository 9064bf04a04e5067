"""Non-isomorphic graph generation by one-vertex augmentation."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator

from ..errors import GraphSizeError
from ..graph import Graph, canonical_form, from_graph6, read_graph6_file
from ..recognition import is_bipartite, is_near_bipartite, is_three_colourable

MAX_ENUM_N = 8

CLASSES: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "bipartite": is_bipartite,
    "near-bipartite": is_near_bipartite,
    "3-colourable": is_three_colourable,
}


def in_class(g: Graph, cls: str) -> bool:
    try:
        test = CLASSES[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(CLASSES)}") from None
    return test(g)


@lru_cache(maxsize=None)
def _level(n: int, cls: str) -> tuple[bytes, ...]:
    # every class here is hereditary, so each member on n vertices extends a
    # member on n-1 vertices
    if n == 0:
        return (canonical_form(Graph(0, ())),)
    seen: set[bytes] = set()
    for code in _level(n - 1, cls):
        base = from_graph6(code)
        for mask in range(1 << (n - 1)):
            adj = list(base.adj)
            for u in range(n - 1):
                if mask >> u & 1:
                    adj[u] |= 1 << (n - 1)
            adj.append(mask)
            seen.add(canonical_form(Graph(n, tuple(adj))))
    test = CLASSES[cls]
    return tuple(sorted(c for c in seen if test(from_graph6(c))))


def enumerate_graphs(n: int, cls: str = "all") -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices in ``cls``, in
    canonical-form order."""
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}; choose from {', '.join(CLASSES)}")
    if not 0 <= n <= MAX_ENUM_N:
        raise GraphSizeError(f"internal enumeration supports 0 <= n <= {MAX_ENUM_N}, got {n}")
    for code in _level(n, cls):
        yield from_graph6(code)


def enumerate_upto(max_n: int, cls: str = "all", min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, cls)


def read_corpus(path: str | Path, cls: str = "all", max_n: int | None = None) -> Iterator[Graph]:
    """Graphs from a graph6 file, filtered to ``cls`` and at most ``max_n`` vertices."""
    try:
        graphs = read_graph6_file(path)
    except OSError as exc:
        raise OSError(f"cannot read corpus {path}: {exc.strerror or exc}") from exc
    for g in graphs:
        if (max_n is None or g.n <= max_n) and in_class(g, cls):
            yield g
