"""Small simple undirected graphs stored as per-vertex neighbourhood bit masks.

Vertices are the integers ``0..n-1``; a vertex subset is a plain ``int`` whose
bit ``v`` is set when ``v`` belongs to it.  Everything here is immutable and
side-effect free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import Graph6Error, GraphSizeError

MAX_N = 64
MAX_CANONICAL_N = 10

# An Embedding maps pattern vertex i to host vertex emb[i].
Embedding = tuple[int, ...]


def bits(mask: int) -> Iterator[int]:
    """Yield the vertices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise GraphSizeError(f"graph has {self.n} vertices; at most {MAX_N} supported")
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length differs from n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_N:
            raise GraphSizeError(f"graph has {n} vertices; at most {MAX_N} supported")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield v, u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((nb.bit_count() for nb in self.adj), default=0)

    def neighbourhood(self, s: int) -> int:
        """N(S): vertices outside ``s`` with a neighbour in ``s``."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def is_independent(self, s: int) -> bool:
        return all(not (self.adj[v] & s) for v in bits(s))

    def edges_within(self, s: int) -> int:
        return sum((self.adj[v] & s).bit_count() for v in bits(s)) // 2

    def component_of(self, v: int, within: int | None = None) -> int:
        """Vertex mask of the component of ``v`` in ``G[within]``."""
        if within is None:
            within = self.full
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[int]:
        """Component masks of ``G[within]``, ordered by lowest vertex."""
        if within is None:
            within = self.full
        rest = within
        comps = []
        while rest:
            c = self.component_of(lowest(rest), within)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or self.component_of(0) == self.full

    def __repr__(self) -> str:
        return f"Graph({to_graph6(self)!r})"


# ---------------------------------------------------------------- graph6

_HEADER = ">>graph6<<"


def _n_bytes(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_n_bytes(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if text.endswith("\n"):
        text = text[:-1]
    start = len(_HEADER) if text.startswith(_HEADER) else 0
    data = text[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range", start + k)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) > 1 and data[1] == "~":
        raise Graph6Error("8-byte size header implies more than 64 vertices", start)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated size header", start + len(data))
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    if n > MAX_N:
        raise Graph6Error(f"graph has {n} vertices; at most {MAX_N} supported", start)
    nbits = n * (n - 1) // 2
    need = math.ceil(nbits / 6)
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error("adjacency data truncated", start + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", start + pos + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and (ord(body[-1]) - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("non-zero padding bits", start + pos + need - 1)
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(from_graph6(line))
    return graphs


# ---------------------------------------------------------------- combinators

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_N:
        raise GraphSizeError(f"union would have {g.n + h.n} vertices; at most {MAX_N} supported")
    return Graph(g.n + h.n, g.adj + tuple(nb << g.n for nb in h.adj))


def union_all(graphs: Sequence[Graph]) -> Graph:
    return reduce(disjoint_union, graphs, Graph(0, ()))


def induced_subgraph(g: Graph, s: int) -> Graph:
    if s & ~g.full:
        raise ValueError("vertex set contains vertices outside the graph")
    keep = list(bits(s))
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(to_mask(index[u] for u in bits(g.adj[v] & s)))
    return Graph(len(keep), tuple(adj))


def delete(g: Graph, s: int) -> Graph:
    """G - S."""
    return induced_subgraph(g, g.full & ~s)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which new vertex ``i`` is old vertex ``perm[i]``."""
    pos = {old: new for new, old in enumerate(perm)}
    return Graph(g.n, tuple(to_mask(pos[u] for u in bits(g.adj[old])) for old in perm))


def canonical_form(g: Graph) -> bytes:
    """Lexicographically least graph6 body over all vertex orderings.

    Columns of the upper triangle are fixed one vertex at a time, keeping only
    the partial orderings whose prefix is still minimal, so the result equals
    the brute-force minimum over all ``n!`` permutations.
    """
    n = g.n
    if n > MAX_CANONICAL_N:
        raise GraphSizeError(f"canonical_form supports n <= {MAX_CANONICAL_N}, got {n}")
    adj = g.adj
    beam = [((v,), 1 << v) for v in range(n)] if n else [((), 0)]
    for _ in range(1, n):
        best = None
        nxt = []
        for order, used in beam:
            for w in range(n):
                if used >> w & 1:
                    continue
                nb = adj[w]
                col = 0
                for u in order:
                    col = col << 1 | (nb >> u & 1)
                if best is None or col < best:
                    best = col
                    nxt = [(order + (w,), used | 1 << w)]
                elif col == best:
                    nxt.append((order + (w,), used | 1 << w))
        beam = nxt
    return to_graph6(relabel(g, beam[0][0])).encode("ascii")


# ---------------------------------------------------------------- named graphs

def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return complement(empty(n))


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for p, size in enumerate(sizes):
        part += [p] * size
    n = len(part)
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]))


def complete_bipartite(s: int, t: int) -> Graph:
    return complete_multipartite(s, t)


def star(r: int) -> Graph:
    """K_{1,r} with the centre labelled 0."""
    return Graph.from_edges(r + 1, ((0, i) for i in range(1, r + 1)))


def subdivided_star(r: int) -> Graph:
    """K_{1,r}^+: the r-star with one edge subdivided (new vertex last)."""
    return Graph.from_edges(r + 2, [(0, i) for i in range(1, r + 1)] + [(r, r + 1)])


def paw() -> Graph:
    """Complement of P1 + P3: a triangle with a pendant vertex."""
    return complement(disjoint_union(empty(1), path(3)))
