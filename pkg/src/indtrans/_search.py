"""Exact search kernels shared by recognition and solvers.

Two engines:

* ``smallest_deletion_set`` -- the lexicographically first minimum set S whose
  deletion leaves an edgeless graph / a forest / a bipartite graph, optionally
  with S independent.  Sizes are tried in increasing order; within a size the
  vertices are decided in index order, "take" before "skip", so the first hit
  is the lexicographically smallest optimum.
* ``colourings`` -- 3-colouring search with forward checking and
  smallest-domain-first branching (ties: higher degree, then lower index).
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graph import Graph, bits, induced_subgraph

VC, FVS, OCT = "vc", "fvs", "oct"


def forest_extends(g: Graph, forest: int, v: int) -> bool:
    """Whether G[forest + v] is still acyclic, given G[forest] is."""
    covered = 0
    for u in bits(g.adj[v] & forest):
        if covered >> u & 1:
            return False
        covered |= g.component_of(u, forest)
    return True


def bipartite_extends(g: Graph, part: int, v: int) -> bool:
    """Whether G[part + v] is still bipartite, given G[part] is."""
    within = part | 1 << v
    even = frontier = 1 << v
    odd = 0
    parity = 0
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & within & ~(even | odd)
        if parity:
            even |= frontier
        else:
            odd |= frontier
        parity ^= 1
    for side in (even, odd):
        for u in bits(side):
            if g.adj[u] & side:
                return False
    return True


def _greedy_matching(g: Graph) -> int:
    used = 0
    size = 0
    for u, v in g.edges():
        if not (used >> u & 1 or used >> v & 1):
            used |= 1 << u | 1 << v
            size += 1
    return size


def _component_search(g: Graph, kind: str, independent: bool) -> int | None:
    n = g.n
    adj = g.adj
    rest = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        rest[i] = rest[i + 1] | 1 << i

    if kind == FVS:
        out_ok = lambda out, v: forest_extends(g, out, v)
    elif kind == OCT:
        out_ok = lambda out, v: bipartite_extends(g, out, v)
    else:
        out_ok = lambda out, v: not (adj[v] & out)

    def rec(i: int, chosen: int, out: int, cnt: int, forced: int, k: int) -> int | None:
        if i == n:
            return chosen
        bit = 1 << i
        if cnt < k and not (independent and adj[i] & chosen):
            found = rec(i + 1, chosen | bit, out, cnt + 1, forced, k)
            if found is not None:
                return found
        if forced & bit or not out_ok(out, i):
            return None
        if kind == VC:
            forced |= adj[i] & rest[i + 1]
            if cnt + (forced & rest[i + 1]).bit_count() > k:
                return None
        return rec(i + 1, chosen, out | bit, cnt, forced, k)

    lower = _greedy_matching(g) if kind == VC else 0
    for k in range(lower, n + 1):
        found = rec(0, 0, 0, 0, 0, k)
        if found is not None:
            return found
    return None


def smallest_deletion_set(g: Graph, kind: str, independent: bool = False) -> int | None:
    """Lexicographically first minimum deletion set, or None if none exists.

    Every property involved is closed under disjoint union, so components are
    solved separately and their optima united.
    """
    total = 0
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        found = _component_search(sub, kind, independent)
        if found is None:
            return None
        members = list(bits(comp))
        for i in bits(found):
            total |= 1 << members[i]
    return total


# ------------------------------------------------------------------ colouring

def colourings(
    g: Graph,
    domains: list[int] | None = None,
    zero_cap: int | None = None,
) -> Iterator[list[int]]:
    """Yield proper 3-colourings as lists of colours (0, 1, 2).

    ``domains[v]`` is a 3-bit mask of colours allowed at ``v``.  Without a
    ``zero_cap`` all three colours are interchangeable and each partition into
    at most three independent sets is produced exactly once.  With a cap, at
    most ``zero_cap`` vertices get colour 0 and only colours 1 and 2 are
    treated as interchangeable.
    """
    n = g.n
    adj = g.adj
    deg = [nb.bit_count() for nb in adj]
    dom = list(domains) if domains is not None else [7] * n
    if zero_cap is not None and zero_cap <= 0:
        dom = [d & ~1 for d in dom]
    if any(d == 0 for d in dom):
        return
    symmetric_all = zero_cap is None
    order = (0, 1, 2) if symmetric_all else (1, 2, 0)

    def rec(dom: list[int], unassigned: int, zeros: int, used: int) -> Iterator[list[int]]:
        if not unassigned:
            yield [d.bit_length() - 1 for d in dom]
            return
        v = -1
        key = None
        for u in bits(unassigned):
            k = (dom[u].bit_count(), -deg[u])
            if key is None or k < key:
                key, v = k, u
        if symmetric_all:
            fresh = next((c for c in range(3) if not used >> c & 1), None)
            allowed = used | (1 << fresh if fresh is not None else 0)
        elif not used & 6:
            allowed = 3
        else:
            allowed = 7
        rest = unassigned & ~(1 << v)
        for c in order:
            if not (dom[v] & allowed) >> c & 1:
                continue
            new = dom[:]
            new[v] = 1 << c
            clear = ~(1 << c)
            dead = False
            for u in bits(adj[v] & rest):
                new[u] &= clear
                if not new[u]:
                    dead = True
                    break
            if dead:
                continue
            z = zeros + (c == 0)
            if zero_cap is not None and c == 0 and z >= zero_cap:
                for u in bits(rest):
                    new[u] &= ~1
                    if not new[u]:
                        dead = True
                        break
                if dead:
                    continue
            yield from rec(new, rest, z, used | 1 << c)

    yield from rec(dom, (1 << n) - 1, 0, 0)


def first(it: Iterator) -> object | None:
    return next(it, None)


def canonical_classes(colour: list[int]) -> tuple[int, int, int]:
    """Colour classes renamed by first appearance in vertex order."""
    rename: dict[int, int] = {}
    parts = [0, 0, 0]
    for v, c in enumerate(colour):
        if c not in rename:
            rename[c] = len(rename)
        parts[rename[c]] |= 1 << v
    return parts[0], parts[1], parts[2]


def min_independent_oct(g: Graph) -> int | None:
    """Lexicographically first minimum independent odd cycle transversal."""
    total = 0
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        found = _component_ioct(sub)
        if found is None:
            return None
        members = list(bits(comp))
        for i in bits(found):
            total |= 1 << members[i]
    return total


def _component_ioct(g: Graph) -> int | None:
    feasible: Callable[[list[int], int], bool] = lambda dom, cap: first(colourings(g, dom, cap)) is not None
    base = [7] * g.n
    if not feasible(base, g.n):
        return None
    k = 0
    while not feasible(base, k):
        k += 1
    dom = base[:]
    chosen = 0
    for v in range(g.n):
        trial = dom[:]
        trial[v] = 1
        if chosen.bit_count() < k and feasible(trial, k):
            dom = trial
            chosen |= 1 << v
        else:
            dom[v] &= 6
    return chosen
