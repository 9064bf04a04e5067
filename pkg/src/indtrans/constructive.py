"""Constructive procedures that turn an arbitrary minimum transversal into an
independent one whose size is bounded by an explicit formula.

Every function returns a :class:`BoundedResult` (except the local-improvement
swap, which returns a bare vertex set) and re-checks independence, the
transversal property and the bound before returning.  Precondition checks use
exact pattern search and can be switched off with ``check=False``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError, StructuralViolation, UnsupportedError
from .graph import Graph, bits, complement, induced_subgraph
from .patterns import pattern
from .recognition import (
    BIPARTITION,
    NEAR_BIPARTITION,
    THREE_COLOURING,
    Certificate,
    bipartition,
    contains_induced,
    is_bipartite,
    is_forest,
    three_colouring,
)
from .solvers import is_fvs, is_oct, is_vertex_cover, min_ioct, min_ivc, min_oct, min_vc

LOW_DEGREE, FEW_EXCEPTIONS = "low-degree", "few-exceptions"


@dataclass(frozen=True)
class BoundParams:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 0:
            raise ValueError("need r >= 1 and s >= 0")


@dataclass(frozen=True)
class BoundedResult:
    set: int
    claimed_bound: int
    bound_formula: str
    branch: str = ""

    @property
    def size(self) -> int:
        return self.set.bit_count()


@dataclass(frozen=True)
class DichotomyOutcome:
    branch: str
    exceptional_x: int = 0
    exceptional_y: int = 0


_PROPERTY = {"vc": is_vertex_cover, "fvs": is_fvs, "oct": is_oct}


def _finish(g: Graph, s: int, kind: str, bound: int, formula: str, branch: str = "") -> BoundedResult:
    if not g.is_independent(s):
        raise StructuralViolation(f"{formula}: output is not independent on {g!r}")
    if not _PROPERTY[kind](g, s):
        raise StructuralViolation(f"{formula}: output is not a valid {kind} on {g!r}")
    if s.bit_count() > bound:
        raise StructuralViolation(f"{formula}: output size {s.bit_count()} exceeds bound {bound} on {g!r}")
    return BoundedResult(s, bound, formula, branch)


def _require_free(g: Graph, name: str) -> None:
    if contains_induced(g, pattern(name)) is not None:
        raise PreconditionError(f"graph {g!r} contains an induced {name}")


def _require_bipartite(g: Graph) -> tuple[int, int]:
    cert = bipartition(g)
    if cert is None:
        raise PreconditionError(f"graph {g!r} is not bipartite")
    return cert.parts


def _star_plus(r: int, s: int) -> str:
    return f"K1,{r}+{s}P1" if s else f"K1,{r}"


def _non_neighbours(g: Graph, v: int, other: int) -> int:
    return other & ~g.adj[v]


# ---------------------------------------------------------------- vertex cover


def degree_dichotomy(g: Graph, cert: Certificate, p: BoundParams, check: bool = True) -> DichotomyOutcome:
    """Degree dichotomy for (K1,r + sP1)-free bipartite graphs with large sides."""
    r, s = p.r, p.s
    x, y = cert.parts
    if check:
        cert.validate(g)
        if cert.kind != BIPARTITION:
            raise PreconditionError("degree_dichotomy needs a bipartition")
    need = r * s + r - 1
    if min(x.bit_count(), y.bit_count()) < need:
        raise PreconditionError(f"side smaller than rs+r-1 = {need}")
    if check:
        _require_free(g, _star_plus(r, s))
    if g.max_degree() < r:
        return DichotomyOutcome(LOW_DEGREE)
    ex_x = sum(1 << v for v in bits(x) if _non_neighbours(g, v, y).bit_count() > s - 1)
    ex_y = sum(1 << v for v in bits(y) if _non_neighbours(g, v, x).bit_count() > s - 1)
    if ex_x.bit_count() < s and ex_y.bit_count() < s:
        return DichotomyOutcome(FEW_EXCEPTIONS, ex_x, ex_y)
    raise StructuralViolation(f"neither degree branch holds on {g!r} for r={r}, s={s}")


def _push_across(g: Graph, cover: int, keep: int) -> int:
    """(S ∩ keep) ∪ N(S \\ keep): swap one side of a cover for its neighbourhood."""
    return (cover & keep) | g.neighbourhood(cover & ~keep)


def ivc_bound_star_plus_indep(g: Graph, p: BoundParams, check: bool = True) -> BoundedResult:
    """Independent vertex cover of size at most r*vc + r*s."""
    r, s = p.r, p.s
    if r < 1 or s < 1:
        raise PreconditionError("need r, s >= 1")
    x, y = _require_bipartite(g)
    if check:
        _require_free(g, _star_plus(r, s))
    cover = min_vc(g).set
    vc = cover.bit_count()
    bound = r * vc + r * s
    formula = "r*vc+r*s"
    if vc <= 1:
        return _finish(g, cover, "vc", bound, formula, "vc<=1")
    small = x if x.bit_count() <= y.bit_count() else y
    if small.bit_count() <= bound:
        return _finish(g, small, "vc", bound, formula, "small side")
    if g.max_degree() <= r - 1:
        return _finish(g, _push_across(g, cover, y), "vc", bound, formula, LOW_DEGREE)
    raise StructuralViolation(f"large sides with a vertex of degree >= r on {g!r}")


def ivc_bound_subdivided_star(g: Graph, r: int, check: bool = True) -> BoundedResult:
    """Independent vertex cover of size at most (r-1)*vc^2, built per component."""
    if r < 2:
        raise PreconditionError("need r >= 2")
    _require_bipartite(g)
    if check:
        _require_free(g, f"K1,{r}^+")
    total = 0
    vc_total = 0
    for comp in g.components():
        h = induced_subgraph(g, comp)
        members = list(bits(comp))
        cover = min_vc(h).set
        vc = cover.bit_count()
        vc_total += vc
        cap = (r - 1) * vc * vc
        x, y = bipartition(h).parts
        candidates = []
        if h.is_independent(cover):
            candidates.append(cover)
        candidates += [x, y, _push_across(h, cover, y), _push_across(h, cover, x)]
        ok = [c for c in candidates if c.bit_count() <= cap and h.is_independent(c) and is_vertex_cover(h, c)]
        if not ok:
            raise StructuralViolation(f"no candidate cover within (r-1)*vc^2 on component {h!r}")
        best = min(ok, key=lambda c: c.bit_count())
        for i in bits(best):
            total |= 1 << members[i]
    return _finish(g, total, "vc", (r - 1) * vc_total * vc_total, "(r-1)*vc^2")


def ivc_bound_star_free(g: Graph, r: int, check: bool = True) -> BoundedResult:
    """For K1,r-free bipartite g: the smaller of (S∩A)∪N(S∩B) and (S∩B)∪N(S∩A)."""
    if r < 4:
        raise PreconditionError("need r >= 4")
    a, b = _require_bipartite(g)
    if check:
        _require_free(g, f"K1,{r}")
    cover = min_vc(g).set
    vc = cover.bit_count()
    if g.is_independent(cover):
        return _finish(g, cover, "vc", vc, "vc", "already independent")
    first = _push_across(g, cover, a)
    second = _push_across(g, cover, b)
    best = first if first.bit_count() <= second.bit_count() else second
    return _finish(g, best, "vc", r * vc // 2 - 1, "(r/2)*vc-1", "swap side")


def ivc_local_improve_2p1p3(g: Graph, cover: int, check: bool = True) -> int:
    """Turn a minimum vertex cover of a (2P1+P3)-free bipartite graph into an
    independent one of the same size."""
    a_side, b_side = _require_bipartite(g)
    if not is_vertex_cover(g, cover):
        raise PreconditionError("input set is not a vertex cover")
    if check:
        _require_free(g, "2P1+P3")
        if cover.bit_count() != min_vc(g).size:
            raise PreconditionError("input cover is not minimum")
    s = cover
    for _ in range(g.num_edges + 1):
        inside = [(u, v) for u, v in g.edges() if s >> u & 1 and s >> v & 1]
        if not inside:
            return s
        swapped = False
        for u, v in inside:
            x, y = (u, v) if a_side >> u & 1 else (v, u)
            ix, iy = g.adj[x] & ~s, g.adj[y] & ~s
            if not ix or not iy:
                raise StructuralViolation("cover vertex without a private neighbour; cover not minimum")
            if ix.bit_count() >= 2 and iy.bit_count() >= 2:
                raise StructuralViolation(f"both ends of {x}-{y} have two outside neighbours on {g!r}")
            if ix.bit_count() == 1 and iy.bit_count() >= 2:
                s = (s & ~(1 << x)) | ix
                swapped = True
                break
            if iy.bit_count() == 1 and ix.bit_count() >= 2:
                s = (s & ~(1 << y)) | iy
                swapped = True
                break
        if swapped:
            continue
        # every inside edge has one private neighbour per end: take a whole side
        for side in (a_side, b_side):
            if (side & ~s).bit_count() <= 1 and side.bit_count() <= s.bit_count():
                if not is_vertex_cover(g, side):
                    raise StructuralViolation("side is not a cover")
                return side
        raise StructuralViolation(f"terminal case without a small side on {g!r}")
    raise StructuralViolation("swap loop did not terminate")


# ---------------------------------------------------------------- replacement


def _paths_between(g: Graph, within: int, v: int, w: int, blocked: int) -> list[list[int]]:
    """Simple v-w paths in G[within] whose interior avoids ``blocked``."""
    found = []
    stack = [(v, [v], 1 << v)]
    while stack:
        cur, walk, seen = stack.pop()
        for nxt in bits(g.adj[cur] & within & ~seen):
            if nxt == w:
                found.append(walk + [w])
            elif not blocked >> nxt & 1:
                stack.append((nxt, walk + [nxt], seen | 1 << nxt))
    found.sort()
    return found


def _cycles_through(g: Graph, rest: int, u: int, odd_only: bool) -> list[list[int]]:
    """Cycles u + P where P joins two neighbours of u inside ``rest`` and has no
    other neighbour of u."""
    nbrs = list(bits(g.adj[u] & rest))
    cycles = []
    for v, w in combinations(nbrs, 2):
        for path_ in _paths_between(g, rest, v, w, g.adj[u]):
            if odd_only and len(path_) % 2 == 1:
                continue  # u + odd number of path vertices is an even cycle
            cycles.append([u] + path_)
    return cycles


def _three_parts(g: Graph, cert: Certificate) -> tuple[int, int, int]:
    if cert.kind == THREE_COLOURING:
        return cert.parts
    if cert.kind == NEAR_BIPARTITION:
        indep, forest = cert.parts
        two = bipartition(induced_subgraph(g, forest))
        members = list(bits(forest))
        lift = lambda m: sum(1 << members[i] for i in bits(m))
        return indep, lift(two.parts[0]), lift(two.parts[1])
    raise PreconditionError("need a three-colouring or near-bipartition certificate")


def ifvs_replacement(g: Graph, fvs: int, cert: Certificate, r: int, check: bool = True) -> BoundedResult:
    """Move a feedback vertex set into the independent part V1, paying at most
    C(2r-2, 2) part-1 vertices for every vertex moved."""
    v1, v2, v3 = _three_parts(g, cert)
    if check:
        Certificate(THREE_COLOURING, (v1, v2, v3)).validate(g)
        if not is_forest(induced_subgraph(g, v2 | v3)):
            raise PreconditionError("V2 ∪ V3 does not induce a forest")
        _require_free(g, f"K1,{r}")
    if not is_fvs(g, fvs):
        raise PreconditionError("input set is not a feedback vertex set")
    s = fvs
    for u in bits(fvs & (v2 | v3)):
        s &= ~(1 << u)
        rest = g.full & ~s & ~(1 << u)
        add = 0
        for cyc in _cycles_through(g, rest, u, odd_only=False):
            hit = [x for x in cyc if v1 >> x & 1]
            if not hit:
                raise StructuralViolation(f"cycle {cyc} misses V1")
            add |= 1 << min(hit)
        s |= add
        if not is_fvs(g, s):
            raise StructuralViolation(f"replacing {u} did not restore a forest on {g!r}")
    factor = 2 * r * r - 5 * r + 3
    return _finish(g, s, "fvs", factor * fvs.bit_count(), "(2r^2-5r+3)*|fvs|")


def near_bipartition_parts(g: Graph, cert: Certificate) -> Certificate:
    """Split the forest side of a near-bipartition into two colour classes."""
    return Certificate(THREE_COLOURING, _three_parts(g, cert))


def ioct_replacement(g: Graph, oct_set: int, cert: Certificate, check: bool = True) -> BoundedResult:
    """Move an odd cycle transversal of a claw-free graph into one colour class."""
    parts = _three_parts(g, cert)
    if check:
        Certificate(THREE_COLOURING, parts).validate(g)
        _require_free(g, "K1,3")
    if not is_oct(g, oct_set):
        raise PreconditionError("input set is not an odd cycle transversal")
    # the class meeting the transversal most becomes V1
    order = sorted(range(3), key=lambda i: -(parts[i] & oct_set).bit_count())
    v1, v2, v3 = (parts[i] for i in order)
    s = oct_set
    for u in bits(oct_set & (v2 | v3)):
        s &= ~(1 << u)
        rest = g.full & ~s & ~(1 << u)
        add = 0
        for cyc in _cycles_through(g, rest, u, odd_only=True):
            hit = [x for x in cyc if v1 >> x & 1]
            if not hit:
                raise StructuralViolation(f"odd cycle {cyc} misses V1")
            add |= 1 << min(hit)
        s |= add
        if not is_oct(g, s):
            raise StructuralViolation(f"replacing {u} did not restore bipartiteness on {g!r}")
    return _finish(g, s, "oct", 3 * oct_set.bit_count(), "3*|oct|")


def ioct_lift(g: Graph, p: BoundParams, cert: Certificate | None = None, check: bool = True) -> BoundedResult:
    """Independent OCT for (K1,r + sP1)-free 3-colourable graphs, r <= 3."""
    r, s = p.r, p.s
    if r >= 4:
        raise UnsupportedError("no bounded inner routine is known for K1,r-free graphs with r >= 4")
    if s < 1:
        raise PreconditionError("need s >= 1")
    if cert is None:
        cert = three_colouring(g)
        if cert is None:
            raise PreconditionError(f"graph {g!r} is not 3-colourable")
    elif check:
        cert.validate(g)
    if check:
        _require_free(g, _star_plus(r, s))
    t = min_oct(g).set
    k = t.bit_count()
    f_k = 3 * k if r == 3 else k
    bound = max(k * r + r * r + 3 * r * s - 2 * r, f_k)
    formula = "max(oct*r+r^2+3rs-2r, f(oct))"
    if k <= 1:
        return _finish(g, t, "oct", bound, formula, "oct<=1")
    parts = cert.parts
    small = min(range(3), key=lambda i: parts[i].bit_count())
    if parts[small].bit_count() <= bound:
        return _finish(g, parts[small], "oct", bound, formula, "small class")
    if contains_induced(g, pattern(f"K1,{r}")) is None:
        if r == 3:
            inner = ioct_replacement(g, t, cert, check=False).set
        else:
            inner = min_ioct(g).set
        return _finish(g, inner, "oct", bound, formula, "star-free")

    def has_high_degree(i: int, j: int) -> bool:
        both = parts[i] | parts[j]
        return any((g.adj[v] & both).bit_count() >= r for v in bits(both))

    hub = None
    for i in range(3):
        j, l = (x for x in range(3) if x != i)
        if has_high_degree(i, j) and has_high_degree(i, l):
            hub = i
            break
    if hub is None:
        raise StructuralViolation(f"fewer than two class pairs contain a vertex of degree >= r on {g!r}")
    vi = parts[hub]
    vj, vl = (parts[x] for x in range(3) if x != hub)
    ex_j = sum(1 << v for v in bits(vj) if _non_neighbours(g, v, vi).bit_count() > s - 1)
    ex_l = sum(1 << v for v in bits(vl) if _non_neighbours(g, v, vi).bit_count() > s - 1)
    if ex_j.bit_count() > s - 1 or ex_l.bit_count() > s - 1:
        raise StructuralViolation("more than s-1 exceptional vertices in a colour class")
    other = vj | vl
    cover = (t & (other & ~ex_j & ~ex_l)) | ex_j | ex_l
    h = induced_subgraph(g, other)
    members = list(bits(other))
    back = {i: v for i, v in enumerate(members)}
    local_cover = sum(1 << i for i, v in back.items() if cover >> v & 1)
    if not is_vertex_cover(h, local_cover) or cover.bit_count() > k + 2 * (s - 1):
        raise StructuralViolation("exceptional sets plus transversal do not cover the other two classes")
    inner = ivc_bound_star_plus_indep(h, BoundParams(r, s), check=False)
    lifted = sum(1 << back[i] for i in bits(inner.set))
    return _finish(g, lifted, "oct", bound, formula, "cover lift")


def ioct_cograph(g: Graph, check: bool = True) -> BoundedResult:
    """Minimum odd cycle transversal of a P4-free 3-colourable graph, which is
    independent: per component either the lone class X1 or an independent
    minimum vertex cover of the rest."""
    if check:
        _require_free(g, "P4")
        if three_colouring(g) is None:
            raise PreconditionError(f"graph {g!r} is not 3-colourable")
    total = 0
    for comp in g.components():
        h = induced_subgraph(g, comp)
        if is_bipartite(h):
            continue
        members = list(bits(comp))
        x1 = None
        for part in complement(h).components():
            if h.is_independent(part) and is_bipartite(induced_subgraph(h, h.full & ~part)):
                x1 = part
                break
        if x1 is None:
            raise StructuralViolation(f"no independent co-component leaves a bipartite graph in {h!r}")
        x2 = h.full & ~x1
        rest = induced_subgraph(h, x2)
        cover = min_ivc(rest)
        if cover is None:
            raise StructuralViolation("the rest after X1 is not bipartite")
        inner = list(bits(x2))
        cover_mask = sum(1 << inner[i] for i in bits(cover.set))
        pick = x1 if x1.bit_count() <= cover_mask.bit_count() else cover_mask
        for i in bits(pick):
            total |= 1 << members[i]
    return _finish(g, total, "oct", min_oct(g).size, "oct")


__all__ = [
    "BoundParams",
    "BoundedResult",
    "DichotomyOutcome",
    "ifvs_replacement",
    "ioct_cograph",
    "ioct_lift",
    "ioct_replacement",
    "ivc_bound_star_free",
    "ivc_bound_star_plus_indep",
    "ivc_bound_subdivided_star",
    "ivc_local_improve_2p1p3",
    "degree_dichotomy",
    "near_bipartition_parts",
]
