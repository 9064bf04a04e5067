import pytest

from indtrans.constructive import (
    BoundParams,
    ifvs_replacement,
    ioct_cograph,
    ioct_lift,
    ioct_replacement,
    ivc_bound_star_free,
    ivc_bound_star_plus_indep,
    ivc_bound_subdivided_star,
    ivc_local_improve_2p1p3,
    degree_dichotomy,
    near_bipartition_parts,
)
from indtrans.errors import PreconditionError, StructuralViolation, UnsupportedError
from indtrans.gadgets import double_star
from indtrans.graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
    union_all,
)
from indtrans.harness.enumeration import enumerate_upto
from indtrans.patterns import pattern
from indtrans.recognition import (
    Certificate,
    bipartition,
    contains_induced,
    near_bipartition,
    three_colouring,
)
from indtrans.solvers import is_fvs, is_oct, is_vertex_cover, min_fvs, min_ioct, min_ivc, min_oct, min_vc


def _matching(k):
    return Graph.from_edges(2 * k, [(i, k + i) for i in range(k)])


# ---------------------------------------------------------------- degree dichotomy


def test_dichotomy_low_degree():
    g = _matching(8)
    out = degree_dichotomy(g, bipartition(g), BoundParams(2, 2))
    assert out.branch == "low-degree"
    assert out.exceptional_x == out.exceptional_y == 0


def test_dichotomy_few_exceptions():
    k88 = complete_bipartite(8, 8)
    g = Graph.from_edges(16, [(u, v) for u, v in k88.edges() if v - u != 8])
    out = degree_dichotomy(g, bipartition(g), BoundParams(2, 2))
    assert out.branch == "few-exceptions"
    assert out.exceptional_x == out.exceptional_y == 0


def test_dichotomy_small_side():
    g = path(12)
    with pytest.raises(PreconditionError, match="rs\\+r-1"):
        degree_dichotomy(g, bipartition(g), BoundParams(3, 2))


def test_dichotomy_pattern_present():
    g = disjoint_union(star(3), empty(8))
    g = disjoint_union(g, _matching(4))
    with pytest.raises(PreconditionError):
        degree_dichotomy(g, bipartition(g), BoundParams(1, 1))


# ---------------------------------------------------------------- K1,r + sP1


def test_star_plus_indep_examples():
    res = ivc_bound_star_plus_indep(cycle(6), BoundParams(3, 1))
    assert res.size == 3 and res.claimed_bound == 12
    res = ivc_bound_star_plus_indep(double_star(2, 2), BoundParams(3, 2))
    assert res.size == 3 and res.claimed_bound == 12
    with pytest.raises(PreconditionError):
        ivc_bound_star_plus_indep(cycle(5), BoundParams(3, 1))
    with pytest.raises(PreconditionError):
        ivc_bound_star_plus_indep(disjoint_union(star(3), empty(1)), BoundParams(3, 1))


def test_star_plus_indep_with_isolated_vertices():
    # max degree 1 < r, so any number of isolated vertices keeps the graph free
    g = disjoint_union(_matching(2), empty(20))
    res = ivc_bound_star_plus_indep(g, BoundParams(2, 1))
    assert res.claimed_bound == 2 * 2 + 2
    assert res.size == 2 == min_ivc(g).size


# ---------------------------------------------------------------- subdivided star


def test_subdivided_star_examples():
    res = ivc_bound_subdivided_star(cycle(8), 3)
    assert res.size == 4 and res.claimed_bound == 2 * 16
    res = ivc_bound_subdivided_star(complete_bipartite(3, 3), 3)
    assert res.size == 3 and res.claimed_bound == 18
    with pytest.raises(PreconditionError):
        ivc_bound_subdivided_star(pattern("K1,3^+"), 3)


# ---------------------------------------------------------------- star-free


def test_star_free_examples():
    res = ivc_bound_star_free(double_star(2, 2), 4)
    assert res.size == 3 == res.claimed_bound
    res = ivc_bound_star_free(cycle(8), 4)
    assert res.size == 4 == min_vc(cycle(8)).size
    with pytest.raises(PreconditionError):
        ivc_bound_star_free(star(4), 4)


def test_star_free_tight_at_double_stars():
    for r in (4, 5, 6):
        g = double_star(r - 2, r - 2)
        res = ivc_bound_star_free(g, r)
        assert res.size == r - 1 == min_ivc(g).size


# ---------------------------------------------------------------- 2P1+P3 swaps


def test_local_improve_examples():
    c6 = cycle(6)
    assert ivc_local_improve_2p1p3(c6, 0b010101) == 0b010101
    p4 = path(4)
    out = ivc_local_improve_2p1p3(p4, 0b0110)
    assert out.bit_count() == 2 and is_vertex_cover(p4, out) and p4.is_independent(out)
    assert out == 0b0101 or out == 0b1010


def test_local_improve_on_non_independent_cover():
    # D_{1,2}: the centres form the only minimum cover; swapping reaches {leaf, centre}
    g = double_star(1, 2)
    out = ivc_local_improve_2p1p3(g, 0b11000)
    assert out == 0b10001


def test_local_improve_rejects_non_minimum_cover():
    with pytest.raises(PreconditionError):
        ivc_local_improve_2p1p3(path(4), 0b1110)


def test_local_improve_every_small_graph():
    for g in enumerate_upto(7, "bipartite"):
        if contains_induced(g, pattern("2P1+P3")) is not None:
            continue
        cover = min_vc(g)
        out = ivc_local_improve_2p1p3(g, cover.set)
        assert out.bit_count() == cover.size
        assert is_vertex_cover(g, out) and g.is_independent(out)


# ---------------------------------------------------------------- ifvs replacement


def test_ifvs_replacement_c5():
    g = cycle(5)
    cert = near_bipartition(g)
    parts = near_bipartition_parts(g, cert).parts
    v2 = next(v for v in range(5) if parts[1] >> v & 1)
    res = ifvs_replacement(g, 1 << v2, cert, 3)
    assert res.size == 1 and res.set & ~parts[0] == 0
    assert res.claimed_bound == 6


def test_ifvs_replacement_forest():
    g = path(6)
    res = ifvs_replacement(g, 0, near_bipartition(g), 3)
    assert res.set == 0


def test_ifvs_replacement_stays_in_v1():
    for g in enumerate_upto(7, "near-bipartite"):
        if contains_induced(g, pattern("K1,3")) is not None:
            continue
        cert = near_bipartition(g)
        v1 = near_bipartition_parts(g, cert).parts[0]
        res = ifvs_replacement(g, min_fvs(g).set, cert, 3)
        assert res.set & ~v1 == 0
        assert is_fvs(g, res.set) and g.is_independent(res.set)


# ---------------------------------------------------------------- ioct replacement


def test_ioct_replacement_examples():
    k3 = complete(3)
    cert = Certificate("three-colouring", (0b001, 0b010, 0b100))
    res = ioct_replacement(k3, 0b010, cert)
    # classes are reordered so the first one holds the transversal; the
    # result is a single vertex, bounded by 3
    assert res.size == 1 and res.claimed_bound == 3
    c5 = cycle(5)
    cert = three_colouring(c5)
    res = ioct_replacement(c5, 1 << 1, cert)
    assert res.size <= 3 and is_oct(c5, res.set)
    c6 = cycle(6)
    assert ioct_replacement(c6, 0, three_colouring(c6)).set == 0


def test_ioct_replacement_rejects_claw():
    g = star(3)
    with pytest.raises(PreconditionError):
        ioct_replacement(g, 0, three_colouring(g))


# ---------------------------------------------------------------- ioct lift


def test_ioct_lift_colour_class():
    g = complete_multipartite(3, 3, 3)
    res = ioct_lift(g, BoundParams(3, 1))
    assert res.branch == "small class"
    assert res.size == 3 == min_oct(g).size


def test_ioct_lift_delegates_when_claw_free():
    g = disjoint_union(cycle(31), cycle(33))
    cols = []
    for m in (31, 33):
        cs = [i % 3 for i in range(m)]
        if m % 3:
            cs[-1] = 1 if cs[0] != 1 and cs[-2] != 1 else 2
        cols += cs
    parts = tuple(sum(1 << v for v in range(64) if cols[v] == k) for k in range(3))
    res = ioct_lift(g, BoundParams(3, 1), Certificate("three-colouring", parts))
    assert res.branch == "star-free"
    assert res.size == 2 and res.claimed_bound == 18


def test_ioct_lift_cover_lift_branch():
    # independent 11-set joined to 2K2 + 18K1: (P3+P1)-free, oct = 2
    a, h = empty(11), union_all([complete(2), complete(2), empty(18)])
    g = complement(disjoint_union(complement(a), complement(h)))
    left = (1 << 11) - 1
    p1 = (1 << 11) | (1 << 13) | sum(1 << v for v in range(15, 24))
    cert = Certificate("three-colouring", (left, p1, g.full & ~left & ~p1))
    res = ioct_lift(g, BoundParams(2, 1), cert)
    assert res.branch == "cover lift"
    assert res.size == 2 == min_ioct(g).size
    assert res.claimed_bound == 10


def test_ioct_lift_unsupported_r():
    with pytest.raises(UnsupportedError):
        ioct_lift(cycle(5), BoundParams(4, 1))


# ---------------------------------------------------------------- cographs


def test_ioct_cograph_examples():
    assert ioct_cograph(complete(3)).size == 1
    g = complete_multipartite(1, 2, 2)
    res = ioct_cograph(g)
    assert res.size == 1 and res.set == 0b1
    assert ioct_cograph(cycle(4)).set == 0
    with pytest.raises(PreconditionError):
        ioct_cograph(path(4))


def test_bounded_results_recheck():
    # a result that breaks its bound must never be returned silently
    from indtrans.constructive import _finish

    with pytest.raises(StructuralViolation):
        _finish(path(3), 0b111, "vc", 3, "vc")  # not independent
    with pytest.raises(StructuralViolation):
        _finish(path(3), 0b001, "vc", 3, "vc")  # not a cover
    with pytest.raises(StructuralViolation):
        _finish(path(3), 0b101, "vc", 1, "vc")  # over the bound
