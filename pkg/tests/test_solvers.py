import random

import pytest

from indtrans.gadgets import GadgetSpec, build, double_star, fig_fvs1
from indtrans.graph import Graph, complete, cycle, empty, path
from indtrans.harness.enumeration import enumerate_upto
from indtrans.solvers import (
    MEASURES,
    SOLVERS,
    is_fvs,
    is_oct,
    is_vertex_cover,
    measure,
    min_fvs,
    min_ifvs,
    min_ioct,
    min_ivc,
    min_oct,
    min_vc,
)

from oracles import brute_min, edge_list, random_edges


def test_vc_examples():
    d22 = double_star(2, 2)
    sol = min_vc(d22)
    assert sol.size == 2 and sol.vertices() == [4, 5]  # the two centres
    assert min_vc(cycle(5)).size == 3
    assert min_vc(empty(6)).size == 0


def test_ivc_examples():
    assert min_ivc(double_star(2, 2)).size == 3
    assert min_ivc(build(GadgetSpec("D", s=3, r=1))).size == 4
    assert min_ivc(cycle(5)) is None


def test_fvs_examples():
    assert min_fvs(build(GadgetSpec("S", s=2, r=2))).size == 2
    assert min_fvs(build(GadgetSpec("T", s=4))).size == 3
    assert min_fvs(path(6)).size == 0
    assert min_ifvs(fig_fvs1()).size == 3
    assert min_ifvs(build(GadgetSpec("S", s=2, r=2))).size == 3
    assert min_ifvs(path(6)).size == 0
    assert min_ifvs(complete(4)) is None


def test_oct_examples():
    assert min_oct(build(GadgetSpec("Q", s=3))).size == 2
    assert min_oct(build(GadgetSpec("Y", s=1))).size == 2
    assert min_oct(path(5)).size == 0
    assert min_ioct(build(GadgetSpec("Y", s=1))).size == 4
    assert min_ioct(build(GadgetSpec("Q", s=3))).size == 3
    assert min_ioct(complete(3)).size == 1
    assert min_ioct(complete(4)) is None


def test_measure_and_table():
    g = cycle(5)
    assert [measure(g, m) for m in MEASURES] == [3, None, 1, 1, 1, 1]
    assert set(SOLVERS) == set(MEASURES)
    with pytest.raises(KeyError):
        measure(g, "tw")


def _check_against_oracle(g):
    edges = edge_list(g)
    for m in MEASURES:
        want = brute_min(g.n, edges, m)
        sol = SOLVERS[m](g)
        if want is None:
            assert sol is None, (m, g)
        else:
            # same size and the same lexicographic tie-break
            assert sol is not None, (m, g)
            assert tuple(sol.vertices()) == want, (m, g)
            assert sol.size == len(want)
            assert sol.independent == g.is_independent(sol.set)
            assert sol.independent or not m.startswith("i")


def test_solvers_match_brute_force_on_all_graphs_up_to_6():
    for g in enumerate_upto(6):
        _check_against_oracle(g)


@pytest.mark.parametrize("seed", range(4))
def test_solvers_match_brute_force_random_labelled(seed):
    rng = random.Random(seed)
    for _ in range(40):
        n = rng.randint(1, 9)
        _check_against_oracle(Graph.from_edges(n, random_edges(rng, n, rng.choice((0.15, 0.3, 0.45)))))


def test_solutions_are_valid_on_gadgets():
    for spec in (GadgetSpec("T", s=5), GadgetSpec("Z", s=3), GadgetSpec("Y", s=2), GadgetSpec("S", s=3, r=2)):
        g = build(spec)
        vc, fvs, oct_ = min_vc(g), min_fvs(g), min_oct(g)
        assert is_vertex_cover(g, vc.set)
        assert is_fvs(g, fvs.set)
        assert is_oct(g, oct_.set)
        assert oct_.size <= fvs.size <= vc.size
        io = min_ioct(g)
        if io is not None:
            assert is_oct(g, io.set) and g.is_independent(io.set)


def test_measure_chain_on_random_graphs():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 10)
        g = Graph.from_edges(n, random_edges(rng, n, 0.3))
        vals = {m: measure(g, m) for m in MEASURES}
        assert vals["oct"] <= vals["fvs"] <= vals["vc"]
        for base in ("vc", "fvs", "oct"):
            if vals["i" + base] is not None:
                assert vals["i" + base] >= vals[base]
        # independent sets that are covers/fvs/oct nest the same way
        if vals["ivc"] is not None:
            assert vals["ifvs"] is not None and vals["ioct"] is not None
