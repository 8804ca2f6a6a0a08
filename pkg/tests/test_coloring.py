import pytest
from hypothesis import given, settings

from conftest import brute_chi, graphs, simple_digraphs
from threearc.coloring import (chromatic_number, clique_cutset, clique_number, critical_subgraph,
                               find_coloring, is_critical, lift_coloring, three_arc_chromatic_index)
from threearc.errors import CapExceeded, ChromaticMismatch
from threearc.graph_core import Graph, complete_graph, cycle_graph, remove_redundant, underlying_graph
from threearc.three_arc import three_arc_graph


def test_small_examples():
    assert chromatic_number(complete_graph(3)).k == 3
    assert chromatic_number(cycle_graph(5)).k == 3
    assert chromatic_number(cycle_graph(6)).k == 2
    assert chromatic_number(Graph(3)).k == 1
    assert chromatic_number(Graph(0)).k == 0


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_chi_matches_brute_force(g):
    c = chromatic_number(g)
    assert c.is_proper(g)
    assert c.k == brute_chi(g)
    assert find_coloring(g, c.k - 1) is None or c.k == 0


def test_cap():
    with pytest.raises(CapExceeded):
        chromatic_number(Graph(5), cap=4)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_critical_subgraph_invariants(g):
    k = chromatic_number(g).k
    crit = critical_subgraph(g, k)
    h = crit.graph
    assert chromatic_number(h).k == k
    assert h.min_degree() >= k - 1
    assert all(g.has_edge(x, y) for x, y in crit.original_edges())
    if k >= 3 and not h.is_complete():
        assert clique_cutset(h) is None
    assert is_critical(h, k)


def test_critical_mismatch():
    with pytest.raises(ChromaticMismatch):
        critical_subgraph(complete_graph(3), 4)


def test_clique_cutset_found():
    # two triangles sharing vertex 2
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    cut = clique_cutset(g)
    assert cut is not None and 2 in cut
    assert all(g.has_edge(x, y) for x in cut for y in cut if x < y)
    assert clique_cutset(cycle_graph(5)) is None
    assert clique_number(g) == 3


@settings(max_examples=100, deadline=None)
@given(simple_digraphs(max_n=6))
def test_claim1_lift(d):
    reduced, _ = remove_redundant(d)
    c = chromatic_number(underlying_graph(reduced))
    lifted = lift_coloring(d, reduced, c)
    x = three_arc_graph(d).graph
    assert lifted.is_proper(x)
    assert three_arc_chromatic_index(d) <= c.k
