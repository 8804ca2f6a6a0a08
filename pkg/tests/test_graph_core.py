import pytest
from hypothesis import given

from conftest import multi_digraphs, simple_digraphs
from threearc.errors import LoopArc
from threearc.graph_core import (Digraph, Graph, biorient, build_digraph, collapse_parallel,
                                 complete_graph, remove_redundant, underlying_graph)


def test_smallest_digraph():
    d = build_digraph(2, [(0, 1)])
    assert d.out_degree(0) == 1 and d.in_degree(1) == 1
    assert d.sinks() == [1]


def test_parallel_arcs_kept():
    d = build_digraph(3, [(0, 1), (0, 1)])
    assert len(d.pair_arcs(0, 1)) == 2
    assert not d.is_simple()


def test_loop_rejected():
    with pytest.raises(LoopArc):
        build_digraph(2, [(0, 0)])


def test_biorient_k3():
    d = biorient(complete_graph(3))
    assert d.m == 6
    assert all(d.out_degree(x) == d.in_degree(x) == 2 for x in range(3))
    assert biorient(Graph(2, [(0, 1)])).arc_pairs() == [(0, 1), (1, 0)]


@given(multi_digraphs())
def test_indices_partition_arcs(d):
    out = sorted(a for x in range(d.n) for a in d.out_arcs(x))
    pairs = sorted(a for ids in d.pair_index.values() for a in ids)
    assert out == pairs == list(range(d.m))
    assert all(d.out_degree(x) == sum(1 for a in d.arcs if a.tail == x) for x in range(d.n))


@given(multi_digraphs())
def test_collapse_keeps_lowest_id(d):
    c, mapping = collapse_parallel(d)
    assert c.is_simple()
    assert set(c.arc_pairs()) == set(d.arc_pairs())
    for a in d.arcs:
        rep = c.arcs[mapping[a.id]]
        assert (rep.tail, rep.head) == (a.tail, a.head)
        assert c.origin[mapping[a.id]] == min(b.id for b in d.arcs if (b.tail, b.head) == (a.tail, a.head))


def _redundant_oracle(d, a):
    u, v = a.tail, a.head
    between = {b.id for b in d.arcs if {b.tail, b.head} == {u, v}}
    return ({b.id for b in d.arcs if b.tail == u} <= between
            or {b.id for b in d.arcs if b.tail == v} <= between)


@given(simple_digraphs())
def test_remove_redundant_single_pass(d):
    reduced, removed = remove_redundant(d)
    assert removed == {a.id for a in d.arcs if _redundant_oracle(d, a)}
    assert [reduced.root_id(a.id) for a in reduced.arcs] == [a.id for a in d.arcs if a.id not in removed]
    # uv redundant implies vu redundant
    for a in removed:
        back = d.arc_id(d.arcs[a].head, d.arcs[a].tail)
        assert back is None or back in removed


def test_redundant_not_iterated():
    # 02 and 12 are redundant (2 is a sink); 01 only becomes redundant after they go
    d = Digraph(3, [(0, 1), (0, 2), (1, 2)])
    reduced, removed = remove_redundant(d)
    assert removed == {1, 2}
    assert reduced.arc_pairs() == [(0, 1)]


@given(simple_digraphs())
def test_underlying_graph(d):
    g = underlying_graph(d)
    assert g.edges == {tuple(sorted((a.tail, a.head))) for a in d.arcs}
