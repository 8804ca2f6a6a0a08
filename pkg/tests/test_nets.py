import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from threearc.errors import CaseNotCovered, ImproperInput, NotTournament, TooSmall
from threearc.graph_core import Digraph
from threearc.harness import random_net_instance, random_tournament
from threearc.minors import verify_certificate
from threearc.nets import NetSpec, build_net, classify_arcs, tournament_minor
from threearc.three_arc import three_arc_graph


def _star(p, extra=()):
    """v = 0 with arcs 0 -> 1..p (ids 0..p-1), then ``extra``."""
    return Digraph(p + 1 + 3, [(0, h) for h in range(1, p + 1)] + list(extra))


def test_case1_trivial():
    d = _star(1)
    net = build_net(NetSpec(0, [0]), d)
    assert net.case == 1 and net.branch_arc_sets == (frozenset({0}),)


def test_case3_sets():
    # v_j v_j' arcs: 1->2 (id 3), 2->3 (id 4), 3->1 (id 5)
    d = _star(3, [(1, 2), (2, 3), (3, 1)])
    net = build_net(NetSpec(0, [0, 1, 2], [3, 4, 5]), d)
    assert net.case == 3
    assert net.branch_arc_sets == (frozenset({0, 4}), frozenset({1, 5}), frozenset({2, 3}))
    assert verify_certificate(three_arc_graph(d).graph, net.to_minor_certificate())


def test_case_dispatch_table():
    assert NetSpec(0, [1]).case() == 1
    assert NetSpec(0, [1, 2], [], [3]).case() == 2
    assert NetSpec(0, [1, 2], [3, 4], []).case() is None
    assert NetSpec(0, [1, 2, 3], [4, 5, 6], []).case() == 3
    assert NetSpec(0, [1, 2, 3], [4], [5]).case() == 4
    assert NetSpec(0, [1, 2, 3], [], [5, 6]).case() == 5
    assert NetSpec(0, [1, 2, 3], [4, 5], []).case() is None
    assert NetSpec(0, [1, 2, 3, 4], [5], [6, 7]).case() == 6
    assert NetSpec(0, [1, 2, 3, 4], [5], [6]).case() is None


def test_case_not_covered():
    d = _star(2)
    with pytest.raises(CaseNotCovered):
        build_net(NetSpec(0, [0, 1]), d)


def test_validate_rejects_bad_specs():
    d = _star(2, [(1, 2), (4, 0)])
    with pytest.raises(ImproperInput):
        build_net(NetSpec(0, [0, 2]), d)          # 1->2 does not leave v
    with pytest.raises(ImproperInput):
        build_net(NetSpec(0, [0, 1], [], [2]), d)  # 1->2: tail is a head of A
    with pytest.raises(ImproperInput):
        build_net(NetSpec(0, [0, 1], [3]), d)      # 4->0 points back at v


def test_classify_matches_definitions():
    rng = random.Random(5)
    for _ in range(50):
        d, spec = random_net_instance(rng, rng.randint(1, 6))
        feas, comp = classify_arcs(d, spec.v, spec.A)
        heads = {d.arcs[a].head for a in spec.A}
        for a in d.arcs:
            f = a.tail in heads and a.head != spec.v
            c = a.tail not in heads and a.head != spec.v and d.adjacent(spec.v, a.tail)
            assert (a.id in feas) == f and (a.id in comp) == c
        assert set(spec.A_f) <= feas and set(spec.A_c) <= comp


@settings(max_examples=300)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_random_nets_verify(case, seed):
    d, spec = random_net_instance(random.Random(seed), case)
    net = build_net(spec, d)
    assert net.case == case
    assert len(net.branch_arc_sets) == spec.p
    assert all(len(s & set(spec.A)) == 1 for s in net.branch_arc_sets)
    assert verify_certificate(three_arc_graph(d).graph, net.to_minor_certificate())
    assert net.lines()[0] == f"{spec.v} {spec.p} {len(spec.A_f)} {len(spec.A_c)}"


def test_cyclic_tournament_5():
    d = Digraph(5, [(i, (i + s) % 5) for i in range(5) for s in (1, 2)])
    cert = tournament_minor(d)
    assert cert.p == 5 and verify_certificate(three_arc_graph(d).graph, cert)


def test_tournament_errors():
    with pytest.raises(TooSmall):
        tournament_minor(random_tournament(random.Random(0), 4))
    with pytest.raises(NotTournament):
        tournament_minor(Digraph(5, [(0, 1)]))


def test_all_5_tournaments():
    pairs = list(itertools.combinations(range(5), 2))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        d = Digraph(5, [(x, y) if b else (y, x) for (x, y), b in zip(pairs, bits)])
        cert = tournament_minor(d)
        assert cert.p == 5 and verify_certificate(three_arc_graph(d).graph, cert)
