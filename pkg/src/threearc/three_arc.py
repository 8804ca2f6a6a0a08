"""The 3-arc graph operator X(D).

Two arcs uv and xy of D are adjacent in X(D) iff v != x, y != u and u, x are
adjacent in D. For the bi-orientation of an undirected graph G this is the
classical 3-arc graph X(G), built here a second way from explicit 3-arcs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Arc, Digraph, Graph, biorient


@dataclass(frozen=True)
class ThreeArcGraph:
    graph: Graph
    arc_of_vertex: tuple[Arc, ...]
    vertex_of_arc: dict

    def vertices_of(self, arc_ids):
        return frozenset(self.vertex_of_arc[a] for a in arc_ids)

    def arcs_of(self, vertices):
        return [self.arc_of_vertex[x] for x in vertices]


def arcs_adjacent(d: Digraph, a: Arc, b: Arc) -> bool:
    if a.id == b.id:
        return False
    return a.head != b.tail and b.head != a.tail and d.adjacent(a.tail, b.tail)


def three_arc_edges(d: Digraph) -> set[tuple[int, int]]:
    edges = set()
    arcs = d.arcs
    for a in arcs:
        u, v = a.tail, a.head
        for x in d.neighbours(u):
            if x == v:
                continue
            for b_id in d.out_arcs(x):
                if arcs[b_id].head != u:
                    edges.add((a.id, b_id) if a.id < b_id else (b_id, a.id))
    return edges


def three_arc_graph(d: Digraph) -> ThreeArcGraph:
    g = Graph(d.m, three_arc_edges(d))
    return ThreeArcGraph(g, d.arcs, {a.id: a.id for a in d.arcs})


def three_arc_graph_undirected(g: Graph) -> ThreeArcGraph:
    """X(G) from 3-arcs (v, u, x, y) of G, vertices indexed as in ``biorient(g)``."""
    d = biorient(g)
    index = {(a.tail, a.head): a.id for a in d.arcs}
    edges = set()
    for u in range(g.n):
        for x in g.adj[u]:
            for v in g.adj[u]:
                if v == x:
                    continue
                for y in g.adj[x]:
                    if y == u:
                        continue
                    p, q = index[(u, v)], index[(x, y)]
                    edges.add((p, q) if p < q else (q, p))
    return ThreeArcGraph(Graph(d.m, edges), d.arcs, {a.id: a.id for a in d.arcs})


def three_arc_degree(d: Digraph, arc_id: int) -> int:
    """|{(x, y) : x in N(u) - v, xy an arc, y != u}| for the arc uv."""
    a = d.arcs[arc_id]
    return sum(1 for x in d.neighbours(a.tail) if x != a.head
               for b in d.out_arcs(x) if d.arcs[b].head != a.tail)
