"""Digraphs with parallel arcs, simple undirected graphs, and the reductions
used before colouring: parallel-arc collapse and redundant-arc removal.

Vertices are dense 0-based integers. Arc ids are dense and follow the order in
which arcs were given, so certificates can refer to arcs by id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LoopArc


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    id: int

    def __iter__(self):
        yield self.tail
        yield self.head


def _pair(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


class Digraph:
    """Loopless digraph, parallel arcs allowed.

    ``origin`` optionally maps each arc id to the id of the arc it was copied
    from in an ancestor digraph (see :meth:`arc_subset`).
    """

    __slots__ = ("n", "arcs", "out_index", "in_index", "pair_index", "origin", "_by_ends")

    def __init__(self, n: int, arc_list: Iterable[tuple[int, int]], origin: Sequence[int] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = []
        out_index: list[list[int]] = [[] for _ in range(n)]
        in_index: list[list[int]] = [[] for _ in range(n)]
        pair_index: dict[tuple[int, int], list[int]] = {}
        by_ends: dict[tuple[int, int], int] = {}
        for i, (x, y) in enumerate(arc_list):
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"arc ({x}, {y}) has an endpoint outside 0..{n - 1}")
            if x == y:
                raise LoopArc(f"arc {i} is a loop at vertex {x}")
            arcs.append(Arc(x, y, i))
            out_index[x].append(i)
            in_index[y].append(i)
            pair_index.setdefault(_pair(x, y), []).append(i)
            by_ends.setdefault((x, y), i)
        self.n = n
        self.arcs = tuple(arcs)
        self.out_index = tuple(tuple(a) for a in out_index)
        self.in_index = tuple(tuple(a) for a in in_index)
        self.pair_index = {p: tuple(ids) for p, ids in pair_index.items()}
        self._by_ends = by_ends
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != len(arcs):
                raise ValueError("origin must map every arc")
        self.origin = origin

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.arcs)

    def arc_pairs(self) -> list[tuple[int, int]]:
        return [(a.tail, a.head) for a in self.arcs]

    def out_arcs(self, x: int) -> tuple[int, ...]:
        """A_D(x): ids of arcs leaving x."""
        return self.out_index[x]

    def in_arcs(self, x: int) -> tuple[int, ...]:
        return self.in_index[x]

    def pair_arcs(self, x: int, y: int) -> tuple[int, ...]:
        """A_D{x,y}: ids of arcs between x and y in either direction."""
        return self.pair_index.get(_pair(x, y), ())

    def arc_id(self, tail: int, head: int) -> int | None:
        """Lowest id of an arc from ``tail`` to ``head``, or None."""
        return self._by_ends.get((tail, head))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._by_ends

    def adjacent(self, x: int, y: int) -> bool:
        return x != y and _pair(x, y) in self.pair_index

    def out_degree(self, x: int) -> int:
        return len(self.out_index[x])

    def in_degree(self, x: int) -> int:
        return len(self.in_index[x])

    def degree(self, x: int) -> int:
        return len(self.out_index[x]) + len(self.in_index[x])

    def out_neighbours(self, x: int) -> list[int]:
        return sorted({self.arcs[a].head for a in self.out_index[x]})

    def in_neighbours(self, x: int) -> list[int]:
        return sorted({self.arcs[a].tail for a in self.in_index[x]})

    def neighbours(self, x: int) -> list[int]:
        return sorted({self.arcs[a].head for a in self.out_index[x]}
                      | {self.arcs[a].tail for a in self.in_index[x]})

    def sinks(self) -> list[int]:
        return [x for x in range(self.n) if not self.out_index[x]]

    def is_simple(self) -> bool:
        """At most one arc in each direction between any two vertices."""
        return len(self._by_ends) == len(self.arcs)

    def is_tournament(self) -> bool:
        if not self.is_simple():
            return False
        n = self.n
        if len(self.pair_index) != n * (n - 1) // 2:
            return False
        return all(len(ids) == 1 for ids in self.pair_index.values())

    def arc_subset(self, ids: Iterable[int]) -> "Digraph":
        """Digraph on the same vertices keeping only ``ids``, in id order.

        The result's ``origin`` maps back to the root ancestor's arc ids.
        """
        keep = sorted(set(ids))
        root = self.origin
        origin = [root[i] if root is not None else i for i in keep]
        return Digraph(self.n, [(self.arcs[i].tail, self.arcs[i].head) for i in keep], origin)

    def root_id(self, arc_id: int) -> int:
        return self.origin[arc_id] if self.origin is not None else arc_id

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_pairs()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arc_pairs() == other.arc_pairs()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.arc_pairs())))


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        adj: list[set[int]] = [set() for _ in range(n)]
        es = set()
        for x, y in edges:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"edge ({x}, {y}) has an endpoint outside 0..{n - 1}")
            if x == y:
                raise LoopArc(f"loop at vertex {x}")
            es.add(_pair(x, y))
            adj[x].add(y)
            adj[y].add(x)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, x: int, y: int) -> bool:
        return _pair(x, y) in self.edges

    def masks(self) -> list[int]:
        """Adjacency as integer bitmasks."""
        out = []
        for a in self.adj:
            m = 0
            for y in a:
                m |= 1 << y
            out.append(m)
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to 0..len-1, plus the label map."""
        vs = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[x], index[y]) for x, y in self.edges if x in index and y in index]
        return Graph(len(vs), edges), vs

    def without_edge(self, x: int, y: int) -> "Graph":
        e = _pair(x, y)
        return Graph(self.n, (f for f in self.edges if f != e))

    def components(self, within: Iterable[int] | None = None) -> list[list[int]]:
        allowed = set(range(self.n)) if within is None else set(within)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def build_digraph(n: int, arc_list: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(n, arc_list)


def biorient(g: Graph) -> Digraph:
    """Replace every edge {x, y} by the arcs xy and yx (in sorted edge order)."""
    arcs = []
    for x, y in g.sorted_edges():
        arcs.append((x, y))
        arcs.append((y, x))
    return Digraph(g.n, arcs)


def collapse_parallel(d: Digraph) -> tuple[Digraph, dict[int, int]]:
    """Keep the lowest-id arc for each ordered pair.

    Returns the simple digraph (whose ``origin`` gives the kept input ids) and
    a map from every input arc id to the id of its surviving representative.
    """
    rep: dict[tuple[int, int], int] = {}
    keep = []
    for a in d.arcs:
        if (a.tail, a.head) not in rep:
            rep[(a.tail, a.head)] = len(keep)
            keep.append(a.id)
    collapsed = d.arc_subset(keep)
    mapping = {a.id: rep[(a.tail, a.head)] for a in d.arcs}
    return collapsed, mapping


def is_redundant(d: Digraph, arc_id: int) -> bool:
    """uv is redundant if A(u) or A(v) lies inside A{u,v}."""
    a = d.arcs[arc_id]
    between = set(d.pair_arcs(a.tail, a.head))
    return set(d.out_arcs(a.tail)) <= between or set(d.out_arcs(a.head)) <= between


def remove_redundant(d: Digraph) -> tuple[Digraph, frozenset[int]]:
    """Delete every arc that is redundant in ``d``, all in one pass."""
    removed = frozenset(a.id for a in d.arcs if is_redundant(d, a.id))
    kept = [a.id for a in d.arcs if a.id not in removed]
    return d.arc_subset(kept), removed


def underlying_graph(d: Digraph) -> Graph:
    return Graph(d.n, d.pair_index.keys())


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
