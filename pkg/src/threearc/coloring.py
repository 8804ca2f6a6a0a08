"""Exact vertex colouring, k-critical subgraphs, and the colouring lift from
the reduced underlying graph to X(D).

The exact search is a DSATUR-ordered backtracking over bitmask adjacency,
asked successively for k = (clique lower bound), ..., (greedy upper bound) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import get_cap
from .errors import CapExceeded, ChromaticMismatch, ConstructionFailed, ImproperInput
from .graph_core import Digraph, Graph, underlying_graph
from .three_arc import three_arc_graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return 1 + max(self.colors) if self.colors else 0

    def is_proper(self, g: Graph) -> bool:
        return is_proper_coloring(g, self.colors)

    def lines(self) -> list[str]:
        return [f"{v} {c}" for v, c in enumerate(self.colors)]


@dataclass(frozen=True)
class CriticalSubgraph:
    vertices: tuple[int, ...]
    graph: Graph
    k: int

    def original_edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return sorted((vs[x], vs[y]) for x, y in self.graph.edges)


def is_proper_coloring(g: Graph, colors) -> bool:
    if len(colors) != g.n or any(c is None or c < 0 for c in colors):
        return False
    return all(colors[x] != colors[y] for x, y in g.edges)


def _greedy_clique(masks: list[int]) -> list[int]:
    n = len(masks)
    best: list[int] = []
    order = sorted(range(n), key=lambda v: -bin(masks[v]).count("1"))
    for start in order:
        clique = [start]
        cand = masks[start]
        while cand:
            # pick the candidate with most neighbours among remaining candidates
            best_v, best_c = -1, -1
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                c ^= low
                cnt = bin(masks[v] & cand).count("1")
                if cnt > best_c:
                    best_v, best_c = v, cnt
            clique.append(best_v)
            cand &= masks[best_v]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur_greedy(masks: list[int]) -> list[int]:
    n = len(masks)
    colors = [-1] * n
    sat = [0] * n
    deg = [bin(m).count("1") for m in masks]
    for _ in range(n):
        v = max((x for x in range(n) if colors[x] < 0),
                key=lambda x: (bin(sat[x]).count("1"), deg[x], -x))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        nb = masks[v]
        while nb:
            low = nb & -nb
            sat[low.bit_length() - 1] |= 1 << c
            nb ^= low
    return colors


def _k_coloring(masks: list[int], k: int, seed: list[int] | None = None) -> list[int] | None:
    """A proper colouring with at most k colours, or None."""
    n = len(masks)
    if n == 0:
        return []
    if k <= 0:
        return None
    full = (1 << k) - 1
    colors = [-1] * n
    sat = [0] * n
    deg = [bin(m).count("1") for m in masks]
    uncolored = set(range(n))

    def assign(v, c):
        colors[v] = c
        uncolored.discard(v)
        bit = 1 << c
        changed = []
        nb = masks[v]
        while nb:
            low = nb & -nb
            w = low.bit_length() - 1
            nb ^= low
            if colors[w] < 0 and not sat[w] & bit:
                sat[w] |= bit
                changed.append(w)
        return changed

    def unassign(v, changed, c):
        colors[v] = -1
        uncolored.add(v)
        mask = ~(1 << c)
        for w in changed:
            sat[w] &= mask

    used = 0
    # colour a seed clique first; it fixes colour symmetry
    for i, v in enumerate(seed or []):
        if i >= k:
            return None
        assign(v, i)
        used = i + 1

    def rec(used: int) -> bool:
        if not uncolored:
            return True
        v = max(uncolored, key=lambda x: (bin(sat[x]).count("1"), deg[x], -x))
        s = sat[v]
        if s & full == full:
            return False
        for c in range(min(k, used + 1)):
            if s >> c & 1:
                continue
            changed = assign(v, c)
            ok = all(sat[w] & full != full for w in changed)
            if ok and rec(max(used, c + 1)):
                return True
            unassign(v, changed, c)
        return False

    return list(colors) if rec(used) else None


def find_coloring(g: Graph, k: int) -> Coloring | None:
    """A proper colouring of ``g`` with at most ``k`` colours, if one exists."""
    masks = g.masks()
    colors = _k_coloring(masks, k, _greedy_clique(masks) if g.n else None)
    return None if colors is None else Coloring(tuple(colors))


def chromatic_number(g: Graph, cap: int | None = None) -> Coloring:
    """An optimal proper colouring of ``g``."""
    cap = get_cap("chi") if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds the exact colouring cap {cap}")
    if g.n == 0:
        return Coloring(())
    masks = g.masks()
    clique = _greedy_clique(masks)
    upper = _dsatur_greedy(masks)
    ub = 1 + max(upper)
    for k in range(len(clique), ub):
        colors = _k_coloring(masks, k, clique)
        if colors is not None:
            return Coloring(tuple(colors))
    return Coloring(tuple(upper))


def three_arc_chromatic_index(d: Digraph, cap: int | None = None) -> int:
    return chromatic_number(three_arc_graph(d).graph, cap).k


# -- critical subgraphs ----------------------------------------------------

def _colorable(n: int, edges, k: int) -> bool:
    masks = [0] * n
    for x, y in edges:
        masks[x] |= 1 << y
        masks[y] |= 1 << x
    return _k_coloring(masks, k) is not None


def critical_subgraph(g: Graph, k: int) -> CriticalSubgraph:
    """A k-critical subgraph, found by greedy vertex then edge deletion."""
    chi = chromatic_number(g).k
    if chi != k:
        raise ChromaticMismatch(f"chromatic number is {chi}, not {k}")
    vertices = list(range(g.n))
    edges = set(g.edges)

    def still_k(vs, es) -> bool:
        index = {v: i for i, v in enumerate(vs)}
        rel = [(index[x], index[y]) for x, y in es]
        return not _colorable(len(vs), rel, k - 1)

    changed = True
    while changed:
        changed = False
        for v in list(vertices):
            vs = [x for x in vertices if x != v]
            es = {e for e in edges if v not in e}
            if still_k(vs, es):
                vertices, edges = vs, es
                changed = True
        for e in sorted(edges):
            es = edges - {e}
            if still_k(vertices, es):
                edges = es
                changed = True
    index = {v: i for i, v in enumerate(vertices)}
    h = Graph(len(vertices), [(index[x], index[y]) for x, y in edges])
    result = CriticalSubgraph(tuple(vertices), h, k)
    if k >= 2 and h.min_degree() < k - 1:
        raise ConstructionFailed("critical subgraph violates the minimum-degree bound")
    if k >= 3 and not h.is_complete() and h.n <= 24 and clique_cutset(h) is not None:
        raise ConstructionFailed("critical subgraph has a clique vertex-cut")
    return result


def _cliques(g: Graph):
    """All non-empty cliques, each as a sorted tuple."""
    masks = g.masks()

    def grow(clique, cand):
        yield clique
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from grow(clique + (v,), cand & masks[v])

    for v in range(g.n):
        yield from grow((v,), masks[v] & ~((1 << (v + 1)) - 1))


def clique_cutset(g: Graph) -> tuple[int, ...] | None:
    """A clique whose removal disconnects ``g``, or None."""
    whole = len(g.components())
    for clique in _cliques(g):
        rest = set(range(g.n)) - set(clique)
        if rest and len(g.components(rest)) > whole:
            return clique
    return None


def is_critical(g: Graph, k: int) -> bool:
    """Brute-force check: chi = k and every single edge/vertex deletion drops chi."""
    if chromatic_number(g).k != k:
        return False
    for e in g.edges:
        if not _colorable(g.n, g.edges - {e}, k - 1):
            return False
    for v in range(g.n):
        if g.degree(v) == 0 and g.n > 1:
            return False
    return True


def lift_coloring(d: Digraph, d_prime: Digraph, c: Coloring) -> Coloring:
    """Colour each arc of ``d`` by the colour of its tail in the reduced graph."""
    g = underlying_graph(d_prime)
    if len(c.colors) != g.n or not c.is_proper(g):
        raise ImproperInput("colouring is not proper on the underlying graph of D'")
    return Coloring(tuple(c.colors[a.tail] for a in d.arcs))


def clique_number(g: Graph) -> int:
    return max((len(q) for q in _cliques(g)), default=0)
