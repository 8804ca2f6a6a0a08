import itertools

from hypothesis import strategies as st

from threearc.graph_core import Digraph, Graph


@st.composite
def simple_digraphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    states = draw(st.lists(st.integers(0, 3), min_size=len(pairs), max_size=len(pairs)))
    arcs = []
    for (x, y), s in zip(pairs, states):
        if s & 1:
            arcs.append((x, y))
        if s & 2:
            arcs.append((y, x))
    order = draw(st.permutations(range(len(arcs))))
    return Digraph(n, [arcs[i] for i in order])


@st.composite
def multi_digraphs(draw, max_n=5, max_m=12):
    n = draw(st.integers(2, max_n))
    arc = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda a: a[0] != a[1])
    return Digraph(n, draw(st.lists(arc, max_size=max_m)))


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def brute_chi(g: Graph) -> int:
    """Smallest k admitting a proper colouring, by trying every assignment."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[x] != colors[y] for x, y in g.edges):
                return k
    return g.n


def brute_has_minor(g: Graph, t: int) -> bool:
    """Try every map of vertices to t branch sets plus 'unused'."""
    if t == 0:
        return True
    for labels in itertools.product(range(t + 1), repeat=g.n):
        sets = [[v for v in range(g.n) if labels[v] == i] for i in range(t)]
        if any(not s for s in sets):
            continue
        if any(len(g.components(s)) != 1 for s in sets):
            continue
        if all(any(g.has_edge(a, b) for a in sets[i] for b in sets[j])
               for i in range(t) for j in range(i + 1, t)):
            return True
    return False
