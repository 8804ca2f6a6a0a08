"""Text formats: arc lists, DOT, the X(D) sidecar map, colourings and
certificates.

Arc list: first line "n m", then m lines "tail head"; '#' starts a comment.
The same format holds undirected graphs (one line per edge).
Certificate: a line "p", then p lines of whitespace-separated vertex ids.
A net certificate is prefixed by the header line "v |A| |Af| |Ac|".
"""

from __future__ import annotations

from pathlib import Path

from .coloring import Coloring
from .errors import ImproperInput
from .graph_core import Digraph, Graph
from .minors import MinorCertificate, certificate_lines
from .three_arc import ThreeArcGraph


def _rows(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(t) for t in line.split()])
        except ValueError:
            raise ImproperInput(f"line {lineno}: expected integers, got {line!r}") from None
    return rows


def _pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    rows = _rows(text)
    if not rows or len(rows[0]) != 2:
        raise ImproperInput('arc list must start with a line "n m"')
    n, m = rows[0]
    body = rows[1:]
    if len(body) != m:
        raise ImproperInput(f"header says {m} lines, found {len(body)}")
    for r in body:
        if len(r) != 2:
            raise ImproperInput(f"expected 'tail head', got {' '.join(map(str, r))!r}")
    return n, [(r[0], r[1]) for r in body]


def parse_digraph(text: str) -> Digraph:
    n, pairs = _pairs(text)
    try:
        return Digraph(n, pairs)
    except ValueError as exc:
        raise ImproperInput(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    n, pairs = _pairs(text)
    try:
        return Graph(n, pairs)
    except ValueError as exc:
        raise ImproperInput(str(exc)) from exc


def read_digraph(path) -> Digraph:
    return parse_digraph(Path(path).read_text())


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_digraph(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"] + [f"{a.tail} {a.head}" for a in d.arcs]
    return "\n".join(lines) + "\n"


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{x} {y}" for x, y in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_dot(obj, name: str = "G") -> str:
    """DOT for a Graph or Digraph, vertices and arcs/edges in id order."""
    directed = isinstance(obj, Digraph)
    out = [f"{'digraph' if directed else 'graph'} {name} {{"]
    out += [f"  {v};" for v in range(obj.n)]
    if directed:
        out += [f"  {a.tail} -> {a.head} [id={a.id}];" for a in obj.arcs]
    else:
        out += [f"  {x} -- {y};" for x, y in obj.sorted_edges()]
    out.append("}")
    return "\n".join(out) + "\n"


def format_sidecar(x: ThreeArcGraph) -> str:
    """One line "vertex_id tail head" per vertex of X(D)."""
    return "".join(f"{v} {a.tail} {a.head}\n" for v, a in enumerate(x.arc_of_vertex))


def format_coloring(c: Coloring) -> str:
    return "".join(line + "\n" for line in c.lines())


def parse_coloring(text: str) -> Coloring:
    rows = _rows(text)
    colors = {}
    for r in rows:
        if len(r) != 2:
            raise ImproperInput("colouring lines must be 'vertex color'")
        colors[r[0]] = r[1]
    if sorted(colors) != list(range(len(colors))):
        raise ImproperInput("colouring must list vertices 0..n-1")
    return Coloring(tuple(colors[v] for v in range(len(colors))))


def format_certificate(cert: MinorCertificate) -> str:
    return "\n".join(certificate_lines(cert)) + "\n"


def parse_certificate(text: str) -> MinorCertificate:
    """Read a certificate; a net-certificate header line is skipped."""
    rows = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if rows and len(rows[0].split()) == 4:
        rows = rows[1:]
    if not rows:
        raise ImproperInput("empty certificate")
    try:
        p = int(rows[0])
        sets = [[int(t) for t in r.split()] for r in rows[1:]]
    except ValueError:
        raise ImproperInput("certificate must contain integers only") from None
    if len(sets) != p:
        raise ImproperInput(f"certificate header says {p} branch sets, found {len(sets)}")
    for i, s in enumerate(sets):
        if len(set(s)) != len(s):
            raise ImproperInput(f"branch set {i} repeats a vertex")
    return MinorCertificate(sets)


def read_certificate(path) -> MinorCertificate:
    return parse_certificate(Path(path).read_text())


def write_text(path, text: str) -> None:
    Path(path).write_text(text)
