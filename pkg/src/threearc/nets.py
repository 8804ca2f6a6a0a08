"""Feasible/compatible arcs, nets at a vertex, and the tournament minor.

For a vertex v and a set A of arcs leaving v, an arc xy is A-feasible when
vx is in A and y != v, and A-compatible when x is adjacent to v, vx is not in
A and y != v. A net is a clique minor of X(D) of size |A| built from
A, A-feasible and A-compatible arcs, each branch set holding exactly one arc
of A. All sets here are sets of arc ids of one simple digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CaseNotCovered, ImproperInput, NotTournament, TooSmall
from .graph_core import Digraph
from .minors import MinorCertificate, certificate_lines


@dataclass(frozen=True)
class NetSpec:
    v: int | None
    A: tuple[int, ...]
    A_f: tuple[int, ...] = ()
    A_c: tuple[int, ...] = ()

    def __init__(self, v, A: Iterable[int], A_f: Iterable[int] = (), A_c: Iterable[int] = ()):
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "A", tuple(A))
        object.__setattr__(self, "A_f", tuple(A_f))
        object.__setattr__(self, "A_c", tuple(A_c))

    @property
    def p(self) -> int:
        return len(self.A)

    def case(self) -> int | None:
        """The first case (1)-(6) whose hypothesis holds, or None."""
        p, nf, nc = self.p, len(self.A_f), len(self.A_c)
        if p == 1:
            return 1
        if p == 2 and nc >= 1:
            return 2
        if p == 3 and nf == 3:
            return 3
        if p == 3 and nf >= 1 and nc >= 1:
            return 4
        if p == 3 and nc >= 2:
            return 5
        if p >= 4 and nf + nc >= p - 1:
            return 6
        return None

    def validate(self, d: Digraph) -> None:
        arcs = d.arcs
        if any(not 0 <= a < d.m for a in self.A + self.A_f + self.A_c):
            raise ImproperInput("arc id out of range")
        if len(set(self.A)) != len(self.A) or len(set(self.A_f)) != len(self.A_f) \
                or len(set(self.A_c)) != len(self.A_c):
            raise ImproperInput("repeated arc in net spec")
        if set(self.A) & set(self.A_f) or set(self.A) & set(self.A_c) or set(self.A_f) & set(self.A_c):
            raise ImproperInput("A, A_f and A_c must be disjoint")
        v = self.v
        if any(arcs[a].tail != v for a in self.A):
            raise ImproperInput("every arc of A must leave v")
        heads = {arcs[a].head for a in self.A}
        tails = [arcs[a].tail for a in self.A_f]
        if len(set(tails)) != len(tails):
            raise ImproperInput("two feasible arcs share a tail")
        for a in self.A_f:
            if not _feasible(d, v, heads, a):
                raise ImproperInput(f"arc {a} is not A-feasible")
        for a in self.A_c:
            if not _compatible(d, v, heads, a):
                raise ImproperInput(f"arc {a} is not A-compatible")


@dataclass(frozen=True)
class NetCertificate:
    branch_arc_sets: tuple[frozenset, ...]
    spec: NetSpec
    case: int

    def to_minor_certificate(self) -> MinorCertificate:
        # X(D) vertices are indexed by arc id
        return MinorCertificate(self.branch_arc_sets)

    def lines(self) -> list[str]:
        s = self.spec
        head = f"{s.v} {len(s.A)} {len(s.A_f)} {len(s.A_c)}"
        return [head] + certificate_lines(self.to_minor_certificate())


def _feasible(d: Digraph, v: int, heads, a: int) -> bool:
    arc = d.arcs[a]
    return arc.tail in heads and arc.head != v


def _compatible(d: Digraph, v: int, heads, a: int) -> bool:
    arc = d.arcs[a]
    return arc.head != v and arc.tail not in heads and d.adjacent(v, arc.tail)


def classify_arcs(d: Digraph, v: int, A: Iterable[int]) -> tuple[frozenset, frozenset]:
    """All A-feasible arcs and all A-compatible arcs of ``d``.

    Compatibility reads "v and x adjacent", not "an arc from v to x".
    """
    A = set(A)
    if any(d.arcs[a].tail != v for a in A):
        raise ImproperInput("A must consist of arcs leaving v")
    heads = {d.arcs[a].head for a in A}
    feasible = frozenset(a.id for a in d.arcs if _feasible(d, v, heads, a.id))
    compatible = frozenset(a.id for a in d.arcs if _compatible(d, v, heads, a.id))
    return feasible, compatible


def build_net(spec: NetSpec, d: Digraph) -> NetCertificate:
    """An (A, A_f, A_c)-net of size p, by the first applicable case (1)-(6).

    A is used in the order given, except that arcs vx whose head carries a
    feasible arc come first (so v_j v_j' is the feasible arc at v_j). The
    last arc of that order is the one left as a singleton in cases (4)-(6).
    """
    spec.validate(d)
    case = spec.case()
    if case is None:
        raise CaseNotCovered(
            f"no case applies to p={spec.p}, |A_f|={len(spec.A_f)}, |A_c|={len(spec.A_c)}")
    arcs = d.arcs
    partner = {arcs[f].tail: f for f in spec.A_f}
    order = [a for a in spec.A if arcs[a].head in partner] + \
            [a for a in spec.A if arcs[a].head not in partner]
    feas = [partner[arcs[a].head] for a in order if arcs[a].head in partner]
    comp = list(spec.A_c)
    p = spec.p
    if case == 1:
        sets = [{order[0]}]
    elif case == 2:
        sets = [{order[0]}, {order[1], comp[0]}]
    elif case == 3:
        sets = [{order[0], feas[1]}, {order[1], feas[2]}, {order[2], feas[0]}]
    elif case == 4:
        sets = [{order[0], comp[0]}, {order[1], feas[0]}, {order[2]}]
    elif case == 5:
        sets = [{order[0], comp[0]}, {order[1], comp[1]}, {order[2]}]
    else:
        beta = feas[:p - 1] + comp[:max(0, p - 1 - len(feas))]
        sets = [{order[j], beta[j + 1]} for j in range(p - 2)]
        sets.append({order[p - 2], beta[0]})
        sets.append({order[p - 1]})
    return NetCertificate(tuple(frozenset(s) for s in sets), spec, case)


def tournament_minor(d: Digraph) -> MinorCertificate:
    """A K_n minor of X(d) for a tournament d on n >= 5 vertices.

    x is vertex 0 and v_0, ..., v_{n-2} are vertices 1, ..., n-1.
    """
    if not d.is_tournament():
        raise NotTournament("digraph is not a tournament")
    n = d.n
    if n < 5:
        raise TooSmall(f"tournament has {n} < 5 vertices")
    q = n - 1

    def arc(x, y):
        return d.pair_arcs(x, y)[0]

    vs = list(range(1, n))
    sets = [{arc(0, vs[i]), arc(vs[(i + 1) % q], vs[(i + 2) % q])} for i in range(q)]
    sets.append({arc(vs[i], vs[(i + 2) % q]) for i in range(q)})
    return MinorCertificate(sets)
