"""Constructive extraction of a K_k minor of X(D) with k >= chi(X(D)).

Pipeline: collapse parallel arcs, delete redundant arcs, colour the
underlying graph G (k = chi(G) bounds chi(X(D)) from above), take a
k-critical subgraph H, orient it with Property A, then build the minor by
one of: a net at a vertex of out-degree >= k, the tournament construction
when H is complete, or the case analysis on a maximum-S arc uv (Cases 1.1
to 2.4). Every assembled certificate is verified; failures go through a
small repair step and then to exact/greedy search on X(D).

Inside the case analysis arcs are ids of the simple working digraph. Arc
choices that the construction leaves open take the lowest id.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .coloring import chromatic_number, critical_subgraph
from .config import get_cap
from .errors import (CapExceeded, CaseNotCovered, ConstructionError, ConstructionFailed,
                     ExtractionIncomplete, MissingChoice, NoOrientation, NotTournament, TooSmall)
from .graph_core import Digraph, Graph, collapse_parallel, remove_redundant, underlying_graph
from .minors import (MinorCertificate, find_clique_minor, greedy_clique_minor,
                     verify_certificate)
from .nets import NetSpec, build_net, tournament_minor
from .three_arc import three_arc_graph


# -- orientation and Property A ---------------------------------------------

@dataclass(frozen=True)
class Orientation:
    F: Digraph                      # origin maps F arcs to arc ids of D
    vertices: frozenset
    potential_arcs: frozenset
    W: frozenset = frozenset()
    W_plus: frozenset = frozenset()  # F arc ids
    Q: frozenset = frozenset()
    F_prime: Digraph | None = None
    flips: int = 0


def _orientation_digraph(d: Digraph, ids) -> Digraph:
    ids = sorted(ids)
    return Digraph(d.n, [(d.arcs[a].tail, d.arcs[a].head) for a in ids], ids)


def property_a_violations(f: Digraph, d: Digraph, vertices) -> list[int]:
    """Vertices of out-degree 1 in ``f`` at which Property A fails."""
    vertices = set(vertices)
    bad = []
    for v in sorted(vertices):
        if f.out_degree(v) != 1:
            continue
        w = f.arcs[f.out_arcs(v)[0]].head
        ok = False
        for a in d.out_arcs(v):
            z = d.arcs[a].head
            if z == w:
                continue
            if z not in vertices or f.out_degree(z) in (0, 2):
                ok = True
                break
        if not ok:
            bad.append(v)
    return bad


def property_a_holds(f: Digraph, d: Digraph, vertices) -> bool:
    return not property_a_violations(f, d, vertices)


def orient_with_property_a(h: Graph, d: Digraph, vertices=None) -> Orientation:
    """Orient ``h`` along arcs of ``d`` so that Property A holds.

    Starts from the lowest-id arc on every edge and, while Property A fails
    at some v with A_F(v) = {vw}, reverses zv into vz for the lowest-id arc
    vz of D not between v and w. Each reversal lowers the number of
    out-degree 1 vertices, so the loop terminates.
    """
    if vertices is None:
        vertices = [x for x in range(h.n) if h.adj[x]]
    vertices = frozenset(vertices)
    chosen: dict[tuple[int, int], int] = {}
    for x, y in h.sorted_edges():
        ids = d.pair_arcs(x, y)
        if not ids:
            raise NoOrientation(f"edge {x}-{y} has no arc in D")
        chosen[(x, y)] = min(ids)
    flips = 0
    while True:
        f = _orientation_digraph(d, chosen.values())
        bad = property_a_violations(f, d, vertices)
        if not bad:
            break
        v = bad[0]
        w = f.arcs[f.out_arcs(v)[0]].head
        cands = [a for a in d.out_arcs(v) if d.arcs[a].head != w]
        if not cands:
            raise NoOrientation(f"arc {v}->{w} is redundant; Property A cannot hold at {v}")
        z = d.arcs[min(cands)].head
        key = (min(v, z), max(v, z))
        if key not in chosen or d.arcs[chosen[key]].tail != z:
            raise NoOrientation(f"no reversible arc at vertex {v}")
        chosen[key] = min(cands)
        flips += 1
    in_f = set(chosen.values())
    potential = frozenset(a.id for a in d.arcs if a.id not in in_f)
    return Orientation(f, vertices, potential, flips=flips)


# -- scores and special vertices ---------------------------------------------

@dataclass(frozen=True)
class ScoredArcs:
    S: dict
    argmax: int | None
    lhs_sum: int
    rhs_sum: int


def score_arcs(f: Digraph) -> ScoredArcs:
    """S(uv) = d+(u) + d+(v) - 1, and both sides of the sum identity."""
    S = {a.id: f.out_degree(a.tail) + f.out_degree(a.head) - 1 for a in f.arcs}
    lhs = sum(S.values())
    rhs = 0
    for x in range(f.n):
        rhs += f.out_degree(x) * (f.out_degree(x) + f.in_degree(x) - 1)
    argmax = None
    if S:
        best = max(S.values())
        argmax = min(a for a, s in S.items() if s == best)
    return ScoredArcs(S, argmax, lhs, rhs)


def special_prune(f: Digraph, k: int, vertices=None):
    """(W, W+, F') where W are the special vertices and F' = F - W+."""
    if vertices is None:
        vertices = range(f.n)
    W = frozenset(x for x in vertices
                  if f.out_degree(x) == k - 2 and f.in_degree(x) == 1
                  and all(f.out_degree(f.arcs[a].head) == 0 for a in f.out_arcs(x)))
    W_plus = frozenset(a for x in W for a in f.out_arcs(x))
    f_prime = f.arc_subset(a.id for a in f.arcs if a.id not in W_plus)
    return W, W_plus, f_prime


# -- phi selection ---------------------------------------------------------

@dataclass(frozen=True)
class ArcSelection:
    u: int
    v: int
    N1: tuple[int, ...]
    N2: tuple[int, ...]
    phi_u: dict
    phi_v: dict
    Sigma: frozenset
    Pi: frozenset
    T: frozenset
    U: frozenset
    t: int
    i: int
    j: int
    r: int
    s: int
    shared: tuple[int, ...] = ()     # Sigma & Pi by arc id: w_1 w_1', ..., w_t w_t'

    def violations(self, f: Digraph, d: Digraph) -> list[str]:
        out = []
        for a in self.shared:
            w, w2 = d.arcs[a].tail, d.arcs[a].head
            if d.out_arcs(w) != (a,):
                out.append(f"{w} has another out-arc")
            if not f.has_arc(self.u, w) or not f.has_arc(self.v, w):
                out.append(f"{w} is not an out-neighbour of both u and v")
            if w2 in (self.u, self.v):
                out.append(f"head of {a} is u or v")
        return out


def _f_nbrs(f: Digraph, x: int) -> list[int]:
    return f.neighbours(x)


def select_phi(f: Digraph, d: Digraph, u: int, v: int) -> ArcSelection:
    """phi(u, x) in A_D(x) - A_D{u,x} for x in N1 (likewise for v), with
    |Sigma & Pi| lowered by the exchange until no shared arc can move."""
    if not f.has_arc(u, v):
        raise MissingChoice(f"{u}->{v} is not an arc of F")
    N1 = tuple(x for x in _f_nbrs(f, u) if x != v)
    N2 = tuple(y for y in _f_nbrs(f, v) if y != u)

    def first(x, avoid):
        cands = [a for a in d.out_arcs(x) if d.arcs[a].head != avoid]
        if not cands:
            raise MissingChoice(f"every arc leaving {x} goes to {avoid}")
        return min(cands)

    phi_u = {x: first(x, u) for x in N1}
    phi_v = {y: first(y, v) for y in N2}
    while True:
        shared = sorted(x for x in N1 if x in phi_v and phi_u[x] == phi_v[x])
        moved = False
        for w in shared:
            a = phi_u[w]
            others = [b for b in d.out_arcs(w) if b != a]
            if not others:
                continue
            not_u = [b for b in others if d.arcs[b].head != u]
            if not_u:
                phi_u[w] = min(not_u)
            else:
                phi_v[w] = min(others)
            moved = True
            break
        if not moved:
            break
    Sigma = frozenset(phi_u.values())
    Pi = frozenset(phi_v.values())
    shared_arcs = tuple(sorted(Sigma & Pi))
    out_u = {f.arcs[a].head for a in f.out_arcs(u)} - {v}
    out_v = {f.arcs[a].head for a in f.out_arcs(v)}
    return ArcSelection(u, v, N1, N2, phi_u, phi_v, Sigma, Pi,
                        frozenset(out_u & out_v), frozenset(set(N1) & set(N2)),
                        len(shared_arcs), f.out_degree(u) - 1, f.out_degree(v),
                        len(N1), len(N2), shared_arcs)


# -- parallel sets ------------------------------------------------------------

@dataclass(frozen=True)
class ParallelSet:
    P: tuple[int, ...]
    Q_sets: tuple[frozenset, ...]
    P_prime: frozenset
    Sigma_prime: frozenset
    Pi_prime: frozenset
    back_arcs: tuple[int, ...] = ()


@dataclass(frozen=True)
class AnchorSet:
    B0: frozenset
    parallel: ParallelSet | None = None


def _prefer(d: Digraph, ids, avoid_heads):
    """Lowest id whose head avoids ``avoid_heads``, else lowest id."""
    ids = sorted(ids)
    for a in ids:
        if d.arcs[a].head not in avoid_heads:
            return a
    return ids[0] if ids else None


def _three_arc_q(f: Digraph, d: Digraph, z: int, left: int, right: int, avoid_tails):
    """{z left, z right, zbar zbarbar}, or None."""
    a1, a2 = d.arc_id(z, left), d.arc_id(z, right)
    if a1 is None or a2 is None:
        return None
    for zbar in f.in_neighbours(z):
        if zbar in (left, right) or zbar in avoid_tails:
            continue
        cands = [a for a in d.out_arcs(zbar) if d.arcs[a].head != z]
        if cands:
            return frozenset({a1, a2, min(cands)}), d.arc_id(zbar, z)
    return None


def _replace(d: Digraph, base: frozenset, phi: dict, centre: int, blocked: frozenset, hints) -> frozenset:
    """Claim 2 style pruning: drop arcs in ``blocked`` and, for each tail that
    lost its arc, add another arc of that tail not pointing back to centre."""
    out = set(base - blocked)
    tails = {d.arcs[a].tail for a in out}
    for x in sorted(phi):
        if phi[x] not in blocked or x in tails:
            continue
        cands = [a for a in d.out_arcs(x)
                 if d.arcs[a].head != centre and a not in blocked and a not in out]
        if not cands:
            continue
        pick = next((a for a in hints if a in cands), min(cands))
        out.add(pick)
        tails.add(x)
    return frozenset(out)


def parallel_set(f: Digraph, d: Digraph, path, u: int, v: int, sel: ArcSelection) -> ParallelSet:
    """Arc sets Q_g alongside the path z_1..z_l, their union P', and the
    pruned Sigma', Pi' that avoid P'."""
    path = tuple(path)
    if not path:
        raise ConstructionFailed("empty path")
    z = (u,) + path + (v,)
    nfv = set(f.neighbours(v))
    on_v = [g for g in range(1, len(z) - 1) if z[g] in nfv]
    qs, backs = [], []
    for g in range(1, len(z) - 1):
        zg, left, right = z[g], z[g - 1], z[g + 1]
        spare = [a for a in d.out_arcs(zg) if d.arcs[a].head not in (left, right)]
        if spare:
            pick = _prefer(d, spare, {u, v})
            q = {pick}
            if d.arcs[pick].head == v and g in on_v and g != on_v[-1]:
                others = [a for a in d.out_arcs(zg) if a != pick]
                if others:
                    q.add(min(others))
            qs.append(frozenset(q))
            continue
        got = _three_arc_q(f, d, zg, left, right, ())
        if got is None:
            raise ConstructionFailed(f"no parallel arcs at path vertex {zg}")
        qs.append(got[0])
        backs.append(got[1])
    p_prime = frozenset().union(*qs)
    sigma = _replace(d, sel.Sigma, sel.phi_u, u, p_prime, backs)
    pi = _replace(d, sel.Pi, sel.phi_v, v, p_prime, backs)
    return ParallelSet(path, tuple(qs), p_prime, sigma, pi, tuple(backs))


# -- assembly ---------------------------------------------------------------

class _Assembly:
    """Shared state of one run of the case analysis."""

    def __init__(self, d: Digraph, x: Graph, k: int, vertices: frozenset, trace: list):
        self.d = d
        self.x = x
        self.k = k
        self.vertices = vertices
        self.trace = trace

    # X(D) adjacency between arc sets
    def touch(self, s1, s2) -> bool:
        adj = self.x.adj
        return any(not adj[a].isdisjoint(s2) for a in s1)

    def head(self, a: int) -> int:
        return self.d.arcs[a].head

    def tail(self, a: int) -> int:
        return self.d.arcs[a].tail

    def arc(self, x: int, y: int) -> int:
        a = self.d.arc_id(x, y)
        if a is None:
            raise ConstructionFailed(f"no arc {x}->{y}")
        return a

    def net(self, c: int, A, pool, anchor=None) -> list[frozenset]:
        """A net at c on A drawn from ``pool`` (order kept, lowest first).

        With an ``anchor`` every choice of the arc left alone is tried, and
        sets still missing the anchor get one more pool arc touching both.
        """
        A = list(A)
        if not A:
            return []
        d = self.d
        heads = {self.head(a) for a in A}
        feas, comp, seen = [], [], set()
        for a in pool:
            if a in A or a in seen:
                continue
            seen.add(a)
            x, y = self.tail(a), self.head(a)
            if y == c or x == c:
                continue
            if x in heads:
                if all(self.tail(b) != x for b in feas):
                    feas.append(a)
            elif d.adjacent(c, x):
                comp.append(a)
        spec = NetSpec(c, A, feas, comp)
        if spec.case() is None:
            raise CaseNotCovered(f"net at {c}: p={len(A)} |Af|={len(feas)} |Ac|={len(comp)}")
        sets = [set(s) for s in build_net(spec, d).branch_arc_sets]
        if anchor is None:
            return [frozenset(s) for s in sets]
        anchor = frozenset(anchor)
        for idx in reversed(range(len(A))):
            order = A[:idx] + A[idx + 1:] + [A[idx]]
            trial = build_net(NetSpec(c, order, feas, comp), d).branch_arc_sets
            if all(self.touch(s, anchor) for s in trial):
                return list(trial)
        used = set().union(*sets) | anchor
        for s in sets:
            if self.touch(s, anchor):
                continue
            for a in pool:
                if a in used:
                    continue
                if self.touch({a}, s) and self.touch({a}, anchor):
                    s.add(a)
                    used.add(a)
                    break
        return [frozenset(s) for s in sets]


def _potential_out(f: Digraph, d: Digraph, vertices, x: int, avoid: set) -> int | None:
    """A potential arc xz with z outside ``avoid`` and z not in V(F) or d+_F(z) in {0, 2}."""
    best = None
    for a in d.out_arcs(x):
        z = d.arcs[a].head
        if f.has_arc(x, z) or z in avoid:
            continue
        if z not in vertices or f.out_degree(z) in (0, 2):
            best = a if best is None else min(best, a)
    return best


def _sorted_out(f: Digraph, d: Digraph, x: int, skip=None) -> list[int]:
    return sorted(d.arc_id(x, f.arcs[a].head) for a in f.out_arcs(x) if f.arcs[a].head != skip)


def _case_analysis(asm: _Assembly, f: Digraph, u: int, v: int, depth: int = 0):
    d, k = asm.d, asm.k
    sel = select_phi(f, d, u, v)
    i, j, t = sel.i, sel.j, sel.t
    asm.trace.append(f"arc uv={u}->{v} i={i} j={j} t={t} r={sel.r} s={sel.s} |U|={len(sel.U)}")
    if i + j >= k:
        return _case1(asm, f, sel)
    if i + j == k - 1:
        return _case2(asm, f, sel, depth)
    raise ConstructionFailed(f"S(uv)={i + j} < k-1")


def _case1(asm: _Assembly, f: Digraph, sel: ArcSelection):
    d, k = asm.d, asm.k
    u, v, i, j, t = sel.u, sel.v, sel.i, sel.j, sel.t
    Au = _sorted_out(f, d, u, skip=v)
    Av = _sorted_out(f, d, v)
    Sigma, Pi = sel.Sigma, sel.Pi
    SmP, PmS = sorted(Sigma - Pi), sorted(Pi - Sigma)
    w = [asm.tail(a) for a in sel.shared]

    if j >= k - 1:
        heads = {asm.head(b) for b in Av}
        pool = sorted(a.id for a in d.arcs if a.tail in heads)
        return "1.1", asm.net(v, Av, pool) + [frozenset({Au[0]})]

    if t == k - 2 and t >= 3:
        if SmP or PmS:
            if SmP:
                c1, Ac, other, sig_phi, Ao = u, SmP[0], v, sel.phi_v, Av
                A1 = Au
            else:
                c1, Ac, other, sig_phi, Ao = v, PmS[0], u, sel.phi_u, Au
                A1 = Av
            x = asm.tail(Ac)
            pair = [a for a in A1 if asm.head(a) != x][:2]
            if len(pair) < 2:
                raise ConstructionFailed("case 1.2.1: not enough arcs at the centre")
            first = [frozenset({pair[0]}), frozenset({pair[1], Ac})]
            B = Ao[:k - 2]
            pool = [sig_phi[asm.head(b)] for b in B if asm.head(b) in sig_phi]
            return "1.2.1", first + asm.net(other, B, pool)
        # Sigma == Pi: w_0 := v, w_0' := w_1
        ws = [v] + w
        tails = [asm.arc(u, x) for x in ws]
        # B_l = {u w_l, w_{l+1} w'_{l+1}}, indices mod t+1
        nxt = list(sel.shared) + [asm.arc(v, w[0])]
        sets = [frozenset({tails[l], nxt[l]}) for l in range(t + 1)]
        sets.append(frozenset({asm.arc(v, w[1])}))
        return "1.2.1", sets

    if math.ceil(k / 2) <= t <= k - 3:
        sh = list(sel.shared)                          # sh[l-1] = w_l w_l'
        A = [asm.arc(u, x) for x in w]
        Af = [sh[l - 1] for l in range(k - t, t + 1)]
        Ac = SmP[:k - 2 - t]
        B = [asm.arc(v, x) for x in w[:k - t]]
        Bf = [sh[l - 1] for l in range(1, k - t)]
        Bc = PmS[:k - 2 - t]
        return "1.2.2", asm.net(u, A, Af + Ac) + asm.net(v, B, Bf + Bc)

    if t <= math.ceil(k / 2) - 1:
        jp = k - i
        if t == 0:
            return "1.2.3", asm.net(u, Au, sorted(Sigma)) + asm.net(v, Av[:jp], sorted(Pi))
        if j == k - 2:
            uw1 = asm.arc(u, w[0])
            if t == 1:
                A = [uw1] + [a for a in Au if a != uw1][:1]
            else:
                A = [uw1, asm.arc(u, w[1])]
            return "1.2.3", asm.net(u, A, SmP) + asm.net(v, Av, sorted(Pi))
        if i == t:
            return "1.2.3", asm.net(u, Au, SmP) + asm.net(v, Av[:jp], sorted(Pi))
        vw1 = asm.arc(v, w[0])
        B = [vw1] + [a for a in Av if a != vw1][:jp - 1]
        return "1.2.3", asm.net(v, B, PmS) + asm.net(u, Au, sorted(Sigma))

    raise ConstructionFailed(f"case 1.2: t={t} outside the covered ranges")


def _case2(asm: _Assembly, f: Digraph, sel: ArcSelection, depth: int):
    d, k = asm.d, asm.k
    u, v, i, j, t = sel.u, sel.v, sel.i, sel.j, sel.t
    Au = _sorted_out(f, d, u, skip=v)
    Av = _sorted_out(f, d, v)
    Sigma, Pi = sel.Sigma, sel.Pi
    SmP, PmS = sorted(Sigma - Pi), sorted(Pi - Sigma)
    uv = asm.arc(u, v)

    if j == 1:
        A_net = asm.net(u, Au, SmP)
        v1 = asm.head(Av[0])
        vz = _potential_out(f, d, asm.vertices, v, {v1, u})
        if vz is None:
            vz = _potential_out(f, d, asm.vertices, v, {v1})
        if vz is None:
            raise ConstructionFailed("case 2.1: no potential arc at v")
        z = asm.head(vz)
        tau = next((a for a in PmS if asm.tail(a) not in (v1, z)), None)
        if tau is None:
            raise ConstructionFailed("case 2.1: no arc tau")
        return "2.1", A_net + [frozenset({Av[0]}), frozenset({vz, tau})]

    if 2 <= j <= k - 3:
        return _case22(asm, f, sel, Au, Av, uv, "2.2")

    if j == k - 2:
        if f.in_degree(v) == 1:
            if depth >= 2:
                raise ConstructionFailed("case 2.3: rewrite depth exceeded")
            nxt = [f.arcs[a].head for a in f.out_arcs(v) if f.out_degree(f.arcs[a].head) >= 1]
            two = [x for x in nxt if f.out_degree(x) >= 2]
            if two:
                label, sets = _case_analysis(asm, f, v, two[0], depth + 1)
                return "2.3>" + label, sets
            if not nxt:
                raise ConstructionFailed("case 2.3: every out-neighbour of v is a sink")
            v1 = nxt[0]
            w1 = f.arcs[f.out_arcs(v1)[0]].head
            extra = _potential_out(f, d, asm.vertices, v1, {w1, v})
            if extra is None:
                raise ConstructionFailed("case 2.3: no potential arc to add")
            f2 = Digraph(f.n, f.arc_pairs() + [(v1, asm.head(extra))], list(f.origin) + [extra])
            label, sets = _case_analysis(asm, f2, v, v1, depth + 1)
            return "2.3+>" + label, sets
        return _case22(asm, f, sel, Au, Av, uv, "2.3")

    if j == k - 1:
        uz = _potential_out(f, d, asm.vertices, u, {v})
        if uz is None:
            raise ConstructionFailed("case 2.4: no potential arc at u")
        return "2.4", [frozenset({uz})] + asm.net(v, Av, sorted(Pi))

    raise ConstructionFailed(f"case 2: j={j} outside the covered ranges")


def _disjoint(first, second):
    """Drop from ``first`` anything in ``second``."""
    second = set(second)
    return [a for a in first if a not in second]


def _case22(asm: _Assembly, f: Digraph, sel: ArcSelection, Au, Av, uv, tag):
    d, k = asm.d, asm.k
    u, v, i, j, t = sel.u, sel.v, sel.i, sel.j, sel.t
    Sigma, Pi = sel.Sigma, sel.Pi
    U = sorted(sel.U)

    if t >= 2:
        w1, w2 = sel.shared[0], sel.shared[1]
        B0 = frozenset({w1, w2, uv})
        pa = sorted(Sigma - Pi)
        pb = sorted(Pi - Sigma)
        return tag + ".1", _finish(asm, u, v, Au, Av, pa, pb, B0)

    into_v = [a for a in U if f.has_arc(a, v)]
    if into_v:
        a = into_v[0]
        direct = [b for b in d.out_arcs(a) if asm.head(b) not in (u, v)]
        back = None
        if direct:
            B0 = frozenset({uv, min(direct)})
        else:
            au, av = d.arc_id(a, u), d.arc_id(a, v)
            if au is None or av is None:
                raise ConstructionFailed("case 2.2.2: a lacks an arc to u or v")
            bars = [x for x in f.in_neighbours(a) if x not in (u, v)]
            choice = None
            for abar in bars:
                # an out-arc of abar in D other than abar->a
                cands = [b for b in d.out_arcs(abar) if asm.head(b) != a]
                if cands:
                    choice = (abar, _prefer(d, cands, {u, v}))
                    break
            if choice is None:
                raise ConstructionFailed("case 2.2.2: no in-neighbour with a spare arc")
            abar, bb = choice
            B0 = frozenset({uv, au, av, bb})
            back = d.arc_id(abar, a)
            if max(len(B0 & Sigma), len(B0 & Pi)) > 2:
                raise ConstructionFailed("case 2.2.2: anchor meets Sigma or Pi three times")
        extra = [back] if back is not None and len(B0 & Sigma) == 2 else []
        blocked = B0 | ({back} if back is not None else set())
        if i == k - 3 and j == 2:
            pa = sorted(Sigma - B0) + extra
            pb = sorted(Pi - Sigma - blocked)
        elif i == 2 and j == k - 3:
            pb = sorted(Pi - B0)
            pa = _disjoint(sorted(Sigma - Pi - B0) + extra, pb)
            A_net = _pair_net(asm, u, Au, sel, pa)
            return tag + ".2", _join(asm, A_net, asm.net(v, Av, pb, B0), B0)
        else:
            pa = sorted(Sigma - Pi - B0) + extra
            pb = sorted(Pi - blocked)
        return tag + ".2", _finish(asm, u, v, Au, Av, _disjoint(pa, pb), pb, B0)

    if len(U) >= 2:
        inner = sorted(b for x in U for b in f.out_arcs(x) if f.arcs[b].head in sel.U)
        if inner:
            tau = f.origin[inner[0]]
            a2 = asm.head(tau)
            cands = [b for b in d.out_arcs(a2) if asm.head(b) != u]
            if not cands:
                raise ConstructionFailed("case 2.2.3: no arc gamma")
            gamma = _prefer(d, cands, {u, v})
            B0 = frozenset({uv, tau, gamma})
            if i >= j:
                pa, pb = sorted(Sigma - B0), sorted(Pi - Sigma - B0)
            else:
                pa, pb = sorted(Sigma - Pi - B0), sorted(Pi - B0)
            return tag + ".3", _finish(asm, u, v, Au, Av, pa, pb, B0)
        Q, backs = {}, {}
        for a in U:
            direct = [b for b in d.out_arcs(a) if asm.head(b) not in (u, v)]
            if direct:
                Q[a] = frozenset({min(direct)})
                continue
            got = _three_arc_q(f, d, a, u, v, ())
            if got is None:
                continue
            Q[a], backs[a] = got
        must = asm.tail(sel.shared[0]) if t == 1 else None
        pairs = [(x, y) for x in sorted(Q) for y in sorted(Q) if x < y
                 and (must is None or must in (x, y))]
        if not pairs:
            raise ConstructionFailed("case 2.2.3: no pair of anchors")
        x, y = min(pairs, key=lambda p: (len(Q[p[0]] | Q[p[1]]), p))
        B0 = frozenset({uv}) | Q[x] | Q[y]
        hints = [backs[z] for z in (x, y) if z in backs]
        sig = _replace(d, Sigma, sel.phi_u, u, B0, hints)
        pi = _replace(d, Pi, sel.phi_v, v, B0, hints)
        pa = sorted(sig - B0)
        pb = _disjoint(sorted(pi - B0), pa)
        return tag + ".3", _finish(asm, u, v, Au, Av, pa, pb, B0)

    # |U| <= 1: anchor along a shortest path avoiding U, u and v
    path = _anchor_path(asm, f, sel)
    ps = parallel_set(f, d, path, u, v, sel)
    B0 = frozenset({uv}) | ps.P_prime
    sig, pi = ps.Sigma_prime - B0, ps.Pi_prime - B0
    if j == 2:
        heads = {asm.head(b) for b in Av}
        gamma = next((a for a in sorted(pi - sig)
                      if asm.tail(a) not in heads and d.adjacent(v, asm.tail(a))), None)
        if gamma is None:
            raise ConstructionFailed("case 2.2.4: no compatible arc at v")
        B_net = asm.net(v, Av, [gamma], B0)
        A_net = asm.net(u, Au, sorted(sig - {gamma}), B0)
        return tag + ".4", _join(asm, A_net, B_net, B0)
    B_net = asm.net(v, Av, sorted(pi), B0)
    pa = sorted(sig - pi)
    if i == 2:
        A_net = _pair_net(asm, u, Au, sel, pa, compatible_only=True)
    else:
        A_net = asm.net(u, Au, pa, B0)
    return tag + ".4", _join(asm, A_net, B_net, B0)


def _anchor_path(asm: _Assembly, f: Digraph, sel: ArcSelection):
    u, v = sel.u, sel.v
    banned = set(sel.U) | {u, v}
    allowed = {x for x in asm.vertices if x not in banned}
    src = sorted(x for x in f.neighbours(u) if x in allowed)
    dst = {x for x in f.in_neighbours(v) if x in allowed}
    if not src or not dst:
        raise ConstructionFailed("case 2.2.4: no path endpoints")
    prev = {x: None for x in src}
    queue = deque(src)
    end = None
    while queue:
        x = queue.popleft()
        if x in dst:
            end = x
            break
        for y in f.neighbours(x):
            if y in allowed and y not in prev:
                prev[y] = x
                queue.append(y)
    if end is None:
        raise ConstructionFailed("case 2.2.4: endpoints are not connected")
    path = []
    while end is not None:
        path.append(end)
        end = prev[end]
    path.reverse()
    nfv = set(f.neighbours(v))
    hits = [g for g, x in enumerate(path) if x in nfv]
    if len(hits) >= 2:
        path = path[:hits[1] + 1]
    return path


def _pair_net(asm: _Assembly, u, Au, sel: ArcSelection, pool, compatible_only=False):
    """{{u u_1, tau_1}, {u u_2, tau_2}} with tau_2 touching both u u_1 and u u_2."""
    if len(Au) != 2:
        return asm.net(u, Au, pool)
    u1, u2 = asm.head(Au[0]), asm.head(Au[1])
    cands = list(pool)
    if compatible_only:
        cands = [a for a in cands if asm.tail(a) not in (u1, u2)]
    tau2 = next((a for a in cands if asm.tail(a) not in (u1, u2)), None)
    tau1 = next((a for a in cands if a != tau2 and asm.tail(a) != u1), None)
    if tau1 is None or tau2 is None:
        raise ConstructionFailed("net of size 2: not enough arcs")
    return [frozenset({Au[0], tau1}), frozenset({Au[1], tau2})]


def _join(asm: _Assembly, A_net, B_net, B0):
    return list(A_net) + list(B_net) + [frozenset(B0)]


def _finish(asm: _Assembly, u, v, Au, Av, pa, pb, B0):
    A_net = asm.net(u, Au, pa, B0)
    B_net = asm.net(v, Av, pb, B0)
    return _join(asm, A_net, B_net, B0)


# -- repair ---------------------------------------------------------------

def _bfs_path(g: Graph, starts, goal, free) -> list[int] | None:
    """Shortest path of ``free`` vertices from a vertex adjacent to ``starts``
    to a vertex satisfying ``goal``."""
    prev = {}
    queue = deque()
    for s in sorted(starts):
        for y in sorted(g.adj[s]):
            if y in free and y not in prev:
                prev[y] = None
                queue.append(y)
    while queue:
        x = queue.popleft()
        if goal(x):
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path
        for y in sorted(g.adj[x]):
            if y in free and y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def repair_certificate(g: Graph, sets) -> MinorCertificate | None:
    """Fix missing connectivity or adjacency by adding unused vertices."""
    sets = [set(s) for s in sets]
    used: set = set()
    for s in sets:
        if used & s:
            return None
        used |= s
    free = set(range(g.n)) - used
    for _ in range(4 * len(sets) + 4):
        verdict = verify_certificate(g, MinorCertificate(sets))
        if verdict.ok:
            return MinorCertificate(sets)
        if verdict.clause == "connected":
            s = sets[verdict.indices[0]]
            comps = g.components(s)
            first = set(comps[0])
            rest = s - first
            path = _bfs_path(g, first, lambda x: not g.adj[x].isdisjoint(rest), free)
        elif verdict.clause == "adjacent":
            a, b = verdict.indices
            s = sets[a]
            target = sets[b]
            path = _bfs_path(g, s, lambda x: not g.adj[x].isdisjoint(target), free)
        else:
            return None
        if path is None:
            return None
        s |= set(path)
        free -= set(path)
    return None


# -- pipeline ---------------------------------------------------------------

@dataclass(frozen=True)
class ExtractionResult:
    k: int
    certificate: MinorCertificate
    label: str
    constructive: bool
    repaired: bool = False
    trace: tuple[str, ...] = field(default=())

    def __iter__(self):
        yield self.k
        yield self.certificate


def _construct(work: Digraph, x: Graph, g: Graph, k: int, trace: list, stage: list):
    """The constructive branch: (label, branch sets over arc ids of ``work``)."""
    stage.append("critical")
    crit = critical_subgraph(g, k)
    hv = frozenset(crit.vertices)
    h = Graph(g.n, crit.original_edges())
    trace.append(f"critical: |V(H)|={len(hv)} e(H)={h.m}")
    stage.append("orient")
    orient = orient_with_property_a(h, work, hv)
    f = orient.F
    trace.append(f"orient: e(F)={f.m} flips={orient.flips}")
    asm = _Assembly(work, x, k, hv, trace)

    top = max(sorted(hv), key=lambda y: f.out_degree(y))
    if f.out_degree(top) >= k:
        stage.append("delta")
        A = _sorted_out(f, work, top)[:k]
        heads = {work.arcs[a].head for a in A}
        pool = sorted(a.id for a in work.arcs if a.tail in heads)
        return "delta", asm.net(top, A, pool)

    sc = score_arcs(f)
    if sc.lhs_sum == (k - 2) * f.m:
        stage.append("tournament")
        sub = sorted(hv)
        index = {y: n for n, y in enumerate(sub)}
        t = Digraph(len(sub), [(index[a.tail], index[a.head]) for a in f.arcs])
        cert = tournament_minor(t)
        return "tournament", [frozenset(f.origin[a] for a in b) for b in cert.branch_sets]

    W, W_plus, f_prime = special_prune(f, k, hv)
    trace.append(f"special: |W|={len(W)} |W+|={len(W_plus)}")
    sp = score_arcs(f_prime)
    if sp.argmax is None:
        raise ConstructionFailed("F' has no arcs")
    top_arc = f_prime.arcs[sp.argmax]
    stage.append("cases")
    return _case_analysis(asm, f, top_arc.tail, top_arc.head)


def _fallback(x: Graph, target: int, best: MinorCertificate | None, trace: list):
    cert = greedy_clique_minor(x)
    if best is not None and best.p > cert.p:
        cert = best
    if cert.p < target:
        found = find_clique_minor(x, target, budget=get_cap("minor_budget"))
        if found is not None:
            cert = found
    trace.append(f"fallback: size {cert.p} for target {target}")
    return cert


def extract_minor(d: Digraph) -> ExtractionResult:
    """A verified clique minor of X(d) on at least chi(X(d)) branch sets."""
    trace: list[str] = []
    if d.m == 0:
        return ExtractionResult(0, MinorCertificate([]), "empty", True, trace=("empty digraph",))
    collapsed, _ = collapse_parallel(d)
    to_orig = collapsed.origin
    work = Digraph(d.n, collapsed.arc_pairs())
    trace.append(f"collapse: {d.m} -> {work.m} arcs")
    d_prime, removed = remove_redundant(work)
    g = underlying_graph(d_prime)
    trace.append(f"redundant: {len(removed)} removed, G has {g.m} edges")
    k = chromatic_number(g).k
    trace.append(f"chi(G)={k}")
    x = three_arc_graph(work).graph

    label, cert, repaired, partial = "trivial", None, False, None
    if k <= 1:
        cert = MinorCertificate([[0]])
    else:
        try:
            stage: list[str] = []
            label, sets = _construct(work, x, g, k, trace, stage)
            trace.append(f"case {label}: {len(sets)} branch sets")
            cert = MinorCertificate(sets)
            verdict = verify_certificate(x, cert)
            if not verdict:
                trace.append(f"verify: {verdict.clause} {verdict.indices}")
                cert = repair_certificate(x, sets)
                repaired = cert is not None
                trace.append("repair: " + ("ok" if repaired else "failed"))
        except (ConstructionError, CaseNotCovered, TooSmall, NotTournament) as exc:
            label = stage[-1] if stage else "start"
            trace.append(f"construction stopped at {label}: {type(exc).__name__}: {exc}")
            label, cert = f"failed:{label}", None
        if cert is not None and (cert.p < k or not verify_certificate(x, cert)):
            partial, cert = cert, None

    constructive = cert is not None
    if cert is None:
        try:
            target = chromatic_number(x).k
        except CapExceeded:
            target = k
        cert = _fallback(x, target, partial, trace)
        if cert.p < target:
            raise ExtractionIncomplete(
                f"best minor has {cert.p} < {target} branch sets",
                certificate=cert.map(lambda a: to_orig[a]), label=label, trace=trace)
        label = f"fallback({label})"
    trace.append(f"result: k={cert.p} via {label}")
    return ExtractionResult(cert.p, cert.map(lambda a: to_orig[a]), label, constructive,
                            repaired, tuple(trace))
