"""Clique-minor certificates, their verifier, and clique-minor search.

A certificate is a sequence of branch sets. :func:`verify_certificate` is the
only judge of validity used anywhere in the package.

The exact search for a K_t minor works on a contracted graph whose vertices
carry groups of original vertices. It repeatedly takes a non-frozen vertex of
least degree and either freezes it as a finished branch set, merges it into a
non-frozen neighbour, or (when it has no such neighbour) deletes it. Deleting
is never needed when a merge is available, since G - v is a subgraph of G/va.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable

from .config import get_cap
from .graph_core import Graph


@dataclass(frozen=True)
class MinorCertificate:
    branch_sets: tuple[frozenset, ...]

    def __init__(self, branch_sets: Iterable[Iterable[int]]):
        object.__setattr__(self, "branch_sets", tuple(frozenset(b) for b in branch_sets))

    @property
    def p(self) -> int:
        return len(self.branch_sets)

    def __len__(self) -> int:
        return len(self.branch_sets)

    def map(self, f) -> "MinorCertificate":
        return MinorCertificate([{f(x) for x in b} for b in self.branch_sets])


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str | None = None
    indices: tuple[int, ...] = ()
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def _connected(g: Graph, vs: frozenset) -> bool:
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vs)


def verify_certificate(g: Graph, cert: MinorCertificate) -> Verdict:
    """Check (a) disjointness, (b) connectivity, (c) pairwise adjacency."""
    sets = cert.branch_sets
    for i, b in enumerate(sets):
        if not b:
            return Verdict(False, "nonempty", (i,), f"branch set {i} is empty")
        bad = [x for x in b if not (isinstance(x, int) and 0 <= x < g.n)]
        if bad:
            return Verdict(False, "range", (i,), f"branch set {i} has invalid vertex {bad[0]}")
    owner: dict[int, int] = {}
    for i, b in enumerate(sets):
        for x in sorted(b):
            if x in owner:
                return Verdict(False, "disjoint", (owner[x], i), f"vertex {x} is shared")
            owner[x] = i
    for i, b in enumerate(sets):
        if not _connected(g, b):
            return Verdict(False, "connected", (i,), f"branch set {i} is disconnected")
    for i in range(len(sets)):
        reach = set()
        for x in sets[i]:
            reach |= g.adj[x]
        for j in range(i + 1, len(sets)):
            if reach.isdisjoint(sets[j]):
                return Verdict(False, "adjacent", (i, j), f"branch sets {i} and {j} are not adjacent")
    return OK


# -- bitmask helpers -------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _max_clique(nbrs: dict[int, int]) -> list[int]:
    """Maximum clique of a graph given as {vertex: neighbour bitmask}."""
    best: list[int] = []

    def expand(clique, cand):
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = clique
            return
        # greedy colouring bound on the candidate set
        order, bounds = [], []
        uncol, colour = cand, 0
        while uncol:
            colour += 1
            avail = uncol
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~nbrs[v] & ~low
                uncol ^= low
                order.append(v)
                bounds.append(colour)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(best):
                return
            expand(clique + [v], cand & nbrs[v])
            cand &= ~(1 << v)

    full = 0
    for v in nbrs:
        full |= 1 << v
    expand([], full)
    return sorted(best)


class _BudgetExhausted(Exception):
    pass


def _contract(nbrs, groups, v, a):
    r, o = (v, a) if v < a else (a, v)
    nb = dict(nbrs)
    gr = dict(groups)
    rbit, obit = 1 << r, 1 << o
    merged = (nbrs[r] | nbrs[o]) & ~(rbit | obit)
    del nb[o]
    del gr[o]
    nb[r] = merged
    gr[r] = groups[r] | groups[o]
    for w in _bits(nbrs[o]):
        if w != r:
            nb[w] = (nb[w] & ~obit) | rbit
    return nb, gr


def _delete(nbrs, groups, v):
    nb = dict(nbrs)
    gr = dict(groups)
    vbit = 1 << v
    for w in _bits(nbrs[v]):
        nb[w] &= ~vbit
    del nb[v]
    del gr[v]
    return nb, gr


def _groups_to_sets(groups, reps):
    return [frozenset(_bits(groups[r])) for r in reps]


def find_clique_minor(g: Graph, t: int, budget: int | None = None) -> MinorCertificate | None:
    """A K_t minor of ``g`` if one exists.

    With a ``budget`` the search gives up after that many nodes and returns
    None, so None only proves absence when ``budget`` is None.
    """
    if t <= 0:
        return MinorCertificate([])
    if g.n < t or g.m < t * (t - 1) // 2:
        return None
    masks = g.masks()
    nbrs = {v: masks[v] for v in range(g.n)}
    groups = {v: 1 << v for v in range(g.n)}
    failed: set = set()
    count = 0
    need_edges = t * (t - 1) // 2

    def search(nbrs, groups, frozen):
        nonlocal count
        nf = _popcount(frozen)
        if nf == t:
            return _groups_to_sets(groups, sorted(_bits(frozen)))
        if len(nbrs) < t:
            return None
        if sum(_popcount(m) for m in nbrs.values()) < 2 * need_edges:
            return None
        for f in _bits(frozen):
            if _popcount(nbrs[f]) < t - 1:
                return None
        key = (frozen, tuple(sorted(nbrs.items())))
        if key in failed:
            return None
        count += 1
        if budget is not None and count > budget:
            raise _BudgetExhausted
        v = min((x for x in nbrs if not frozen >> x & 1), key=lambda x: (_popcount(nbrs[x]), x))
        nv = nbrs[v]
        deg = _popcount(nv)
        if deg >= t - 1 and nv & frozen == frozen:
            found = search(nbrs, groups, frozen | (1 << v))
            if found:
                return found
        free = nv & ~frozen
        if free:
            for a in sorted(_bits(free), key=lambda a: (_popcount(nbrs[a] & nv), a)):
                nb, gr = _contract(nbrs, groups, v, a)
                found = search(nb, gr, frozen)
                if found:
                    return found
        else:
            nb, gr = _delete(nbrs, groups, v)
            found = search(nb, gr, frozen)
            if found:
                return found
        failed.add(key)
        return None

    try:
        sets = search(nbrs, groups, 0)
    except _BudgetExhausted:
        return None
    return None if sets is None else MinorCertificate(sets)


def greedy_clique_minor(g: Graph, rounds: int = 8, seed: int = 0) -> MinorCertificate:
    """Best clique minor seen while greedily contracting low-degree vertices."""
    if g.n == 0:
        return MinorCertificate([])
    rng = random.Random(seed)
    masks = g.masks()
    best: list[frozenset] = [frozenset([0])]
    for rnd in range(max(1, rounds)):
        nbrs = {v: masks[v] for v in range(g.n)}
        groups = {v: 1 << v for v in range(g.n)}
        while nbrs:
            clique = _max_clique(nbrs)
            if len(clique) > len(best):
                best = _groups_to_sets(groups, clique)
            if len(nbrs) <= len(best):
                break
            v = min(nbrs, key=lambda x: (_popcount(nbrs[x]), rng.random() if rnd else x))
            if not nbrs[v]:
                nbrs, groups = _delete(nbrs, groups, v)
                continue
            nv = nbrs[v]
            a = min(_bits(nv), key=lambda a: (_popcount(nbrs[a] & nv), rng.random() if rnd else a))
            nbrs, groups = _contract(nbrs, groups, v, a)
    return MinorCertificate(best)


@dataclass(frozen=True)
class HadwigerResult:
    h: int
    certificate: MinorCertificate
    exact: bool = True
    notes: tuple[str, ...] = field(default=())

    def __iter__(self):
        yield self.h
        yield self.certificate


def hadwiger_upper_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    by_edges = int((1 + math.isqrt(1 + 8 * g.m)) // 2)
    return min(g.n, by_edges)


def hadwiger_exact(g: Graph, cap: int | None = None) -> HadwigerResult:
    """h(g) with a witnessing certificate.

    Beyond ``cap`` vertices only a certified lower bound is returned
    (``exact=False``).
    """
    cap = get_cap("hadwiger") if cap is None else cap
    cert = greedy_clique_minor(g)
    h = cert.p
    if g.n > cap:
        return HadwigerResult(h, cert, exact=False, notes=(f"n={g.n} exceeds cap {cap}",))
    ub = hadwiger_upper_bound(g)
    t = h + 1
    while t <= ub:
        found = find_clique_minor(g, t)
        if found is None:
            break
        cert, h = found, t
        t += 1
    return HadwigerResult(h, cert, exact=True)


def certificate_lines(cert: MinorCertificate) -> list[str]:
    return [str(cert.p)] + [" ".join(str(x) for x in sorted(b)) for b in cert.branch_sets]
