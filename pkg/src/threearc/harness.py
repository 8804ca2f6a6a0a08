"""Instance generators, sweep verification of h(X(D)) >= chi(X(D)), and the
randomized lemma suites.

Reports are line-delimited JSON, one record per instance (or per suite), with
no timing inside the records, so the same seed and config always give the
same bytes. Per-instance randomness comes from Random(seed ^ index).
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .coloring import (chromatic_number, clique_cutset, critical_subgraph, is_proper_coloring,
                       lift_coloring)
from .config import get_cap
from .errors import CapExceeded, ThreeArcError
from .extractor import extract_minor, orient_with_property_a, property_a_violations, score_arcs
from .graph_core import (Digraph, Graph, biorient, collapse_parallel, complete_graph, cycle_graph,
                         remove_redundant, underlying_graph)
from .minors import MinorCertificate, certificate_lines, hadwiger_exact, verify_certificate
from .nets import NetSpec, build_net, tournament_minor
from .three_arc import three_arc_graph, three_arc_graph_undirected

STATES = 4  # per unordered pair: none, x->y, y->x, both


# -- encodings ----------------------------------------------------------------

def vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(n) for y in range(x + 1, n)]


def digraph_from_states(n: int, states) -> Digraph:
    arcs = []
    for (x, y), s in zip(vertex_pairs(n), states):
        if s & 1:
            arcs.append((x, y))
        if s & 2:
            arcs.append((y, x))
    return Digraph(n, arcs)


def encode_digraph(d: Digraph) -> str:
    """"n:s..." with one state digit per pair; arc ids are not kept."""
    digits = []
    for x, y in vertex_pairs(d.n):
        digits.append(str(int(d.has_arc(x, y)) | 2 * int(d.has_arc(y, x))))
    return f"{d.n}:" + "".join(digits)


def decode_digraph(code: str) -> Digraph:
    n, _, digits = code.partition(":")
    return digraph_from_states(int(n), [int(c) for c in digits])


def encode_arcs(d: Digraph) -> str:
    """Arc-order-preserving encoding "n|t>h,t>h"."""
    return f"{d.n}|" + ",".join(f"{a.tail}>{a.head}" for a in d.arcs)


# -- enumeration ---------------------------------------------------------------

def enumerate_digraphs(n: int):
    """All labeled simple digraphs on n vertices; the last pair changes fastest."""
    cap = get_cap("enumerate")
    if n > cap:
        raise CapExceeded(f"exhaustive enumeration capped at n={cap}")
    for states in itertools.product(range(STATES), repeat=len(vertex_pairs(n))):
        yield digraph_from_states(n, states)


def enumerate_tournaments(n: int):
    cap = get_cap("tournaments")
    if n > cap:
        raise CapExceeded(f"tournament enumeration capped at n={cap}")
    for bits in itertools.product((1, 2), repeat=len(vertex_pairs(n))):
        yield digraph_from_states(n, bits)


def _digits(index: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        index, r = divmod(index, base)
        out.append(r)
    return out[::-1]


def nth_digraph(n: int, index: int) -> Digraph:
    return digraph_from_states(n, _digits(index, STATES, len(vertex_pairs(n))))


def nth_tournament(n: int, index: int) -> Digraph:
    return digraph_from_states(n, [b + 1 for b in _digits(index, 2, len(vertex_pairs(n)))])


# -- random instances ------------------------------------------------------------

def random_digraph(rng: random.Random, n: int) -> Digraph:
    """Uniform over labeled simple digraphs on n vertices."""
    return digraph_from_states(n, [rng.randrange(STATES) for _ in vertex_pairs(n)])


def random_tournament(rng: random.Random, n: int) -> Digraph:
    return digraph_from_states(n, [rng.choice((1, 2)) for _ in vertex_pairs(n)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in vertex_pairs(n) if rng.random() < p])


def join_graphs(a: Graph, b: Graph) -> Graph:
    e = list(a.edges) + [(x + a.n, y + a.n) for x, y in b.edges]
    e += [(x, a.n + y) for x in range(a.n) for y in range(b.n)]
    return Graph(a.n + b.n, e)


def hajos_sum(k: int) -> Graph:
    """Hajos join of two copies of K_k; k-critical on 2k-1 vertices."""
    left = list(range(k))
    right = [0] + list(range(k, 2 * k - 1))
    e = {(s[i], s[j]) for s in (left, right) for i in range(len(s)) for j in range(i + 1, len(s))}
    e -= {(0, 1), (0, k)}
    e.add((1, k))
    return Graph(2 * k - 1, e)


def family_bases() -> list[tuple[str, Graph, int]]:
    """k-critical bases with k >= 7 for the case analysis."""
    out = []
    for k in (7, 8):
        out.append((f"K{k - 3}+C5", join_graphs(complete_graph(k - 3), cycle_graph(5)), k))
        out.append((f"K{k - 3}+C7", join_graphs(complete_graph(k - 3), cycle_graph(7)), k))
    out.append(("hajos7", hajos_sum(7), 7))
    out.append(("K1+C5+C5", join_graphs(complete_graph(1), join_graphs(cycle_graph(5), cycle_graph(5))), 7))
    return out


def _balanced(rng: random.Random, g: Graph, flips: int) -> list[tuple[int, int]]:
    out = {e: (e if rng.random() < 0.5 else (e[1], e[0])) for e in g.sorted_edges()}
    deg = [0] * g.n
    for a, _ in out.values():
        deg[a] += 1
    changed = True
    while changed:
        changed = False
        for e in sorted(out):
            a, b = out[e]
            if deg[a] > deg[b] + 1:
                out[e] = (b, a)
                deg[a] -= 1
                deg[b] += 1
                changed = True
    keys = sorted(out)
    for _ in range(flips):
        e = rng.choice(keys)
        out[e] = out[e][::-1]
    return list(out.values())


def family_instance(rng: random.Random, base: Graph) -> Digraph:
    """An orientation of ``base`` with some reverse arcs and pendant out-arcs."""
    if rng.random() < 0.5:
        main = _balanced(rng, base, rng.randrange(4))
        back = rng.choice((0.0, 0.1, 0.3))
    else:
        main = [e if rng.random() < 0.5 else e[::-1] for e in base.sorted_edges()]
        back = 0.5
    rng.shuffle(main)
    arcs = main + [(y, x) for x, y in main if rng.random() < back]
    n = base.n
    outlet = rng.choice((0.0, 0.3, 0.7, 1.0))
    for x in range(base.n):
        if rng.random() < outlet:
            arcs.append((x, n))
            n += 1
    return Digraph(n, arcs)


def random_net_instance(rng: random.Random, case: int) -> tuple[Digraph, NetSpec]:
    """A digraph and a NetSpec whose first applicable case is ``case``."""
    p = {1: 1, 2: 2, 3: 3, 4: 3, 5: 3}.get(case) or rng.randint(4, 7)
    if case == 1:
        nf, nc = rng.randint(0, 1), rng.randint(0, 2)
    elif case == 2:
        nf, nc = rng.randint(0, 2), rng.randint(1, 3)
    elif case == 3:
        nf, nc = 3, rng.randint(0, 2)
    elif case == 4:
        nf, nc = rng.randint(1, 2), rng.randint(1, 3)
    elif case == 5:
        nf, nc = 0, rng.randint(2, 4)
    else:
        nf = rng.randint(0, p)
        nc = rng.randint(max(0, p - 1 - nf), p + 1)
    v, heads = 0, list(range(1, p + 1))
    n = p + 1
    arcs: list[tuple[int, int]] = [(v, h) for h in heads]
    A = list(range(p))
    A_f, A_c = [], []

    def fresh():
        nonlocal n
        n += 1
        return n - 1

    for h in rng.sample(heads, nf):
        others = [y for y in heads if y != h and (h, y) not in arcs]
        y = rng.choice(others) if others and rng.random() < 0.5 else fresh()
        A_f.append(len(arcs))
        arcs.append((h, y))
    tails: list[int] = []
    for _ in range(nc):
        if tails and rng.random() < 0.3:
            x = rng.choice(tails)
        else:
            x = fresh()
            tails.append(x)
            arcs.append((x, v) if rng.random() < 0.5 else (v, x))
        targets = [y for y in range(1, n) if y != x and (x, y) not in arcs]
        y = rng.choice(targets) if targets and rng.random() < 0.7 else fresh()
        A_c.append(len(arcs))
        arcs.append((x, y))
    # noise arcs away from v leave the hypothesis unchanged
    for _ in range(rng.randint(0, n)):
        if n > 2:
            x, y = rng.sample(range(1, n), 2)
            if (x, y) not in arcs:
                arcs.append((x, y))
    perm = list(range(n))
    rng.shuffle(perm)
    order = list(range(len(arcs)))
    rng.shuffle(order)
    new_id = {old: i for i, old in enumerate(order)}
    d = Digraph(n, [(perm[arcs[old][0]], perm[arcs[old][1]]) for old in order])
    spec = NetSpec(perm[v], [new_id[a] for a in A], [new_id[a] for a in A_f],
                   [new_id[a] for a in A_c])
    return d, spec


# -- reports ---------------------------------------------------------------------

def _dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


@dataclass
class SweepReport:
    config: dict
    records: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def instance_count(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> bool:
        return not self.violations

    def canonical_bytes(self) -> bytes:
        return "".join(_dumps(r) + "\n" for r in self.records).encode()

    def summary(self) -> dict:
        return {"config": self.config, "instance_count": self.instance_count,
                "violations": self.violations, "pass": self.passed, "timing": self.timing}


def _violation(record: dict) -> dict:
    keys = ("index", "encoding", "chi", "h", "certificate", "error", "suite", "detail")
    return {k: record[k] for k in keys if k in record}


# -- sweep ---------------------------------------------------------------------

@dataclass(frozen=True)
class SweepConfig:
    n: int
    mode: str = "exhaustive"      # exhaustive | samples | tournaments
    samples: int = 0
    seed: int = 0
    exact_h: bool = True

    def count(self) -> int:
        pairs = len(vertex_pairs(self.n))
        if self.mode == "exhaustive":
            if self.n > get_cap("enumerate"):
                raise CapExceeded(f"exhaustive enumeration capped at n={get_cap('enumerate')}")
            return STATES ** pairs
        if self.mode == "tournaments":
            if self.n > get_cap("tournaments"):
                raise CapExceeded(f"tournament enumeration capped at n={get_cap('tournaments')}")
            return 2 ** pairs
        if self.mode == "samples":
            return self.samples
        raise ValueError(f"unknown sweep mode {self.mode!r}")

    def instance(self, index: int) -> Digraph:
        if self.mode == "exhaustive":
            return nth_digraph(self.n, index)
        if self.mode == "tournaments":
            return nth_tournament(self.n, index)
        return random_digraph(random.Random(self.seed ^ index), self.n)


def check_instance(d: Digraph, exact_h: bool = True) -> dict:
    """chi(X(D)), the Claim 1 bound, the extracted minor and (within cap) h exactly."""
    rec: dict = {"encoding": encode_digraph(d)}
    try:
        x = three_arc_graph(d).graph
        chi = chromatic_number(x).k
        collapsed, _ = collapse_parallel(d)
        reduced, _ = remove_redundant(collapsed)
        bound = chromatic_number(underlying_graph(reduced)).k
        res = extract_minor(d)
        verified = bool(verify_certificate(x, res.certificate))
        h, exact = res.k, False
        if exact_h and x.n <= get_cap("hadwiger"):
            h, exact = max(h, hadwiger_exact(x).h), True
        rec.update(chi=chi, claim1=bound, k=res.k, h=h, h_exact=exact, label=res.label,
                   verified=verified)
        ok = verified and res.k >= chi and h >= chi and chi <= bound
        if d.is_tournament() and d.n >= 5:
            rec["lemma1"] = bool(verify_certificate(x, tournament_minor(d)))
            ok = ok and rec["lemma1"]
        if not ok:
            rec["certificate"] = certificate_lines(res.certificate)
    except ThreeArcError as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
        ok = False
    rec["pass"] = ok
    return rec


def _sweep_item(args) -> dict:
    config, index = args
    rec = check_instance(config.instance(index), config.exact_h)
    return {"index": index, **rec}


def _load_done(path: Path) -> list[dict]:
    """Complete records of an earlier run, in index order."""
    if not path.exists():
        return []
    done = []
    for line in path.read_text().splitlines():
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            break
        if rec.get("index") != len(done):
            break
        done.append(rec)
    return done


def sweep_verify(config: SweepConfig, out=None, jobs: int = 1) -> SweepReport:
    """Check every instance of ``config``; with ``out`` append records as
    they finish and resume after the last complete line."""
    start = time.perf_counter()
    total = config.count()
    path = Path(out) if out is not None else None
    records = _load_done(path) if path is not None else []
    if path is not None:
        path.write_text("".join(_dumps(r) + "\n" for r in records))
    resumed = len(records)
    todo = [(config, i) for i in range(resumed, total)]
    sink = path.open("a") if path is not None else None
    try:
        if jobs > 1 and todo:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_sweep_item, todo, chunksize=max(1, len(todo) // (jobs * 16)))
                for rec in results:
                    records.append(rec)
                    if sink:
                        sink.write(_dumps(rec) + "\n")
        else:
            for item in todo:
                rec = _sweep_item(item)
                records.append(rec)
                if sink:
                    sink.write(_dumps(rec) + "\n")
                    sink.flush()
    finally:
        if sink:
            sink.close()
    report = SweepReport(asdict(config), records, [_violation(r) for r in records if not r["pass"]])
    report.timing = {"seconds": round(time.perf_counter() - start, 3), "resumed": resumed,
                     "jobs": jobs}
    return report


# -- lemma suites ------------------------------------------------------------------

def _trial_lemma1(rng):
    d = random_tournament(rng, rng.randint(5, 8))
    cert = tournament_minor(d)
    ok = cert.p == d.n and bool(verify_certificate(three_arc_graph(d).graph, cert))
    return ok, encode_digraph(d), ""


def _net_trial(case):
    def trial(rng):
        d, spec = random_net_instance(rng, case)
        net = build_net(spec, d)
        A = set(spec.A)
        one_each = all(len(s & A) == 1 for s in net.branch_arc_sets)
        verdict = verify_certificate(three_arc_graph(d).graph, net.to_minor_certificate())
        ok = net.case == case and len(net.branch_arc_sets) == spec.p and one_each and bool(verdict)
        return ok, encode_arcs(d), f"case={net.case} {verdict.clause or ''}".strip()
    return trial


def _trial_lemma6(rng):
    d = random_digraph(rng, rng.randint(1, 8))
    sc = score_arcs(d)
    direct = sum(d.out_degree(x) * (d.degree(x) - 1) for x in range(d.n))
    return sc.lhs_sum == sc.rhs_sum == direct, encode_digraph(d), f"{sc.lhs_sum} vs {direct}"


def _trial_lemma7(rng):
    n = rng.randint(6, 9)
    g = random_graph(rng, n, rng.uniform(0.3, 0.9))
    k = chromatic_number(g).k
    crit = critical_subgraph(g, k)
    h = crit.graph
    sub = all(g.has_edge(a, b) for a, b in crit.original_edges())
    ok = sub and chromatic_number(h).k == k and h.min_degree() >= k - 1
    if ok and k >= 3 and not h.is_complete():
        ok = clique_cutset(h) is None
    return ok, f"{n}|" + ",".join(f"{a}-{b}" for a, b in g.sorted_edges()), f"k={k}"


def _trial_claim1(rng):
    d = random_digraph(rng, rng.randint(2, 6))
    reduced, _ = remove_redundant(d)
    c = chromatic_number(underlying_graph(reduced))
    x = three_arc_graph(d).graph
    lifted = lift_coloring(d, reduced, c)
    ok = is_proper_coloring(x, lifted.colors) and chromatic_number(x).k <= c.k
    return ok, encode_digraph(d), f"chi(G')={c.k}"


def _trial_property_a(rng):
    d = random_digraph(rng, rng.randint(4, 8))
    reduced, _ = remove_redundant(d)
    g = underlying_graph(reduced)
    k = chromatic_number(g).k
    crit = critical_subgraph(g, k)
    h = Graph(g.n, crit.original_edges())
    orient = orient_with_property_a(h, d, crit.vertices)
    bad = property_a_violations(orient.F, d, crit.vertices)
    return not bad, encode_digraph(d), f"bad={bad}"


def _trial_extract(rng):
    d = random_digraph(rng, rng.randint(1, 6))
    x = three_arc_graph(d).graph
    res = extract_minor(d)
    chi = chromatic_number(x).k
    ok = res.k >= chi and bool(verify_certificate(x, res.certificate))
    return ok, encode_digraph(d), f"chi={chi} k={res.k} {res.label}"


def _trial_family(rng):
    name, base, _ = rng.choice(family_bases())
    d = family_instance(rng, base)
    reduced, _ = remove_redundant(collapse_parallel(d)[0])
    bound = chromatic_number(underlying_graph(reduced)).k  # chi(G') <= k, >= chi(X(D))
    res = extract_minor(d)
    ok = res.k >= bound and bool(verify_certificate(three_arc_graph(d).graph, res.certificate))
    return ok, encode_arcs(d), f"{name} chi(G')={bound} k={res.k} {res.label}"


SUITES = {
    "lemma1": _trial_lemma1,
    **{f"lemma2.case{c}": _net_trial(c) for c in range(1, 7)},
    "lemma6": _trial_lemma6,
    "lemma7": _trial_lemma7,
    "claim1": _trial_claim1,
    "property_a": _trial_property_a,
    "extract": _trial_extract,
    "family": _trial_family,
}

# the k >= 7 family is slow; it runs on a tenth of the iterations
_SCALE = {"family": 10}


def run_suite(name: str, seed: int, iterations: int) -> dict:
    trial = SUITES[name]
    failures = []
    for i in range(iterations):
        rng = random.Random(f"{name}/{seed}/{i}")
        try:
            ok, enc, detail = trial(rng)
        except ThreeArcError as exc:
            ok, enc, detail = False, "", f"{type(exc).__name__}: {exc}"
        if not ok:
            failures.append({"index": i, "encoding": enc, "detail": detail})
    return {"suite": name, "checked": iterations, "passed": iterations - len(failures),
            "failures": failures}


def fault_injection(seed: int, copies: int = 20) -> dict:
    """Among ``copies`` valid certificates exactly one is corrupted; the
    verifier must flag exactly that one, with the matching clause."""
    rng = random.Random(f"fault/{seed}")
    d = random_tournament(rng, 5)
    x = three_arc_graph(d).graph
    good = tournament_minor(d)
    bad_index = rng.randrange(copies)
    kind = rng.choice(("disjoint", "nonempty", "range"))
    sets = [set(b) for b in good.branch_sets]
    if kind == "disjoint":
        sets[0].add(min(sets[1]))
    elif kind == "nonempty":
        sets[rng.randrange(len(sets))].clear()
    else:
        sets[0].add(x.n)
    bad = MinorCertificate(sets)
    flagged = []
    for i in range(copies):
        verdict = verify_certificate(x, bad if i == bad_index else good)
        if not verdict:
            flagged.append((i, verdict.clause))
    ok = flagged == [(bad_index, kind)]
    return {"suite": "fault", "checked": copies, "passed": copies if ok else copies - 1,
            "failures": [] if ok else [{"index": bad_index, "encoding": encode_digraph(d),
                                        "detail": f"expected {kind}, flagged {flagged}"}]}


def lemma_property_suite(seed: int, iterations: int, suites=None) -> SweepReport:
    start = time.perf_counter()
    names = list(SUITES) if suites is None else list(suites)
    records = []
    for name in names:
        records.append(run_suite(name, seed, max(1, iterations // _SCALE.get(name, 1))))
    records.append(fault_injection(seed))
    violations = [{"suite": r["suite"], **f} for r in records for f in r["failures"]]
    report = SweepReport({"seed": seed, "iterations": iterations, "suites": names}, records,
                         violations)
    report.timing = {"seconds": round(time.perf_counter() - start, 3)}
    return report


def operator_check(max_n: int = 5) -> dict:
    """X(biorient(G)) against the 3-arc construction for all graphs on <= max_n vertices."""
    checked, bad = 0, []
    for n in range(max_n + 1):
        pairs = vertex_pairs(n)
        for mask in range(1 << len(pairs)):
            g = Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            if three_arc_graph(biorient(g)).graph != three_arc_graph_undirected(g).graph:
                bad.append(f"{n}:{mask}")
            checked += 1
    return {"suite": "operator", "checked": checked, "passed": checked - len(bad),
            "failures": bad}

