"""Command line interface: ``x3 <command> ...``.

Exit status is 0 when nothing failed, 1 when a check found a violation and
2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .coloring import chromatic_number, critical_subgraph
from .errors import ExtractionIncomplete, ThreeArcError
from .extractor import extract_minor
from .graph_core import underlying_graph
from .harness import SweepConfig, lemma_property_suite, sweep_verify
from .minors import hadwiger_exact, verify_certificate
from .three_arc import three_arc_graph


def _out(text: str, path=None) -> None:
    if path:
        io.write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    d = io.read_digraph(args.input)
    x = three_arc_graph(d)
    _out(io.to_dot(x.graph, "X") if args.dot else io.format_graph(x.graph), args.output)
    if args.sidecar:
        io.write_text(args.sidecar, io.format_sidecar(x))
    return 0


def cmd_chi(args) -> int:
    g = underlying_graph(io.read_digraph(args.input))
    c = chromatic_number(g)
    print(c.k)
    if args.coloring:
        io.write_text(args.coloring, io.format_coloring(c))
    return 0


def cmd_chi3(args) -> int:
    c = chromatic_number(three_arc_graph(io.read_digraph(args.input)).graph)
    print(c.k)
    if args.coloring:
        io.write_text(args.coloring, io.format_coloring(c))
    return 0


def cmd_critical(args) -> int:
    g = underlying_graph(io.read_digraph(args.input))
    crit = critical_subgraph(g, chromatic_number(g).k)
    edges = crit.original_edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{x} {y}" for x, y in edges]
    _out("\n".join(lines) + "\n", args.output)
    return 0


def cmd_hadwiger(args) -> int:
    d = io.read_digraph(args.input)
    g = three_arc_graph(d).graph if args.three_arc else underlying_graph(d)
    res = hadwiger_exact(g)
    print(res.h if res.exact else f"{res.h} (lower bound)")
    if args.output:
        io.write_text(args.output, io.format_certificate(res.certificate))
    return 0


def cmd_extract(args) -> int:
    d = io.read_digraph(args.input)
    trace_path = args.trace or f"{args.output}.trace"
    try:
        res = extract_minor(d)
    except ExtractionIncomplete as exc:
        io.write_text(args.output, io.format_certificate(exc.certificate))
        io.write_text(trace_path, "\n".join(exc.trace) + "\n")
        print(f"incomplete: {exc}", file=sys.stderr)
        return 1
    io.write_text(args.output, io.format_certificate(res.certificate))
    io.write_text(trace_path, "\n".join(res.trace) + "\n")
    print(res.k)
    return 0


def cmd_verify(args) -> int:
    d = io.read_digraph(args.graph)
    cert = io.read_certificate(args.cert)
    g = underlying_graph(d) if args.plain else three_arc_graph(d).graph
    verdict = verify_certificate(g, cert)
    if verdict:
        print(f"ok: K_{cert.p} minor")
        return 0
    print(f"violation: {verdict.clause} {list(verdict.indices)} {verdict.detail}")
    return 1


def cmd_sweep(args) -> int:
    if args.tournaments:
        mode = "tournaments"
    elif args.samples is not None:
        mode = "samples"
    else:
        mode = "exhaustive"
    config = SweepConfig(args.n, mode, args.samples or 0, args.seed, not args.no_exact)
    report = sweep_verify(config, out=args.output, jobs=args.jobs)
    print(json.dumps(report.summary(), sort_keys=True))
    return 0 if report.passed else 1


def cmd_lemmas(args) -> int:
    report = lemma_property_suite(args.seed, args.iters)
    if args.output:
        Path(args.output).write_bytes(report.canonical_bytes())
    for r in report.records:
        print(f"{r['suite']:<14} {r['passed']}/{r['checked']}")
    print("PASS" if report.passed else f"FAIL: {len(report.violations)} violation(s)")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="x3", description="3-arc graphs and clique minors")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", help="write X(D) as an edge list or DOT")
    s.add_argument("input")
    s.add_argument("--dot", action="store_true")
    s.add_argument("-o", "--output")
    s.add_argument("--sidecar", help="write 'vertex tail head' lines here")
    s.set_defaults(func=cmd_build)

    for name, func, what in (("chi", cmd_chi, "the underlying graph"), ("chi3", cmd_chi3, "X(D)")):
        s = sub.add_parser(name, help=f"chromatic number of {what}")
        s.add_argument("input")
        s.add_argument("--coloring", help="write 'vertex color' lines here")
        s.set_defaults(func=func)

    s = sub.add_parser("critical", help="a k-critical subgraph of the underlying graph")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("hadwiger", help="Hadwiger number of the underlying graph")
    s.add_argument("input")
    s.add_argument("--three-arc", action="store_true", help="use X(D) instead")
    s.add_argument("-o", "--output", help="write the certificate here")
    s.set_defaults(func=cmd_hadwiger)

    s = sub.add_parser("extract", help="clique minor of X(D) of size >= chi(X(D))")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--trace", help="trace log path (default: <output>.trace)")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("verify", help="check a certificate against X(D)")
    s.add_argument("graph")
    s.add_argument("cert")
    s.add_argument("--plain", action="store_true", help="check against the underlying graph")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="check h >= chi over many digraphs")
    s.add_argument("--n", type=int, required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    mode.add_argument("--tournaments", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-exact", action="store_true", help="skip exact Hadwiger numbers")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("lemmas", help="randomized lemma suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iters", type=int, default=1000)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_lemmas)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ThreeArcError, OSError) as exc:
        print(f"x3: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
