"""Exhaustive check of h(X(D)) >= chi(X(D)) for all digraphs on 3 vertices
and a sampled check on 5 vertices; reports go to /tmp."""

from threearc.harness import SweepConfig, sweep_verify

for cfg, out in ((SweepConfig(3), "/tmp/x3_n3.jsonl"),
                 (SweepConfig(5, "samples", 200, seed=1), "/tmp/x3_n5.jsonl")):
    rep = sweep_verify(cfg, out=out)
    worst = min(r["h"] - r["chi"] for r in rep.records)
    print(f"{cfg.mode} n={cfg.n}: {rep.instance_count} digraphs, "
          f"{len(rep.violations)} violations, min h - chi = {worst}, report {out}")
