import json

import pytest

from threearc.errors import CapExceeded
from threearc.harness import (SweepConfig, decode_digraph, encode_digraph, enumerate_digraphs,
                              enumerate_tournaments, fault_injection, lemma_property_suite,
                              nth_digraph, nth_tournament, run_suite, sweep_verify)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 64)])
def test_enumeration_counts(n, count):
    ds = list(enumerate_digraphs(n))
    assert len(ds) == count
    assert len({encode_digraph(d) for d in ds}) == count


def test_enumeration_order_and_index():
    ds = list(enumerate_digraphs(3))
    assert [encode_digraph(d) for d in ds[:5]] == ["3:000", "3:001", "3:002", "3:003", "3:010"]
    assert all(encode_digraph(nth_digraph(3, i)) == encode_digraph(d) for i, d in enumerate(ds))
    assert decode_digraph("3:013").arc_pairs() == [(0, 2), (1, 2), (2, 1)]


@pytest.mark.parametrize("n,count", [(3, 8), (4, 64), (5, 1024)])
def test_tournament_counts(n, count):
    ts = list(enumerate_tournaments(n))
    assert len(ts) == count and all(t.is_tournament() for t in ts)
    assert encode_digraph(nth_tournament(n, count - 1)) == encode_digraph(ts[-1])


def test_caps(monkeypatch):
    monkeypatch.setenv("X3_CAPS", "enumerate=2,tournaments=3")
    with pytest.raises(CapExceeded):
        next(enumerate_digraphs(3))
    with pytest.raises(CapExceeded):
        next(enumerate_tournaments(4))
    monkeypatch.setenv("X3_CAPS", "bogus=1")
    with pytest.raises(ValueError):
        next(enumerate_digraphs(2))


def test_sweep_small_exhaustive():
    report = sweep_verify(SweepConfig(3))
    assert report.instance_count == 64 and report.passed
    rec = report.records[-1]
    assert rec["encoding"] == "3:333" and rec["h"] >= rec["chi"] and rec["h_exact"]


def test_sweep_tournaments_have_lemma1():
    report = sweep_verify(SweepConfig(5, "tournaments"))
    assert report.passed and report.instance_count == 1024
    assert all(r["lemma1"] for r in report.records)


def test_sweep_deterministic_and_parallel():
    cfg = SweepConfig(5, "samples", 40, seed=9)
    a = sweep_verify(cfg)
    b = sweep_verify(cfg, jobs=2)
    assert a.canonical_bytes() == b.canonical_bytes()
    assert sweep_verify(SweepConfig(5, "samples", 40, seed=10)).canonical_bytes() != a.canonical_bytes()


def test_sweep_resume(tmp_path):
    cfg = SweepConfig(4, "samples", 30, seed=1)
    path = tmp_path / "r.jsonl"
    full = sweep_verify(cfg, out=path).canonical_bytes()
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:12]) + "\n" + lines[12][:7])  # torn last line
    again = sweep_verify(cfg, out=path)
    assert again.timing["resumed"] == 12
    assert path.read_bytes() == full == again.canonical_bytes()
    assert all(json.loads(line)["pass"] for line in path.read_text().splitlines())


def test_violation_recorded():
    from threearc.harness import SweepReport, _violation
    rec = {"index": 3, "encoding": "2:1", "chi": 2, "h": 1, "pass": False, "label": "x"}
    report = SweepReport({}, [rec], [_violation(rec)])
    assert not report.passed and report.violations[0]["h"] == 1


def test_fault_injection_flags_one():
    for seed in range(10):
        r = fault_injection(seed)
        assert r["passed"] == r["checked"] and not r["failures"]


def test_lemma_suite_small_and_stable():
    a = lemma_property_suite(4, 30)
    b = lemma_property_suite(4, 30)
    assert a.passed and a.canonical_bytes() == b.canonical_bytes()
    assert {r["suite"] for r in a.records} >= {"lemma1", "lemma2.case6", "lemma6", "lemma7",
                                                "claim1", "property_a", "fault"}


def test_run_suite_counts():
    r = run_suite("lemma6", 0, 25)
    assert r == {"suite": "lemma6", "checked": 25, "passed": 25, "failures": []}
