import pytest
from hypothesis import given

from conftest import multi_digraphs
from threearc import io
from threearc.cli import main
from threearc.coloring import chromatic_number
from threearc.errors import ImproperInput
from threearc.graph_core import Graph, biorient, complete_graph, cycle_graph
from threearc.minors import MinorCertificate
from threearc.three_arc import three_arc_graph


@given(multi_digraphs())
def test_arc_list_round_trip(d):
    assert io.parse_digraph(io.format_digraph(d)) == d


def test_comments_and_errors():
    d = io.parse_digraph("# header\n3 2  # n m\n0 1\n\n1 2 # arc\n")
    assert d.arc_pairs() == [(0, 1), (1, 2)]
    with pytest.raises(ImproperInput):
        io.parse_digraph("3 2\n0 1\n")
    with pytest.raises(ImproperInput):
        io.parse_digraph("2 1\n0 0\n")
    with pytest.raises(ImproperInput):
        io.parse_digraph("2 1\n0 x\n")


def test_graph_format_and_dot():
    g = cycle_graph(4)
    assert io.parse_graph(io.format_graph(g)) == g
    dot = io.to_dot(g)
    assert dot.splitlines()[5:] == ["  0 -- 1;", "  0 -- 3;", "  1 -- 2;", "  2 -- 3;", "}"]
    ddot = io.to_dot(biorient(Graph(2, [(0, 1)])))
    assert "0 -> 1 [id=0];" in ddot and ddot.index("0 -> 1") < ddot.index("1 -> 0")


def test_sidecar():
    x = three_arc_graph(biorient(Graph(2, [(0, 1)])))
    assert io.format_sidecar(x) == "0 0 1\n1 1 0\n"


def test_certificate_round_trip():
    cert = MinorCertificate([[3, 1], [0], [2, 5, 4]])
    text = io.format_certificate(cert)
    assert text == "3\n1 3\n0\n2 4 5\n"
    assert io.parse_certificate(text) == cert
    assert io.format_certificate(io.parse_certificate(text)) == text
    # net certificates carry one extra header line
    assert io.parse_certificate("0 2 0 1\n" + text) == cert
    with pytest.raises(ImproperInput):
        io.parse_certificate("2\n0\n")


def test_coloring_round_trip():
    c = chromatic_number(cycle_graph(5))
    assert io.parse_coloring(io.format_coloring(c)) == c


@pytest.fixture
def k5(tmp_path):
    path = tmp_path / "k5.txt"
    path.write_text(io.format_digraph(biorient(complete_graph(5))))
    return path


def test_cli_extract_verify(k5, tmp_path, capsys):
    cert = tmp_path / "k5.cert"
    assert main(["extract", str(k5), "-o", str(cert)]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert "result: k=5 via tournament" in (tmp_path / "k5.cert.trace").read_text()
    assert main(["verify", str(k5), str(cert)]) == 0
    bad = tmp_path / "bad.cert"
    bad.write_text("2\n0\n0\n")
    assert main(["verify", str(k5), str(bad)]) == 1
    assert "disjoint" in capsys.readouterr().out


def test_cli_queries(k5, tmp_path, capsys):
    assert main(["chi", str(k5)]) == 0
    assert main(["chi3", str(k5), "--coloring", str(tmp_path / "c.txt")]) == 0
    assert main(["hadwiger", str(k5)]) == 0
    assert capsys.readouterr().out.split() == ["5", "4", "5"]  # chi(X(K5)) = 4 < 5
    assert len((tmp_path / "c.txt").read_text().splitlines()) == 20
    assert main(["build", str(k5), "--sidecar", str(tmp_path / "m.txt")]) == 0
    assert capsys.readouterr().out.startswith("20 ")
    assert main(["build", str(k5), "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph X {")
    assert main(["critical", str(k5)]) == 0
    assert capsys.readouterr().out.startswith("5 10\n")


def test_cli_sweep_and_lemmas(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert main(["sweep", "--n", "3", "--exhaustive", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 64
    assert main(["sweep", "--n", "4", "--samples", "10", "--seed", "2", "--jobs", "2"]) == 0
    assert main(["lemmas", "--seed", "1", "--iters", "10"]) == 0
    assert capsys.readouterr().out.rstrip().endswith("PASS")


def test_cli_bad_input(tmp_path, monkeypatch):
    assert main(["chi", str(tmp_path / "missing")]) == 2
    monkeypatch.setenv("X3_CAPS", "enumerate=2")
    assert main(["sweep", "--n", "3"]) == 2
