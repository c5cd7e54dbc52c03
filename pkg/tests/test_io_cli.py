import json

import pytest
from hypothesis import given, settings, strategies as st

from pathsep.cli import main
from pathsep.generators import gen_complete, gen_gnp, gen_hypercube
from pathsep.graph import PathFamily
from pathsep.io import ParseError, emit_family, emit_graph, parse_family, parse_graph, read_graph, write_atomic


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.floats(0.0, 1.0), st.integers(0, 10**6))
def test_graph_round_trip(n, p, seed):
    g = gen_gnp(n, p, seed)
    h = parse_graph(emit_graph(g))
    assert (h.n, h.edges) == (g.n, g.edges)


def test_family_round_trip():
    g = gen_complete(5)
    fam = PathFamily(g, [[0, 1, 2], [4, 3], [2, 0, 4, 1]])
    again = parse_family(emit_family(fam), g)
    assert again.vertex_lists() == fam.vertex_lists()


def test_comments_and_blank_lines():
    g = parse_graph("# triangle\n3 3\n\n0 1\n1 2  # spoke\n0 2\n")
    assert g.m == 3


@pytest.mark.parametrize("text, line, word", [
    ("3 2\n0 1\n", 2, "found 1"),
    ("3 2\n0 1\n1 x\n", 3, "integers"),
    ("3 2\n0 1\n1 1\n", 3, "self-loop"),
    ("3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("3 1\n0 3\n", 2, "out of range"),
    ("3\n", 1, "header"),
    ("", 1, "empty"),
])
def test_graph_errors(text, line, word):
    with pytest.raises(ParseError, match=word) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_family_errors():
    g = gen_complete(4)
    with pytest.raises(ParseError) as info:
        parse_family("0 1 2\n\n0 1 0\n", g)
    assert info.value.line == 3


def test_write_atomic(tmp_path):
    target = tmp_path / "g.txt"
    write_atomic(str(target), "1 0\n")
    write_atomic(str(target), "2 1\n0 1\n")
    assert target.read_text() == "2 1\n0 1\n"
    assert [p.name for p in tmp_path.iterdir()] == ["g.txt"]


@pytest.fixture
def q3file(tmp_path):
    path = tmp_path / "q3.txt"
    path.write_text(emit_graph(gen_hypercube(3)))
    return path


def test_gen(tmp_path, capsys):
    out = tmp_path / "k5.txt"
    assert main(["gen", "complete", "5", "-o", str(out)]) == 0
    assert read_graph(str(out)).m == 10
    assert main(["gen", "gnp", "20", "0.3", "--seed", "4"]) == 0
    assert parse_graph(capsys.readouterr().out).edges == gen_gnp(20, 0.3, 4).edges


def test_construct_then_verify(tmp_path, q3file, capsys):
    fam = tmp_path / "fam.txt"
    assert main(["construct", str(q3file), "-o", str(fam), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verified"] and report["method"] == "hypercube" and report["m"] == 12
    assert report["t"] >= report["entropy_lb"]
    assert set(report) == {"method", "n", "m", "t", "claimed_bound", "entropy_lb", "verified",
                           "retries", "patched", "seed", "runtime_ms"}
    assert main(["verify", str(q3file), str(fam)]) == 0


def test_construct_to_stdout(q3file, capsys):
    assert main(["construct", str(q3file), "--method", "general"]) == 0
    cap = capsys.readouterr()
    assert len(cap.out.splitlines()) > 0 and "verified" in cap.err


def test_construct_output_is_reproducible(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text(emit_graph(gen_gnp(40, 0.3, 2)))
    outs = []
    for name in ("a", "b"):
        path = tmp_path / name
        assert main(["construct", str(g), "--seed", "7", "-o", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    capsys.readouterr()


def test_verify_reports_failure(tmp_path, q3file, capsys):
    fam = tmp_path / "bad.txt"
    fam.write_text("0 1 3 2\n")
    assert main(["verify", str(q3file), str(fam), "--json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert not data["is_separator"] and data["uncovered_edges"]


def test_bounds_exact_simulate(tmp_path, q3file, capsys):
    assert main(["bounds", str(q3file), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["hypercube_lb"] == pytest.approx(3.658614968981457)
    small = tmp_path / "c4.txt"
    small.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert main(["exact", str(small), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["psn"] == 4
    big = tmp_path / "k6.txt"
    big.write_text(emit_graph(gen_complete(6)))
    assert main(["exact", str(big)]) == 2
    assert "exact-solver limit" in capsys.readouterr().err
    fam = tmp_path / "fam.txt"
    main(["construct", str(q3file), "-o", str(fam)])
    capsys.readouterr()
    assert main(["simulate", str(q3file), str(fam), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["identification_rate"] == 1.0 and data["no_fault_correct"]
    assert main(["simulate", str(q3file), str(fam), "--fail", "none", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["trials"] == 0


def test_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert main(["bounds", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_bench(capsys):
    assert main(["bench", "hypercube", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["instance"] for r in rows] == [f"Q{d}" for d in range(2, 9)]
    assert all(r["verified"] for r in rows)
