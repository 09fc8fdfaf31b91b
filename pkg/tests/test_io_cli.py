import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings

from signedchordal import Digraph, build_graph
from signedchordal.cli import main, parse_bounds
from signedchordal.errors import GraphParseError
from signedchordal.io import (
    format_digraph,
    format_graph,
    graph_to_json,
    parse_digraph,
    parse_graph,
    to_dot,
)

from test_graph import signed_graphs

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def golden(name):
    return os.path.join(GOLDEN, name)


def read(name):
    with open(golden(name), encoding="utf-8") as fh:
        return fh.read()


# file format

def test_format_is_sorted_and_stable():
    g = build_graph(3, [(2, 1, "-"), (0, 1, "+")], labels=["a", None, "c c"])
    text = format_graph(g)
    assert text == "signedgraph 1\nv 0 a\nv 1\nv 2 c c\ne 0 1 +\ne 1 2 -\n"
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_parse_accepts_comments_blank_lines_and_unicode_minus():
    g = parse_graph("# hi\n\nsignedgraph 1\n# edges\ne 0 1 −\n")
    assert g.n == 2 and g.sign(0, 1).value == "-" and g.labels is None


def test_isolated_vertices_survive():
    g = build_graph(4, [(0, 1, "+")])
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text,line", [
    ("graph 1\ne 0 1 +\n", 1),
    ("signedgraph 1\ne 0 1 +\ne 1 1 -\n", 3),
    ("signedgraph 1\ne 0 1 *\n", 2),
    ("signedgraph 1\ne 0 1\n", 2),
    ("signedgraph 1\nx 0 1\n", 2),
    ("signedgraph 1\ne 0 1 +\ne 1 0 -\n", 3),
    ("signedgraph 1\nv 0\nv 0\n", 3),
    ("signedgraph 1\ne a 1 +\n", 2),
    ("", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_json_mirror():
    g = build_graph(3, [(0, 1, "+"), (1, 2, "-")], labels=["p", "q", "r"])
    text = graph_to_json(g)
    assert json.loads(text)["edges"] == [[0, 1, "+"], [1, 2, "-"]]
    assert parse_graph(text) == g
    with pytest.raises(GraphParseError):
        parse_graph('{"n": 2, "edges": [[0, 0, "+"]]}')
    with pytest.raises(GraphParseError):
        parse_graph('{"n": 2, ')


def test_digraph_format():
    d = Digraph(3, [(0, 1), (1, 0), (2, 1)])
    assert parse_digraph(format_digraph(d)) == d
    assert parse_digraph('{"n": 3, "arcs": [[0, 1], [1, 0], [2, 1]]}') == d
    with pytest.raises(GraphParseError):
        parse_digraph("signedgraph 1\ne 0 1 +\n")
    with pytest.raises(GraphParseError):
        parse_digraph("signedgraph 1\na 0 1\na 0 1\n")


def test_dot_colours():
    dot = to_dot(build_graph(3, [(0, 1, "+"), (1, 2, "-")], labels=['say "hi"', None, None]))
    assert "0 -- 1 [color=blue" in dot and "1 -- 2 [color=red" in dot
    assert r'label="say \"hi\""' in dot


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=8))
def test_round_trip_property(g):
    assert parse_graph(format_graph(g)) == g
    assert parse_graph(graph_to_json(g)) == g


def test_parse_bounds():
    assert parse_bounds("3,3") == {"pairs": [(3, 3)]}
    assert parse_bounds("2,2;3,4") == {"pairs": [(2, 2), (3, 4)]}
    assert parse_bounds("7") == {"max_n": 7}
    assert parse_bounds('{"max_n": 5, "canonical": false}') == {"max_n": 5, "canonical": False}
    assert parse_bounds(None) is None


# golden command-line behaviour

def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize_k33(capsys):
    code, out, _ = run(["recognize", golden("k33.sg")], capsys)
    assert code == 0 and out == read("k33.recognize.out")
    assert len(out.splitlines()) == 9


def test_recognize_negative_c4(capsys):
    code, out, _ = run(["recognize", golden("neg_c4.sg")], capsys)
    assert code == 1 and out == read("neg_c4.recognize.out")


def test_recognize_loop_is_input_error(capsys):
    code, out, err = run(["recognize", golden("loop.sg")], capsys)
    assert code == 2 and out == "" and "line 3" in err


def test_recognize_missing_file(capsys):
    code, _, err = run(["recognize", golden("nope.sg")], capsys)
    assert code == 2 and err


def test_recognize_graph_and_digraph_modes(capsys):
    code, out, _ = run(["recognize", "--mode", "graph", golden("k33.sg")], capsys)
    assert code == 1
    code, out, _ = run(["recognize", "--mode", "digraph", golden("directed_c4.dg")], capsys)
    assert code == 1
    code, out, _ = run(["recognize", "--mode", "digraph", golden("symmetric_k3.dg")], capsys)
    assert code == 0 and out.split() == ["0", "1", "2"]


def test_witness_golden(capsys):
    code, out, _ = run(["witness", golden("neg_c4_pendant.sg")], capsys)
    assert code == 0 and out == read("neg_c4_pendant.witness.out")
    assert sum(1 for line in out.splitlines() if line.startswith("pair")) == 4
    code, out, _ = run(["witness", golden("c8.sg")], capsys)
    assert code == 0 and out == read("c8.witness.out")


def test_witness_json(capsys):
    code, out, _ = run(["witness", "--json", golden("c8.sg")], capsys)
    data = json.loads(out)
    assert code == 0 and data["tag"] == "C2k k=4" and len(data["embedding"]) == 8


def test_witness_on_chordal_input(capsys):
    code, out, err = run(["witness", golden("k33.sg")], capsys)
    assert code == 3 and out == "" and "chordal" in err


def test_export_dot_golden(capsys, tmp_path):
    code, out, _ = run(["export-dot", golden("neg_c4.sg")], capsys)
    assert code == 0 and out == read("neg_c4.dot")
    assert out.count("color=red") == 4
    target = tmp_path / "g.dot"
    assert run(["export-dot", golden("neg_c4.sg"), "-o", str(target)], capsys)[0] == 0
    assert target.read_text() == read("neg_c4.dot")


def test_catalog_f1(capsys, tmp_path):
    code, _, _ = run(["catalog", "--family", "F1", "--outdir", str(tmp_path)], capsys)
    files = sorted(p.name for p in tmp_path.iterdir())
    assert code == 0 and files == ["F1_000.sg", "manifest.tsv"]
    rows = (tmp_path / "manifest.tsv").read_text().splitlines()
    assert rows == ["file\tfamily\tparams\tvertices\tedges", "F1_000.sg\tF1\t-\t4\t4"]
    assert parse_graph((tmp_path / "F1_000.sg").read_text()) == parse_graph(read("neg_c4.sg"))


def test_catalog_parametric_and_json(capsys, tmp_path):
    code, _, _ = run(["catalog", "--family", "C2k", "--params", "k=3", "--format", "json",
                      "--outdir", str(tmp_path)], capsys)
    names = [p.name for p in tmp_path.iterdir() if p.suffix == ".json"]
    assert code == 0 and len(names) == 13
    code, _, err = run(["catalog", "--family", "C2k", "--params", "k=1",
                        "--outdir", str(tmp_path)], capsys)
    assert code == 2 and err


def test_verify_comp(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(["verify", "--suite", "comp", "--bounds", "3,3",
                        "--output", str(out_file)], capsys)
    assert code == 0 and "result ok" in out
    assert json.loads(out_file.read_text())["discrepancy_count"] == 0


def test_verify_json_and_seed(capsys):
    code, out, _ = run(["verify", "--suite", "main", "--bounds", '{"sample": 50}',
                        "--seed", "4", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["bounds"]["seed"] == 4


def test_verify_budget_is_input_error(capsys, monkeypatch):
    monkeypatch.setenv("SIGNEDCHORDAL_BUDGET", "10")
    code, _, err = run(["verify", "--suite", "comp", "--bounds", "3,3"], capsys)
    assert code == 2 and "budget" in err


def test_verify_bad_bounds(capsys):
    assert run(["verify", "--suite", "comp", "--bounds", "3,3,3"], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signedchordal", "recognize", golden("neg_c4.sg")],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "not chordal\n"
