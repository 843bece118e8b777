import csv

import pytest

from p5color.cli import main
from p5color.dimacs import read_dimacs, write_dimacs
from p5color.graph import Graph, complete_graph, cycle_graph, path_graph

from oracles import house


@pytest.fixture
def files(tmp_path):
    def write(name, g):
        path = tmp_path / name
        path.write_text(write_dimacs(g))
        return str(path)

    return write


def report(text):
    fields = {}
    for line in text.splitlines():
        key, sep, value = line.partition(": ")
        if sep:
            fields[key] = value
    return fields


def test_solve_c5(files, capsys, tmp_path):
    c5 = files("c5.col", cycle_graph(5))
    assert main(["solve", c5, "--k", "3"]) == 0
    out = capsys.readouterr().out
    assert report(out)["decision"] == "sat"
    colouring = tmp_path / "c5.sol"
    colouring.write_text("\n".join(out.splitlines()[-5:]) + "\n")
    assert main(["verify", c5, str(colouring), "--k", "3"]) == 0
    assert main(["solve", c5, "--k", "2"]) == 1
    assert report(capsys.readouterr().out)["decision"] == "unsat"


def test_solve_writes_colouring_file(files, capsys, tmp_path):
    c5 = files("c5.col", cycle_graph(5))
    sol = tmp_path / "out.sol"
    assert main(["solve", c5, "--k", "3", "--method", "one", "-o", str(sol)]) == 0
    assert report(capsys.readouterr().out)["colouring"] == str(sol)
    assert main(["verify", c5, str(sol)]) == 0
    lines = sol.read_text().splitlines()
    lines[0] = lines[0].split()[0] + " " + lines[1].split()[1]
    sol.write_text("\n".join(lines) + "\n")
    assert main(["verify", c5, str(sol), "--k", "3"]) == 1
    assert "valid: no" in capsys.readouterr().out


def test_solve_refuses_p5(files, capsys):
    p5 = files("p5.col", path_graph(5))
    assert main(["solve", p5, "--k", "3", "--validate", "full"]) == 2
    fields = report(capsys.readouterr().out)
    assert fields["error"] == "not-p5-free"
    assert fields["certificate"] == "1 2 3 4 5"


def test_solve_with_lists(files, capsys, tmp_path):
    k2 = files("k2.col", complete_graph(2))
    lists = tmp_path / "k2.lists"
    lists.write_text("1: 1\n2: 1 2\n")
    assert main(["solve", k2, "--lists", str(lists)]) == 0
    out = capsys.readouterr().out
    assert out.endswith("1 1\n2 2\n")
    lists.write_text("1: 1\n2: 1\n")
    assert main(["solve", k2, "--lists", str(lists)]) == 1


def test_input_errors(tmp_path, capsys, files):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 3\n")
    assert main(["solve", str(bad), "--k", "2"]) == 2
    assert report(capsys.readouterr().out)["error"] == "input"
    assert main(["solve", files("k2.col", complete_graph(2))]) == 2


def test_budget_exit_code(files, capsys):
    g = files("c5.col", cycle_graph(5))
    assert main(["solve", g, "--k", "3", "--max-instances", "1"]) == 3
    assert report(capsys.readouterr().out)["decision"] == "budget-exceeded"


def test_trace_goes_to_stderr(files, capsys):
    g = files("c5.col", cycle_graph(5))
    main(["solve", g, "--k", "3", "--trace"])
    err = capsys.readouterr().err
    assert err.startswith("depth=")


def test_check(files, capsys):
    assert main(["check", files("house.col", house())]) == 0
    assert main(["check", files("k6.col", complete_graph(6))]) == 0
    assert main(["check", files("p5.col", path_graph(5))]) == 1
    out = capsys.readouterr().out
    assert "p5_free: no" in out and "certificate: " in out


def test_gen_multipartite(tmp_path):
    out = tmp_path / "k222.col"
    assert main(["gen", "--family", "multipartite", "--parts", "2,2,2", "-o", str(out)]) == 0
    g = read_dimacs(out.read_text())
    assert (g.n, g.m) == (6, 12)


def test_gen_to_stdout_is_deterministic(capsys):
    main(["gen", "--family", "split", "--n", "12", "--seed", "4"])
    first = capsys.readouterr().out
    main(["gen", "--family", "split", "--n", "12", "--seed", "4"])
    assert capsys.readouterr().out == first
    assert first.startswith("c split n=12 seed=4")


def test_bench_methods_agree(tmp_path):
    manifest = tmp_path / "m.txt"
    manifest.write_text("a cograph n=8 seed=1\nb split n=9 clique=3 p=0.4 seed=2\nc multipartite n=6 parts=2,2,2 seed=0\n")
    out = tmp_path / "bench.csv"
    assert main(["bench", "--corpus", str(manifest), "--k", "3", "-o", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 6
    for one, two in zip(rows[::2], rows[1::2]):
        assert one["graph_id"] == two["graph_id"]
        assert one["decision"] == two["decision"]


def test_verify_rejects_partial_colouring(files, tmp_path, capsys):
    g = files("k2.col", Graph(2, [(0, 1)]))
    sol = tmp_path / "partial.sol"
    sol.write_text("1 1\n")
    assert main(["verify", g, str(sol), "--k", "2"]) == 1
