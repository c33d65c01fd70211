"""Command-line interface: exit-code contract, file I/O, and diagnostics."""

import io

import pytest

from homgames.cli import main
from homgames.formats import from_json, parse_graph, serialize_graph, to_json
from homgames.graphs import claw, clique, cycle_graph, path_graph
from homgames.quantified import EXISTS, FORALL, prefix, qbf
from homgames.edp import EdpInstance


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write, tmp_path


def test_classify_exit_codes(files, capsys):
    write, _ = files
    p = write("claw.graph", serialize_graph(claw()))
    assert main(["classify", "--h", p]) == 0
    assert capsys.readouterr().out.strip() == "EfficientlySolvable"
    p = write("k3.graph", serialize_graph(clique(3)))
    assert main(["classify", "--h", p]) == 0
    assert capsys.readouterr().out.strip() == "ComputationallyHard"


def test_hom_yes_and_no(files, capsys):
    write, _ = files
    c6 = write("c6.graph", serialize_graph(cycle_graph(6)))
    c5 = write("c5.graph", serialize_graph(cycle_graph(5)))
    k2 = write("k2.graph", serialize_graph(clique(2)))
    assert main(["hom", "--g", c6, "--h", k2]) == 0
    assert capsys.readouterr().out.startswith("yes")
    assert main(["hom", "--g", c5, "--h", k2]) == 1
    assert capsys.readouterr().out.strip() == "no"


def test_width_with_certificate(files, capsys, tmp_path):
    write, _ = files
    c5 = write("c5.graph", serialize_graph(cycle_graph(5)))
    cert = str(tmp_path / "cert.json")
    for measure, value in (("pw", 2), ("tw", 2), ("td", 4), ("vsn", 2)):
        assert main(["width", measure, "--g", c5, "--emit", cert]) == 0
        assert capsys.readouterr().out.strip() == str(value)
        from_json(open(cert).read())  # parses back


def test_reduce_chain_and_eval(files, capsys, tmp_path):
    write, _ = files
    f = qbf(prefix((FORALL, 0), (EXISTS, 1)),
            [[(0, True), (1, False)], [(0, False), (1, True)]])
    fin = write("f.qbf", to_json(f))
    out = str(tmp_path / "img.qcsp")
    gout = str(tmp_path / "img.graph")
    cert = str(tmp_path / "img.cert.json")
    assert main(["reduce", "qbf-to-qcsp", "--in", fin, "--out", out,
                 "--emit-graph", gout, "--emit-cert", cert]) == 0
    capsys.readouterr()
    assert main(["qcsp", "eval", "--in", out]) == 0  # the formula is true
    assert capsys.readouterr().out.strip() == "true"
    parse_graph(open(gout).read())
    from_json(open(cert).read())


def test_verify_suite(capsys):
    assert main(["verify", "reduction-3col", "--n", "4", "--r", "1"]) == 0
    out = capsys.readouterr().out
    assert "agrees=true" in out


def test_game_solve(files, capsys):
    write, _ = files
    p3 = write("p3.graph", serialize_graph(path_graph(3)))
    assert main(["game", "solve", "--g", p3, "--k", "2",
                 "--order", "0,2,1"]) == 1
    assert capsys.readouterr().out.strip() == "Universal"
    assert main(["game", "solve", "--g", p3, "--k", "3",
                 "--order", "0,2,1"]) == 0


def test_game_play_scripted(files, capsys, monkeypatch):
    write, _ = files
    p3 = write("p3.graph", serialize_graph(path_graph(3)))
    # human plays Universal second; the blocking reply wins
    monkeypatch.setattr("sys.stdin", io.StringIO("2\n"))
    rc = main(["game", "play", "--g", p3, "--k", "2", "--order", "0,2,1",
               "--role", "Universal"])
    out = capsys.readouterr().out
    assert rc == 0 and "UniversalWon" in out


def test_edp_subcommand(files, capsys):
    write, _ = files
    yes = write("yes.edp", to_json(EdpInstance(cycle_graph(4), ((0, 2), (0, 2)))))
    no = write("no.edp", to_json(EdpInstance(path_graph(3), ((0, 2), (0, 2)))))
    assert main(["edp", "--in", yes]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2
    assert main(["edp", "--in", no]) == 1


def test_gen_counts(capsys):
    assert main(["gen", "prefixes", "--n", "2"]) == 0
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 8


def test_malformed_input_is_exit_2(files, capsys):
    write, _ = files
    bad = write("bad.graph", "e 0 1\n")
    assert main(["width", "pw", "--g", bad]) == 2
    assert "missing n" in capsys.readouterr().err
    assert main(["width", "pw", "--g", "/nonexistent"]) == 2
    capsys.readouterr()


def test_unknown_reduction_kind(files, capsys, tmp_path):
    write, _ = files
    fin = write("f.qbf", to_json(qbf(prefix((EXISTS, 0)), [[(0, True)]])))
    rc = main(["reduce", "bogus", "--in", fin, "--out", str(tmp_path / "x")])
    assert rc == 2
