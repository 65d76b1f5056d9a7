import io
import json
import sys

import pytest

from nhca.catalog import catalog_graph
from nhca.cli import diff_corpus, main, parse_config, UsageError
from nhca.graph import add_vertex, cycle_graph, emit_graph, parse_graph


@pytest.fixture
def files(tmp_path):
    def write(name, g):
        p = tmp_path / name
        p.write_text(emit_graph(g))
        return str(p)
    return write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_c5(files, capsys):
    code, out, _ = run(["recognize", files("c5.txt", cycle_graph(5))], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["answer"] == "model" and len(doc["model"]["arcs"]) == 5


def test_recognize_k23(files, capsys):
    code, out, _ = run(["recognize", files("k23.txt", catalog_graph("K23"))], capsys)
    assert code == 1 and json.loads(out)["forbidden"]["family"] == "K23"


def test_missing_file(capsys):
    code, _, err = run(["recognize", "/nonexistent/graph.txt"], capsys)
    assert code == 2 and "error" in err


def test_parse_error_exit(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 0\n")
    code, _, err = run(["recognize", str(p)], capsys)
    assert code == 2 and "loop at line 2" in err


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(emit_graph(cycle_graph(4))))
    code, out, _ = run(["recognize", "-", "--format", "text"], capsys)
    assert code == 0 and out.startswith("NHCA: yes")


def test_verify_roundtrip_and_tamper(files, tmp_path, capsys):
    g = files("c4.txt", cycle_graph(4))
    cert = tmp_path / "c4.json"
    assert main(["recognize", g, "--out", str(cert)]) == 0
    code, out, _ = run(["verify", g, str(cert)], capsys)
    assert code == 0 and out == "ok\n"
    doc = json.loads(cert.read_text())
    arcs = doc["model"]["arcs"]
    arcs[1]["ccw"] = arcs[0]["cw"]
    cert.write_text(json.dumps(doc))
    code, out, _ = run(["verify", g, str(cert)], capsys)
    assert code != 0 and "duplicate endpoint" in out


def test_verify_wheel(files, tmp_path, capsys):
    w5 = add_vertex(cycle_graph(5), range(5))
    g = files("w5.txt", w5)
    cert = tmp_path / "w5.json"
    assert main(["recognize", g, "--out", str(cert)]) == 1
    assert run(["verify", g, str(cert)], capsys)[0] == 0


def test_verify_malformed_certificate(files, tmp_path, capsys):
    g = files("c4.txt", cycle_graph(4))
    cert = tmp_path / "x.json"
    cert.write_text("{not json")
    assert run(["verify", g, str(cert)], capsys)[0] == 2


def test_dot_output(files, capsys):
    code, out, _ = run(["recognize", files("w.txt", add_vertex(cycle_graph(4), range(4))), "--format", "dot"],
                       capsys)
    assert code == 1 and out.startswith("graph forbidden {") and "doublecircle" in out
    code, out, _ = run(["recognize", files("c.txt", cycle_graph(4)), "--format", "dot"], capsys)
    assert code == 0 and out.startswith("graph model {")


def test_diff_agrees(capsys):
    code, out, _ = run(["diff", "--seed", "7", "--count", "1000", "--nmax", "8"], capsys)
    assert code == 0 and out.strip() == "1000/1000 agree"


def test_diff_nmax_limit(capsys):
    code, _, err = run(["diff", "--seed", "7", "--count", "10", "--nmax", "11"], capsys)
    assert code == 2 and "usage error" in err


def test_diff_corpus_is_seeded():
    a = [emit_graph(g) for g in diff_corpus(3, 20, 8)]
    b = [emit_graph(g) for g in diff_corpus(3, 20, 8)]
    assert a == b


def test_planted_catalog_graph(tmp_path, capsys):
    from nhca.driver import recognize
    from nhca.oracle import oracle_nhca
    g = catalog_graph("FIS-1")
    assert recognize(g).is_nhca == oracle_nhca(g).is_nhca is False


def test_gen_is_byte_stable(tmp_path, capsys):
    a = run(["gen", "--seed", "5", "--count", "3", "--nmax", "12"], capsys)[1]
    b = run(["gen", "--seed", "5", "--count", "3", "--nmax", "12"], capsys)[1]
    assert a == b and a.count("# graph") == 3
    d = tmp_path / "out"
    assert main(["gen", "--seed", "5", "--count", "3", "--out", str(d)]) == 0
    assert sorted(p.name for p in d.iterdir()) == ["g0.txt", "g1.txt", "g2.txt"]
    one = run(["gen", "--seed", "1", "--kind", "cycle-trees", "--nmin", "9", "--nmax", "9"], capsys)[1]
    assert parse_graph(one).n == 9


def test_recognize_is_byte_stable(files, capsys):
    p = files("fis2.txt", catalog_graph("FIS-2"))
    assert run(["recognize", p], capsys)[1] == run(["recognize", p], capsys)[1]


def test_oracle_subcommand(files, capsys):
    code, out, _ = run(["oracle", files("k23.txt", catalog_graph("K23"))], capsys)
    assert code == 1 and json.loads(out)["forbidden"]["family"] == "K23"
    assert run(["oracle", files("c7.txt", cycle_graph(7))], capsys)[0] == 0
    code, _, err = run(["oracle", files("c11.txt", cycle_graph(11))], capsys)
    assert code == 2 and "at most 10" in err


def test_config_validation():
    with pytest.raises(UsageError):
        parse_config(["gen", "--seed", "1", "--nmin", "5", "--nmax", "3"])
    cfg = parse_config(["diff", "--seed", "2", "--count", "5"])
    assert (cfg.seed, cfg.count, cfg.nmax) == (2, 5, 8)


def test_missing_subcommand(capsys):
    assert main([]) == 2
