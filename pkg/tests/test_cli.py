from __future__ import annotations

import json

from cliffgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "S3")
    assert code == 0
    assert json.loads(out)["degrees"] == [1, 1, 2]
    code, out, _ = run(capsys, "table", "C1")
    data = json.loads(out)
    assert data["characters"] == [["1"]]
    code, out, _ = run(capsys, "table", "GL23")
    data = json.loads(out)
    assert len(data["characters"]) == 8 and 4 in data["degrees"]


def test_unknown_group(capsys):
    code, _, err = run(capsys, "table", "Nope")
    assert code != 0 and "unknown group" in err


def test_graph_s3(capsys):
    code, out, _ = run(capsys, "graph", "S3", "--chi", "deg=2", "--normal", "N=1")
    assert code == 0 and "components: 3" in out
    code, out, _ = run(capsys, "graph", "S3", "--chi", "deg=2", "--normal", "N=(1 2 3)")
    assert code == 0 and "components: 1" in out


def test_graph_gl23(capsys):
    code, out, _ = run(capsys, "graph", "GL23", "--chi", "deg=4", "--normal", "N=G")
    assert code == 0
    assert "components: 2" in out.splitlines()


def test_graph_selector_errors(capsys):
    code, _, err = run(capsys, "graph", "S3", "--chi", "deg=1")
    assert code == 2 and "ambiguous" in err and "0, 1" in err
    code, _, err = run(capsys, "graph", "S3", "--chi", "deg=5")
    assert code == 2
    code, _, err = run(capsys, "graph", "S3", "--chi", "idx=9")
    assert code == 2
    code, _, err = run(capsys, "graph", "S3", "--chi", "2", "--normal", "N=(1 2)")
    assert code == 2 and "not a normal subgroup" in err
    code, _, err = run(capsys, "graph", "S4", "--chi", "0", "--normal", "N=(1 2 3 4 5)")
    assert code == 2


def test_graph_exports_are_byte_identical(capsys, tmp_path):
    paths = []
    for k in range(2):
        dot, js, png = tmp_path / f"g{k}.dot", tmp_path / f"g{k}.json", tmp_path / f"g{k}.png"
        code, _, _ = run(capsys, "graph", "GL23", "--chi", "deg=4", "--dot", str(dot), "--json", str(js),
                         "--witness", "--plot", str(png))
        assert code == 0
        paths.append((dot, js, png))
    for a, b in zip(*paths):
        assert a.read_bytes() == b.read_bytes()
    assert json.loads(paths[0][1].read_text())["chi_degree"] == 4
    assert paths[0][2].read_bytes()[:4] == b"\x89PNG"


def test_verify_exit_codes(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    code, text, _ = run(capsys, "verify", "--max-order", "24", "--checks", "theoremA", "--out", str(out))
    assert code == 0 and "fail 0" in text
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert lines and {x["check"] for x in lines} == {"theoremA"}
    code, text, _ = run(capsys, "verify", "--max-order", "1", "--checks", "lemma")
    assert code == 0 and "lemma: pass 1 fail 0" in text
    code, _, err = run(capsys, "verify", "--checks", "bogus")
    assert code == 2 and "unknown check" in err


def test_verify_example(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    figs = tmp_path / "figs"
    code, text, _ = run(capsys, "verify", "--max-order", "48", "--checks", "example", "--out", str(out),
                        "--figures", str(figs))
    assert (figs / "summary.png").exists() and (figs / "example.png").exists()
    count = next(json.loads(x) for x in out.read_text().splitlines() if "component count" in x)
    assert json.loads(count["detail"])["components"] == 2
    assert code == 0


def test_verify_figures_are_deterministic(capsys, tmp_path):
    for k in range(2):
        code, _, _ = run(capsys, "verify", "--max-order", "8", "--out", str(tmp_path / f"r{k}.jsonl"),
                         "--figures", str(tmp_path / f"f{k}"))
        assert code == 0
    assert (tmp_path / "r0.jsonl").read_bytes() == (tmp_path / "r1.jsonl").read_bytes()
    assert (tmp_path / "f0/summary.png").read_bytes() == (tmp_path / "f1/summary.png").read_bytes()
