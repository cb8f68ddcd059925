from __future__ import annotations

from cliffgraph.chartab import character_table
from cliffgraph.graph import build_graph
from cliffgraph.plotting import graph_layout, plot_graph, plot_summary

from conftest import group


def test_layout_separates_components():
    G = group("GL23")
    g = build_graph(G, character_table(G).degrees.index(4), G)
    pos = graph_layout(g)
    assert set(pos) == set(g.vertices)
    assert len(set(pos.values())) == len(g.vertices)
    for v, (_, y) in pos.items():
        assert y == v.order


def test_figures_are_reproducible(tmp_path):
    G = group("S4")
    g = build_graph(G, 3, G)
    for suffix in (".png", ".svg"):
        a, b = tmp_path / f"a{suffix}", tmp_path / f"b{suffix}"
        plot_graph(g, a)
        plot_graph(g, b)
        assert a.read_bytes() == b.read_bytes()
    summary = {"theoremA": {"pass": 3, "fail": 0, "not-applicable": 2}, "lemma": {"pass": 0, "fail": 1, "not-applicable": 0}}
    plot_summary(summary, tmp_path / "s.png")
    assert (tmp_path / "s.png").stat().st_size > 0
