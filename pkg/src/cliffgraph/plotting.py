"""Matplotlib figures for graphs and verification summaries (Agg backend, file output only)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from cliffgraph.graph import CliffordGraph  # noqa: E402

STATUS_COLOURS = {"pass": "#4c9a5b", "fail": "#c8453c", "not-applicable": "#b7b7b7"}


def _save(fig, path: str | Path) -> None:
    path = Path(path)
    # strip timestamps so repeated runs give identical files
    metadata = {".png": {"Software": None}, ".svg": {"Date": None}, ".pdf": {"CreationDate": None}}
    matplotlib.rcParams["svg.hashsalt"] = "cliffgraph"
    fig.savefig(path, metadata=metadata.get(path.suffix.lower()))
    plt.close(fig)


def graph_layout(g: CliffordGraph) -> dict:
    """Components side by side; within a component, vertices stacked by subgroup order."""
    pos = {}
    x = 0.0
    for comp in g.components:
        by_order: dict[int, list] = {}
        for v in comp:
            by_order.setdefault(v.order, []).append(v)
        width = max(len(vs) for vs in by_order.values())
        for order, vs in by_order.items():
            for i, v in enumerate(vs):
                pos[v] = (x + i - (len(vs) - 1) / 2 + (width - 1) / 2, order)
        x += width + 1
    return pos


def plot_graph(g: CliffordGraph, path: str | Path, title: str | None = None) -> None:
    pos = graph_layout(g)
    n_cols = max((p[0] for p in pos.values()), default=0) + 1
    fig, ax = plt.subplots(figsize=(min(12.0, max(4.0, 0.8 * n_cols + 1)), 4.5))
    for u, v in g.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="#555555", lw=1.2, zorder=1)
    top = g.top
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=140, color="#d08c2f" if v == top else "#3b6ea8", zorder=2)
        ax.annotate(f"deg {g.degree_of(v)}\n#{v.subgroup[:6]}", (x, y), textcoords="offset points",
                    xytext=(0, 9), ha="center", fontsize=7)
    ax.set_yscale("log", base=2)
    orders = sorted({v.order for v in g.vertices})
    ax.set_yticks(orders)
    ax.set_yticklabels([str(o) for o in orders])
    ax.set_ylabel("|A|")
    ax.set_xticks([])
    ax.set_xlim(-1, n_cols)
    ax.set_title(title or f"|G| = {g.group.order}, |N| = {g.normal.order}, components: {len(g.components)}")
    fig.tight_layout()
    _save(fig, path)


def plot_summary(summary: dict[str, dict[str, int]], path: str | Path, title: str = "verification") -> None:
    """Stacked bars of the pass / fail / not-applicable share per check, annotated with counts."""
    names = list(summary)
    totals = [max(1, sum(summary[n].values())) for n in names]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.3 * len(names) + 1), 4))
    bottom = [0.0] * len(names)
    for status, colour in STATUS_COLOURS.items():
        counts = [summary[n].get(status, 0) for n in names]
        shares = [c / t for c, t in zip(counts, totals)]
        ax.bar(names, shares, bottom=bottom, color=colour, label=status)
        for i, (c, sh) in enumerate(zip(counts, shares)):
            if c:
                ax.text(i, bottom[i] + sh / 2, str(c), ha="center", va="center", fontsize=7)
        bottom = [b + sh for b, sh in zip(bottom, shares)]
    ax.set_ylim(0, 1)
    ax.set_ylabel("share of instances")
    ax.set_title(title)
    ax.legend(fontsize=8, loc="upper left", bbox_to_anchor=(1.0, 1.0))
    fig.tight_layout()
    _save(fig, path)
