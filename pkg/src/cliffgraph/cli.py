"""Command-line frontend: ``cliffgraph table|graph|verify``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from cliffgraph.catalog import find_entry, load_catalog
from cliffgraph.chartab import character_table, table_to_json
from cliffgraph.errors import CliffGraphError, InputError, PreconditionError
from cliffgraph.graph import build_graph, graph_to_dot, graph_to_json_text
from cliffgraph.permgroup import Group, closure, is_normal, parse_permutation, trivial_subgroup
from cliffgraph.verify import DEFAULT_CHECKS, EXAMPLE_DEGREE, EXAMPLE_GROUP, FAIL, run_sweep, summarize


def parse_chi(text: str, G: Group) -> int:
    """``deg=D`` (must be unique), ``idx=I`` or a bare index."""
    table = character_table(G)
    key, sep, value = text.partition("=")
    if not sep:
        key, value = "idx", text
    try:
        number = int(value)
    except ValueError:
        raise InputError(f"bad character selector {text!r}") from None
    if key == "deg":
        hits = [i for i, d in enumerate(table.degrees) if d == number]
        if not hits:
            raise InputError(f"no irreducible character of degree {number}")
        if len(hits) > 1:
            raise InputError(f"degree {number} is ambiguous: use idx= with one of {', '.join(map(str, hits))}")
        return hits[0]
    if key == "idx":
        if not 0 <= number < len(table):
            raise InputError(f"character index {number} out of range 0..{len(table) - 1}")
        return number
    raise InputError(f"bad character selector {text!r}")


def parse_normal(text: str, G: Group) -> Group:
    """``N=G``, ``N=1`` or ``N=<cycles>,<cycles>,...`` (generators in cycle notation)."""
    body = text[2:] if text.startswith("N=") else text
    body = body.strip()
    if body == "G":
        return G
    if body in ("1", ""):
        return trivial_subgroup(G)
    gens = [parse_permutation(part, G.degree) for part in body.replace(";", ",").split(",") if part.strip()]
    for g in gens:
        if g not in G.element_set:
            raise InputError(f"generator {g!r} of N is not an element of G")
    N = closure(G.degree, gens)
    if not is_normal(N, G):
        raise PreconditionError("N is not a normal subgroup of G")
    return N


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


def cmd_table(args) -> int:
    G = find_entry(load_catalog(args.catalog), args.name).group()
    print(json.dumps(table_to_json(character_table(G)), indent=2))
    return 0


def cmd_graph(args) -> int:
    G = find_entry(load_catalog(args.catalog), args.name).group()
    chi = parse_chi(args.chi, G)
    N = parse_normal(args.normal, G)
    g = build_graph(G, chi, N)
    if args.dot:
        _write(args.dot, graph_to_dot(g, witness=args.witness))
    if args.json:
        _write(args.json, graph_to_json_text(g))
    if args.plot:
        from cliffgraph.plotting import plot_graph

        plot_graph(g, args.plot, title=f"{args.name}, chi {chi}, |N| = {N.order}")
    print(f"vertices: {len(g.vertices)}")
    print(f"edges: {len(g.edges)}")
    print(f"components: {len(g.components)}")
    for comp in g.components:
        print("  " + " ".join(f"{g.label(v)}[{v.char_index}]" for v in comp))
    return 0


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    reports = run_sweep(load_catalog(args.catalog), args.max_order, checks)
    text = "".join(r.to_jsonl() for r in reports)
    if args.out:
        _write(args.out, text)
    summary = summarize(reports)
    for check, counts in summary.items():
        print(f"{check}: pass {counts['pass']} fail {counts['fail']} not-applicable {counts['not-applicable']}")
    for r in reports:
        for c in r.failures:
            print(f"FAIL {r.group} {c.check} {json.dumps(c.instance, sort_keys=True)} {c.detail}")
    if args.figures:
        from cliffgraph.plotting import plot_graph, plot_summary

        Path(args.figures).mkdir(parents=True, exist_ok=True)
        plot_summary(summary, Path(args.figures) / "summary.png",
                     title=f"catalog groups of order <= {args.max_order}")
        if any(r.group == EXAMPLE_GROUP and any(c.check == "example" for c in r.checks) for r in reports):
            G = find_entry(load_catalog(args.catalog), EXAMPLE_GROUP).group()
            chi = character_table(G).degrees.index(EXAMPLE_DEGREE)
            plot_graph(build_graph(G, chi, G), Path(args.figures) / "example.png",
                       title=f"{EXAMPLE_GROUP}, degree {EXAMPLE_DEGREE} character")
    failed = any(c.status == FAIL for r in reports for c in r.checks)
    print(f"groups: {len(reports)}  result: {'FAIL' if failed else 'OK'}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliffgraph", description="Exact character tables and Clifford induction graphs.")
    parser.add_argument("--catalog", help="catalog file (JSON lines); defaults to the bundled catalog")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the character table of a catalog group as JSON")
    p.add_argument("name")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("graph", help="build the graph C_N(chi) and print its components")
    p.add_argument("name")
    p.add_argument("--chi", required=True, help="deg=D, idx=I or I")
    p.add_argument("--normal", default="N=G", help='N=G, N=1 or "N=(1 2 3),(...)"')
    p.add_argument("--dot", help="write Graphviz DOT here")
    p.add_argument("--json", help="write the graph JSON here")
    p.add_argument("--witness", action="store_true", help="label DOT edges with a sample (C, gamma)")
    p.add_argument("--plot", help="render the graph with matplotlib to this file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run verification sweeps over the catalog")
    p.add_argument("--max-order", type=int, default=48)
    p.add_argument("--checks", default=",".join(DEFAULT_CHECKS))
    p.add_argument("--out", help="write the JSON-lines report here")
    p.add_argument("--figures", help="directory for summary figures")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliffGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
