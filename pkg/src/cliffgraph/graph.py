"""Clifford induction graphs C_N(chi).

Vertices are the character pairs ``(A, alpha)`` with ``alpha^G = chi``. An
edge joins ``(A, alpha)`` to ``(B, beta)`` when some ``C`` normal in ``A`` and
contained in ``N`` has an irreducible ``gamma`` under ``alpha`` whose inertia
group in ``A`` is ``B`` and ``beta`` is the Clifford correspondent of ``alpha``.

Witnesses are enumerated once per ``(G, chi)`` with no restriction on ``C``;
the graph for a given ``N`` keeps the witnesses with ``C`` inside ``N``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from cliffgraph.chartab import character_table, decompose, induce, restrict
from cliffgraph.clifford import clifford_correspondent, conjugate_char_index
from cliffgraph.errors import ConsistencyError, PreconditionError
from cliffgraph.permgroup import (
    Group,
    Permutation,
    format_cycles,
    is_normal,
    normal_subgroups_in,
    subgroups_of_index_dividing,
)


@dataclass(frozen=True, order=True)
class CharPair:
    """Vertex ``(A, alpha)``: subgroup by canonical id, character by table index."""

    order: int
    subgroup: str
    char_index: int

    @property
    def key(self) -> str:
        return f"{self.subgroup}/{self.char_index}"


@dataclass(frozen=True, order=True)
class EdgeWitness:
    source: CharPair
    target: CharPair
    kernel_sub: str
    gamma: int


class UnionFind:
    """Union-find whose roots are the least members, so labels do not depend on merge order."""

    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return ra

    def groups(self) -> list[tuple]:
        out: dict = {}
        for x in sorted(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return sorted(tuple(v) for v in out.values())


@dataclass
class CliffordGraph:
    group: Group
    chi: int
    normal: Group
    vertices: tuple[CharPair, ...]
    edges: dict[tuple[CharPair, CharPair], tuple[EdgeWitness, ...]]
    components: tuple[tuple[CharPair, ...], ...]
    subgroups: dict[str, Group] = field(repr=False)

    @property
    def ambient(self) -> tuple[str, int, str]:
        return (self.group.id, self.chi, self.normal.id)

    @property
    def top(self) -> CharPair:
        return CharPair(self.group.order, self.group.id, self.chi)

    def edge_set(self) -> set[tuple[CharPair, CharPair]]:
        return set(self.edges)

    def partition(self) -> set[frozenset]:
        return {frozenset(c) for c in self.components}

    def component_of(self, v: CharPair) -> tuple[CharPair, ...]:
        return next(c for c in self.components if v in c)

    def degree_of(self, v: CharPair) -> int:
        return character_table(self.subgroups[v.subgroup]).degrees[v.char_index]

    def label(self, v: CharPair) -> str:
        return f"A{v.order}#{v.subgroup}:deg{self.degree_of(v)}"


def _pair(A: Group, alpha: int) -> CharPair:
    return CharPair(A.order, A.id, alpha)


def _edge_key(u: CharPair, v: CharPair) -> tuple[CharPair, CharPair]:
    return (u, v) if u <= v else (v, u)


_VERTICES: dict[tuple[str, int], tuple[tuple[CharPair, ...], dict[str, Group]]] = {}


def _vertices(G: Group, chi: int) -> tuple[tuple[CharPair, ...], dict[str, Group]]:
    key = (G.id, chi)
    hit = _VERTICES.get(key)
    if hit is not None:
        return hit
    table = character_table(G)
    target = table[chi]
    deg = table.degrees[chi]
    found, registry = [], {}
    for A in subgroups_of_index_dividing(G, deg):
        index = G.order // A.order
        table_A = character_table(A)
        for i, d in enumerate(table_A.degrees):
            if d * index == deg and induce(table_A[i], G) == target:
                found.append(_pair(A, i))
                registry[A.id] = A
    hit = (tuple(sorted(found)), registry)
    _VERTICES[key] = hit
    return hit


def vertices(G: Group, chi: int) -> set[CharPair]:
    """Character pairs ``(A, alpha)`` inducing the irreducible ``chi`` of ``G``."""
    if not 0 <= chi < len(character_table(G)):
        raise PreconditionError(f"character index {chi} out of range")
    return set(_vertices(G, chi)[0])


_WITNESSES: dict[tuple[str, int], tuple[list[tuple[EdgeWitness, Group]], dict[str, Group]]] = {}


def _all_witnesses(G: Group, chi: int) -> tuple[list[tuple[EdgeWitness, Group]], dict[str, Group]]:
    """Every witness ``(C, gamma)`` from every vertex, with ``C`` ranging over all normal subgroups."""
    key = (G.id, chi)
    hit = _WITNESSES.get(key)
    if hit is not None:
        return hit
    verts, registry = _vertices(G, chi)
    registry = dict(registry)
    vset = set(verts)
    out = []
    for v in verts:
        A = registry[v.subgroup]
        alpha = character_table(A)[v.char_index]
        for C in normal_subgroups_in(A, G):
            table_C = character_table(C)
            for gamma, _mult in decompose(restrict(alpha, C), table_C):
                B, beta = clifford_correspondent(A, v.char_index, C, gamma)
                w = _pair(B, beta)
                if w == v:
                    continue
                if w not in vset:
                    raise ConsistencyError("Clifford correspondent does not induce chi")
                registry.setdefault(B.id, B)
                registry.setdefault(C.id, C)
                out.append((EdgeWitness(v, w, C.id, gamma), C))
    hit = (out, registry)
    _WITNESSES[key] = hit
    return hit


def build_graph(G: Group, chi: int, N: Group, order_seed: int | None = None) -> CliffordGraph:
    """Build ``C_N(chi)``. ``order_seed`` shuffles the union-find merge order."""
    if not is_normal(N, G):
        raise PreconditionError("N is not a normal subgroup of G")
    if not 0 <= chi < len(character_table(G)):
        raise PreconditionError(f"character index {chi} out of range")
    verts, _ = _vertices(G, chi)
    witnesses, registry = _all_witnesses(G, chi)
    kept = [w for w, C in witnesses if C.element_set <= N.element_set]
    edges: dict[tuple[CharPair, CharPair], list[EdgeWitness]] = {}
    for w in kept:
        edges.setdefault(_edge_key(w.source, w.target), []).append(w)
    merge_order = sorted(edges)
    if order_seed is not None:
        random.Random(order_seed).shuffle(merge_order)
    uf = UnionFind(verts)
    for u, v in merge_order:
        uf.union(u, v)
    used = {v.subgroup for v in verts} | {w.kernel_sub for w in kept}
    return CliffordGraph(
        group=G,
        chi=chi,
        normal=N,
        vertices=verts,
        edges={k: tuple(edges[k]) for k in sorted(edges)},
        components=tuple(uf.groups()),
        subgroups={i: registry[i] for i in sorted(used, key=lambda i: registry[i].sort_key())},
    )


def components_equal(g1: CliffordGraph, g2: CliffordGraph) -> bool:
    if g1.group != g2.group or g1.chi != g2.chi:
        raise PreconditionError("graphs have different ambient (G, chi)")
    return g1.partition() == g2.partition()


def is_connected(g: CliffordGraph) -> bool:
    return len(g.components) == 1


def conjugate_vertex(g: CliffordGraph, v: CharPair, x: Permutation) -> CharPair:
    B, idx = conjugate_char_index(g.subgroups[v.subgroup], v.char_index, x)
    g.subgroups.setdefault(B.id, B)
    return _pair(B, idx)


def is_conjugation_automorphism(g: CliffordGraph, x: Permutation) -> bool:
    """Whether ``(A, alpha) -> (A^x, alpha^x)`` maps vertices onto vertices and edges onto edges."""
    image = {v: conjugate_vertex(g, v, x) for v in g.vertices}
    if set(image.values()) != set(g.vertices):
        return False
    mapped = {_edge_key(image[u], image[v]) for u, v in g.edges}
    return mapped == g.edge_set()


# -- export ----------------------------------------------------------------------

def graph_to_json(g: CliffordGraph) -> dict:
    table = character_table(g.group)
    return {
        "group": g.group.id,
        "group_order": g.group.order,
        "chi": g.chi,
        "chi_degree": table.degrees[g.chi],
        "normal": g.normal.id,
        "normal_order": g.normal.order,
        "normal_generators": [format_cycles(x) for x in g.normal.canonical_generators],
        "subgroups": {
            i: {"order": H.order, "generators": [format_cycles(x) for x in H.canonical_generators]}
            for i, H in g.subgroups.items()
        },
        "vertices": [
            {"key": v.key, "subgroup": v.subgroup, "order": v.order, "char_index": v.char_index,
             "degree": g.degree_of(v), "label": g.label(v)}
            for v in g.vertices
        ],
        "edges": [
            {"u": u.key, "v": v.key,
             "witnesses": [{"from": w.source.key, "to": w.target.key, "kernel_sub": w.kernel_sub, "gamma": w.gamma}
                           for w in ws]}
            for (u, v), ws in g.edges.items()
        ],
        "components": [[v.key for v in c] for c in g.components],
    }


def graph_to_json_text(g: CliffordGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2) + "\n"


def graph_to_dot(g: CliffordGraph, witness: bool = False) -> str:
    lines = ["graph clifford {"]
    for v in g.vertices:
        lines.append(f'  "{v.key}" [label="{g.label(v)}"];')
    for (u, v), ws in g.edges.items():
        attr = ""
        if witness:
            w = ws[0]
            C = g.subgroups[w.kernel_sub]
            attr = f' [label="C{C.order}#{w.kernel_sub}:gamma{w.gamma}"]'
        lines.append(f'  "{u.key}" -- "{v.key}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
