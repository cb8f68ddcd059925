"""Verification sweeps over catalog groups.

Each check walks every applicable instance of one group and records a line
per instance: ``pass``, ``fail`` (with a replayable graph payload) or
``not-applicable`` when the hypotheses of the statement do not hold.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from cliffgraph.chartab import (
    CharacterTable,
    ClassFunction,
    character_table,
    inner_product,
    is_homogeneous,
    is_irreducible,
    restrict,
    table_to_json,
)
from cliffgraph.cyclo import ONE, ZERO, Cyclotomic, hermitian_sum
from cliffgraph.errors import ConsistencyError, InputError
from cliffgraph.graph import (
    CharPair,
    CliffordGraph,
    build_graph,
    components_equal,
    conjugate_vertex,
    graph_to_json,
    is_conjugation_automorphism,
    is_connected,
)
from cliffgraph.permgroup import (
    Group,
    all_subgroups,
    commutator_subgroup,
    format_cycles,
    group_from_elements,
    intersection,
    is_solvable,
    join,
    mul,
    normal_subgroups,
)

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass
class CheckResult:
    check: str
    instance: dict
    status: str
    detail: str = ""
    payload: dict | None = None

    def to_json(self, group: str) -> dict:
        out = {"group": group, "check": self.check, "instance": self.instance, "status": self.status,
               "detail": self.detail}
        if self.payload is not None:
            out["payload"] = self.payload
        return out


@dataclass
class VerificationReport:
    group: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check: str, instance: dict, ok: bool | None, detail: str = "",
            payload: Callable[[], dict] | None = None) -> None:
        if ok is None:
            status = NA
        else:
            status = PASS if ok else FAIL
        if status == FAIL and payload is None:
            raise ValueError("a failing check needs a payload")
        self.checks.append(CheckResult(check, instance, status, detail, payload() if status == FAIL else None))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(c.to_json(self.group), sort_keys=True) + "\n" for c in self.checks)


def _instance(G: Group, chi: int, N: Group | None = None, **extra) -> dict:
    out = {"chi": chi, "chi_degree": character_table(G).degrees[chi]}
    if N is not None:
        out.update({"N": N.id, "N_order": N.order})
    out.update(extra)
    return out


def _payload(*graphs: CliffordGraph) -> Callable[[], dict]:
    return lambda: {"graphs": [graph_to_json(g) for g in graphs]}


def _restricts_irreducibly(G: Group, chi: int, N: Group) -> bool:
    return is_irreducible(restrict(character_table(G)[chi], N))


def _homogeneous_on(G: Group, chi: int, M: Group) -> bool:
    return is_homogeneous(restrict(character_table(G)[chi], M), character_table(M))


def check_theorem_A(G: Group, name: str = "") -> VerificationReport:
    report = VerificationReport(name or G.id)
    table = character_table(G)
    for chi in range(len(table)):
        full = build_graph(G, chi, G)
        for N in normal_subgroups(G):
            inst = _instance(G, chi, N)
            if not _restricts_irreducibly(G, chi, N):
                report.add("theoremA", inst, None, "restriction to N is reducible")
                continue
            small = build_graph(G, chi, N)
            ok = components_equal(small, full)
            report.add("theoremA", inst, ok, f"{len(small.components)} components", _payload(small, full))
    return report


def check_corollary_B(G: Group, name: str = "") -> VerificationReport:
    report = VerificationReport(name or G.id)
    normals = normal_subgroups(G)
    for chi in range(len(character_table(G))):
        full = build_graph(G, chi, G)
        top = full.top
        quasiprimitive = all(_homogeneous_on(G, chi, M) for M in normals)
        for N in normals:
            inst = _instance(G, chi, N)
            if not _restricts_irreducibly(G, chi, N):
                report.add("corollaryB", inst, None, "restriction to N is reducible")
                continue
            below = [M for M in normals if M.issubgroup(N)]
            if not all(_homogeneous_on(G, chi, M) for M in below):
                report.add("corollaryB", inst, None, "a restriction below N is not homogeneous")
                continue
            small = build_graph(G, chi, N)
            a = small.component_of(top) == (top,)
            c = full.component_of(top) == (top,)
            detail = f"singleton in C_N: {a}; quasiprimitive: {quasiprimitive}; singleton in C_G: {c}"
            report.add("corollaryB", inst, a and quasiprimitive and c, detail, _payload(small, full))
    return report


def check_remark_dade(G: Group, name: str = "") -> VerificationReport:
    report = VerificationReport(name or G.id)
    for chi in range(len(character_table(G))):
        for N in normal_subgroups(G):
            inst = _instance(G, chi, N)
            if N.order % 2 == 0:
                report.add("dade", inst, None, "|N| is even")
                continue
            if not _restricts_irreducibly(G, chi, N):
                report.add("dade", inst, None, "restriction to N is reducible")
                continue
            g = build_graph(G, chi, N)
            report.add("dade", inst, is_connected(g), f"{len(g.components)} components", _payload(g))
    return report


def check_remark_isaacs(G: Group, name: str = "") -> VerificationReport:
    report = VerificationReport(name or G.id)
    solvable = is_solvable(G)
    for chi, deg in enumerate(character_table(G).degrees):
        inst = _instance(G, chi)
        if not solvable:
            report.add("isaacs", inst, None, "group is not solvable")
        elif deg % 2 == 0:
            report.add("isaacs", inst, None, "degree is even")
        else:
            g = build_graph(G, chi, G)
            report.add("isaacs", inst, is_connected(g), f"{len(g.components)} components", _payload(g))
    return report


def is_perfect_quotient(R: Group, L: Group) -> bool:
    """Whether ``R/L`` is perfect, tested as ``[R, R] L = R``."""
    return join(commutator_subgroup(R), L) == R


def _lemma_payload(G: Group, chi: int, N: Group, R: Group) -> Callable[[], dict]:
    def build() -> dict:
        out = _payload(build_graph(G, chi, N))()
        out["R_generators"] = [format_cycles(x) for x in R.canonical_generators]
        return out
    return build


def check_lemma(G: Group, name: str = "") -> VerificationReport:
    report = VerificationReport(name or G.id)
    normals = normal_subgroups(G)
    for N in normals:
        for R in normals:
            L = intersection(N, R)
            perfect = is_perfect_quotient(R, L)
            for chi in range(len(character_table(G))):
                inst = _instance(G, chi, N, R=R.id, R_order=R.order, L_order=L.order)
                if not _restricts_irreducibly(G, chi, N):
                    report.add("lemma", inst, None, "restriction to N is reducible")
                elif not _homogeneous_on(G, chi, L):
                    report.add("lemma", inst, None, "restriction to N and R is not homogeneous")
                elif not perfect:
                    report.add("lemma", inst, None, "R/L is not perfect")
                else:
                    report.add("lemma", inst, R == L, f"|R| = {R.order}, |L| = {L.order}",
                               _lemma_payload(G, chi, N, R))
    return report


def central_twist(G: Group):
    """``g -> g z`` off the derived subgroup, for a central involution ``z`` when ``G/G'`` has order 2.

    Returns the map as a dict, or None when no such automorphism applies.
    """
    D = commutator_subgroup(G)
    if G.order != 2 * D.order:
        return None
    centre = [z for z in G.elements if all(mul(z, g) == mul(g, z) for g in G.generators)]
    for z in centre:
        if z == G.identity or mul(z, z) != G.identity:
            continue
        sigma = {g: g if g in D else mul(g, z) for g in G.elements}
        if all(sigma[mul(a, b)] == mul(sigma[a], sigma[b]) for a in G.elements for b in G.elements):
            return sigma
    return None


def _twist_vertex(g: CliffordGraph, v: CharPair, sigma: dict) -> CharPair:
    A = g.subgroups[v.subgroup]
    image = group_from_elements(sigma[a] for a in A.elements)
    alpha = character_table(A)[v.char_index]
    # sigma is an involution: (alpha o sigma^-1)(y) = alpha(sigma(y))
    values = tuple(alpha(sigma[y]) for y in image.conjugacy_classes.representatives)
    idx = character_table(image).index_of(ClassFunction(image, values))
    if idx is None:
        raise ConsistencyError("twisted character is not irreducible")
    g.subgroups.setdefault(image.id, image)
    return CharPair(image.order, image.id, idx)


def component_census(g: CliffordGraph) -> dict:
    """Component sizes, plus orbit counts of components under conjugation (and a central twist if any)."""
    G = g.group
    comps = [frozenset(c) for c in g.components]
    index = {v: i for i, c in enumerate(comps) for v in c}

    def orbit_count(maps) -> int:
        parent = list(range(len(comps)))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        for f in maps:
            for i, c in enumerate(comps):
                j = index[f(next(iter(c)))]
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return len({find(i) for i in range(len(comps))})

    conj_maps = [lambda v, x=x: conjugate_vertex(g, v, x) for x in G.generators]
    out = {
        "components": len(comps),
        "component_sizes": [len(c) for c in g.components],
        "component_orders": [[v.order for v in c] for c in g.components],
        "component_vertices": [[g.label(v) for v in c] for c in g.components],
        "orbits_under_conjugation": orbit_count(conj_maps),
    }
    sigma = central_twist(G)
    if sigma is not None:
        twist = [lambda v: _twist_vertex(g, v, sigma)]
        # the twist must fix chi for the orbit count to make sense
        if _twist_vertex(g, g.top, sigma) == g.top:
            out["orbits_under_conjugation_and_central_twist"] = orbit_count(conj_maps + twist)
    return out


EXAMPLE_GROUP = "GL23"
EXAMPLE_DEGREE = 4
EXAMPLE_COMPONENTS = 2


def reproduce_example(G: Group, name: str = EXAMPLE_GROUP) -> VerificationReport:
    """The degree-4 character of GL(2,3): C_G(chi) is expected to have two components."""
    report = VerificationReport(name)
    table = character_table(G)
    hits = [i for i, d in enumerate(table.degrees) if d == EXAMPLE_DEGREE]
    report.add("example", {"what": "unique degree-4 irreducible"}, len(hits) == 1, f"found {len(hits)}",
               lambda: {"table": table_to_json(table)})
    if len(hits) != 1:
        return report
    chi = hits[0]
    full = build_graph(G, chi, G)
    census = component_census(full)
    report.add("example", _instance(G, chi, G, what="component count"),
               len(full.components) == EXAMPLE_COMPONENTS,
               json.dumps(census, sort_keys=True), _payload(full))
    for N in normal_subgroups(G):
        g = build_graph(G, chi, N)
        report.add("example", _instance(G, chi, N, what="same vertices"), g.vertices == full.vertices,
                   payload=_payload(g, full))
    return report


def check_graph_invariants(G: Group, name: str = "", automorphism_bound: int = 24) -> VerificationReport:
    """Vertex sets agree across N, edges grow with N, no self-loops, endpoints are vertices,
    and (for small G) conjugation is a graph automorphism."""
    report = VerificationReport(name or G.id)
    normals = normal_subgroups(G)
    for chi in range(len(character_table(G))):
        graphs = {N.id: build_graph(G, chi, N) for N in normals}
        full = graphs[G.id]
        vset = set(full.vertices)
        for N in normals:
            g = graphs[N.id]
            problems = []
            if g.vertices != full.vertices:
                problems.append("vertex set differs from C_G")
            if not g.edge_set() <= full.edge_set():
                problems.append("edges not contained in C_G")
            for M in normals:
                if M.issubgroup(N) and not graphs[M.id].edge_set() <= g.edge_set():
                    problems.append("edges not monotone in N")
                    break
            if any(u == v for u, v in g.edges):
                problems.append("self-loop")
            if any(u not in vset or v not in vset for u, v in g.edges):
                problems.append("edge endpoint outside the vertex set")
            if G.order <= automorphism_bound and not all(is_conjugation_automorphism(g, x) for x in G.elements):
                problems.append("conjugation is not an automorphism")
            report.add("structure", _instance(G, chi, N), not problems, "; ".join(problems), _payload(g, full))
    return report


def table_problems(table: CharacterTable) -> list[str]:
    """Exact row and column orthogonality, degree sum and divisibility, algebraic integrality."""
    G = table.group
    cc = G.conjugacy_classes
    irr = table.irreducibles
    out = []
    if sum(d * d for d in table.degrees) != G.order:
        out.append("sum of squared degrees differs from |G|")
    if any(G.order % d for d in table.degrees):
        out.append("a degree does not divide |G|")
    if len(irr) != len(cc):
        out.append("table is not square")
    if any(not v.is_algebraic_integer() for chi in irr for v in chi.values):
        out.append("an entry is not an algebraic integer")
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            if inner_product(irr[i], irr[j]) != (ONE if i == j else ZERO):
                out.append(f"row orthogonality fails at ({i}, {j})")
    for a in range(len(cc)):
        for b in range(a, len(cc)):
            total = hermitian_sum((1, chi.values[a], chi.values[b]) for chi in irr)
            if total != Cyclotomic.rational(cc.centralizer_orders[a] if a == b else 0):
                out.append(f"column orthogonality fails at ({a}, {b})")
    return out


def check_tables(G: Group, name: str = "") -> VerificationReport:
    """Exactness of the table of ``G`` and of every subgroup of ``G``."""
    report = VerificationReport(name or G.id)
    for H in all_subgroups(G):
        table = character_table(H)
        problems = table_problems(table)
        report.add("tables", {"subgroup": H.id, "order": H.order}, not problems, "; ".join(problems),
                   lambda table=table: {"table": table_to_json(table)})
    return report


def run_checks(G: Group, name: str, checks) -> VerificationReport:
    """Run the named suites on one group; ``example`` only applies to the GL(2,3) entry."""
    report = VerificationReport(name)
    for check in checks:
        if check == "example":
            if name == EXAMPLE_GROUP:
                report.extend(reproduce_example(G, name))
        else:
            report.extend(CHECKS[check](G, name))
    return report


def run_sweep(entries, max_order: int, checks) -> list[VerificationReport]:
    """Run ``checks`` over every catalog entry of order at most ``max_order``, in catalog order."""
    unknown = [c for c in checks if c not in CHECKS and c != "example"]
    if unknown:
        raise InputError(f"unknown check(s): {', '.join(unknown)}")
    reports = []
    for entry in entries:
        G = entry.group()
        if G.order <= max_order:
            reports.append(run_checks(G, entry.name, checks))
    return reports


def summarize(reports: list[VerificationReport]) -> dict[str, dict[str, int]]:
    """Counts of each status per check id, checks in first-seen order."""
    out: dict[str, dict[str, int]] = {}
    for r in reports:
        for c in r.checks:
            row = out.setdefault(c.check, {PASS: 0, FAIL: 0, NA: 0})
            row[c.status] += 1
    return out


CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "theoremA": check_theorem_A,
    "corollaryB": check_corollary_B,
    "dade": check_remark_dade,
    "isaacs": check_remark_isaacs,
    "lemma": check_lemma,
    "structure": check_graph_invariants,
    "tables": check_tables,
}
DEFAULT_CHECKS = ("theoremA", "corollaryB", "dade", "isaacs", "lemma", "example")
