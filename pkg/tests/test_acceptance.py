"""Acceptance criteria, one test each; every test records a PASS/FAIL line for the run summary."""
from __future__ import annotations

import json
import random
import time

from cliffgraph.chartab import character_table, computed_tables, induce, inner_product, restrict
from cliffgraph.clifford import clifford_bijection
from cliffgraph.graph import build_graph
from cliffgraph.permgroup import all_subgroups, normal_subgroups_in
from cliffgraph.verify import (
    FAIL,
    check_graph_invariants,
    check_lemma,
    check_remark_dade,
    check_remark_isaacs,
    check_theorem_A,
    component_census,
    table_problems,
)

from conftest import ACCEPTANCE_LINES, group, groups_up_to

SWEEP_ORDER = 48


def record(number: int, ok: bool, detail: str, started: float) -> None:
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number}: {status}  {detail}  ({time.perf_counter() - started:.1f}s)")
    print(f"criterion {number}: {status}  {detail}")


def sweep(check) -> tuple[int, int, list[str]]:
    passed, failed, where = 0, 0, []
    for name, G in groups_up_to(SWEEP_ORDER):
        rep = check(G, name)
        passed += rep.count("pass")
        for c in rep.failures:
            failed += 1
            where.append(f"{name} {json.dumps(c.instance, sort_keys=True)}")
    return passed, failed, where


def test_criterion_1_gl23_two_components():
    t0 = time.perf_counter()
    G = group("GL23")
    degrees = character_table(G).degrees
    assert degrees.count(4) == 1
    g = build_graph(G, degrees.index(4), G)
    census = component_census(g)
    ok = len(g.components) == 2
    orbits = (census["orbits_under_conjugation"], census.get("orbits_under_conjugation_and_central_twist"))
    record(1, ok, f"components {len(g.components)} (expected 2), sizes {census['component_sizes']}, "
                  f"orbits under conjugation {orbits[0]}, with the central twist {orbits[1]}", t0)
    assert len(g.components) == 2


def test_criterion_2_theorem_A_sweep():
    t0 = time.perf_counter()
    passed, failed, where = sweep(check_theorem_A)
    record(2, failed == 0 and passed > 0, f"{passed} instances, {failed} failures", t0)
    assert failed == 0, where[:5]
    assert passed > 0


def test_criterion_3_dade_sweep():
    t0 = time.perf_counter()
    passed, failed, where = sweep(check_remark_dade)
    record(3, failed == 0 and passed > 0, f"{passed} instances, {failed} failures", t0)
    assert failed == 0, where[:5]


def test_criterion_4_isaacs_sweep():
    t0 = time.perf_counter()
    passed, failed, where = sweep(check_remark_isaacs)
    record(4, failed == 0 and passed > 0, f"{passed} instances, {failed} failures", t0)
    assert failed == 0, where[:5]


def test_criterion_5_lemma_sweep():
    t0 = time.perf_counter()
    passed, failed, where = sweep(check_lemma)
    record(5, failed == 0 and passed > 0, f"{passed} applicable instances, {failed} violations", t0)
    assert failed == 0, where[:5]


def test_criterion_6_table_exactness():
    t0 = time.perf_counter()
    for _, G in groups_up_to(SWEEP_ORDER):
        for H in all_subgroups(G):
            character_table(H)
    tables = computed_tables()
    bad = [(t.group.id, p) for t in tables for p in table_problems(t)]
    record(6, not bad, f"{len(tables)} tables, {len(bad)} problems", t0)
    assert not bad, bad[:5]


def test_criterion_7_frobenius_reciprocity():
    t0 = time.perf_counter()
    rng = random.Random(20261015)
    pool = groups_up_to(SWEEP_ORDER)
    bad = []
    for _ in range(1000):
        name, G = rng.choice(pool)
        A = rng.choice(all_subgroups(G))
        a = rng.randrange(len(character_table(A)))
        x = rng.randrange(len(character_table(G)))
        alpha, chi = character_table(A)[a], character_table(G)[x]
        if inner_product(induce(alpha, G), chi) != inner_product(alpha, restrict(chi, A)):
            bad.append((name, A.id, a, x))
    record(7, not bad, f"1000 instances, {len(bad)} mismatches", t0)
    assert not bad


def test_criterion_8_clifford_bijection():
    t0 = time.perf_counter()
    count, bad = 0, []
    for name, A in groups_up_to(24):
        for C in normal_subgroups_in(A):
            for gamma in range(len(character_table(C))):
                try:
                    clifford_bijection(A, C, gamma)
                except AssertionError as exc:
                    bad.append((name, C.id, gamma, str(exc)))
                count += 1
    record(8, not bad and count > 0, f"{count} (A, C, gamma) triples, {len(bad)} failures", t0)
    assert not bad, bad[:5]


def test_criterion_9_structural_invariants():
    t0 = time.perf_counter()
    passed, failed, where = sweep(lambda G, name: check_graph_invariants(G, name, automorphism_bound=24))
    record(9, failed == 0 and passed > 0, f"{passed} graphs, {failed} failures", t0)
    assert failed == 0, where[:5]
