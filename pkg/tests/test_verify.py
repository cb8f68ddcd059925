from __future__ import annotations

import json

import pytest

from cliffgraph.chartab import character_table
from cliffgraph.graph import build_graph, is_connected
from cliffgraph.permgroup import normal_subgroups, trivial_subgroup
from cliffgraph.verify import (
    FAIL,
    NA,
    PASS,
    VerificationReport,
    central_twist,
    check_corollary_B,
    check_graph_invariants,
    check_lemma,
    check_remark_dade,
    check_remark_isaacs,
    check_tables,
    check_theorem_A,
    is_perfect_quotient,
    reproduce_example,
    run_sweep,
    summarize,
)
from cliffgraph.catalog import load_catalog
from cliffgraph.errors import InputError

from conftest import group


def find(report, **match):
    return [c for c in report.checks if all(c.instance.get(k) == v for k, v in match.items())]


def test_theorem_A_examples():
    S4 = group("S4")
    rep = check_theorem_A(S4, "S4")
    A4 = next(N for N in normal_subgroups(S4) if N.order == 12)
    for chi, d in enumerate(character_table(S4).degrees):
        assert find(rep, N=S4.id, chi=chi)[0].status == PASS
        if d == 3:
            assert find(rep, N=A4.id, chi=chi)[0].status == PASS
    SL = group("SL23")
    rep = check_theorem_A(SL, "SL23")
    Q8 = next(N for N in normal_subgroups(SL) if N.order == 8)
    deg2 = [c for c in find(rep, N=Q8.id) if c.instance["chi_degree"] == 2]
    assert deg2 and {c.status for c in deg2} == {PASS}


def test_corollary_B_examples():
    S3 = group("S3")
    rep = check_corollary_B(S3, "S3")
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    chi = character_table(S3).degrees.index(2)
    # a degree-2 character cannot restrict irreducibly to the abelian A3
    assert find(rep, N=A3.id, chi=chi)[0].status == NA
    # with N = S3 the restriction to A3 is not homogeneous, so again outside the hypothesis
    top = find(rep, N=S3.id, chi=chi)[0]
    assert top.status == NA and "not homogeneous" in top.detail
    one = trivial_subgroup(S3)
    for c in find(rep, N=one.id):
        assert c.status in (PASS, NA)
        if c.instance["chi_degree"] == 1:
            assert c.status == PASS
    SL = group("SL23")
    rep = check_corollary_B(SL, "SL23")
    Q8 = next(N for N in normal_subgroups(SL) if N.order == 8)
    assert PASS in {c.status for c in find(rep, N=Q8.id, chi_degree=2)}


def test_dade_examples():
    rep = check_remark_dade(group("S3"), "S3")
    S3 = group("S3")
    A3 = next(N for N in normal_subgroups(S3) if N.order == 3)
    # restrictions of non-linear characters to abelian N are reducible, so these
    # instances fall outside the hypothesis; the graphs are still connected
    assert find(rep, N=A3.id, chi_degree=2)[0].status == NA
    assert is_connected(build_graph(S3, character_table(S3).degrees.index(2), A3))
    F21 = group("C7:C3")
    rep = check_remark_dade(F21, "C7:C3")
    C7 = next(N for N in normal_subgroups(F21) if N.order == 7)
    got = find(rep, N=C7.id, chi_degree=3)
    assert len(got) == 2 and {c.status for c in got} == {NA}
    for c in got:
        assert is_connected(build_graph(F21, c.instance["chi"], C7))
    assert {c.status for c in find(rep, N=F21.id)} == {PASS}
    for c in find(rep, N_order=1):
        assert c.status == (PASS if c.instance["chi_degree"] == 1 else NA)


def test_isaacs_examples():
    for name in ("C7:C3", "S4"):
        rep = check_remark_isaacs(group(name), name)
        assert {c.status for c in find(rep, chi_degree=3)} == {PASS}
        assert {c.status for c in find(rep, chi_degree=1)} == {PASS}
        assert {c.status for c in find(rep, chi_degree=2)} <= {NA}


def test_lemma_examples():
    G = group("S4")
    rep = check_lemma(G, "S4")
    assert rep.count(FAIL) == 0
    for c in rep.checks:
        if c.instance["R_order"] == c.instance["L_order"] and c.status != NA:
            assert c.status == PASS
    A4 = next(N for N in normal_subgroups(G) if N.order == 12)
    one = trivial_subgroup(G)
    assert not is_perfect_quotient(A4, one)
    assert is_perfect_quotient(A4, A4)


def test_lemma_trivial_group():
    rep = check_lemma(group("C1"), "C1")
    assert [c.status for c in rep.checks] == [PASS]


def test_example_report():
    rep = reproduce_example(group("GL23"))
    assert rep.checks[0].status == PASS
    count = next(c for c in rep.checks if c.instance.get("what") == "component count")
    census = json.loads(count.detail)
    assert census["components"] == 9
    assert count.status == FAIL
    assert count.payload["graphs"][0]["chi_degree"] == 4
    same = [c for c in rep.checks if c.instance.get("what") == "same vertices"]
    assert len(same) == len(normal_subgroups(group("GL23"))) and {c.status for c in same} == {PASS}


def test_central_twist():
    G = group("GL23")
    sigma = central_twist(G)
    assert sigma is not None and len(set(sigma.values())) == G.order
    assert all(sigma[sigma[g]] == g for g in G.elements)
    assert central_twist(group("S4")) is None


def test_structure_and_tables():
    for name in ("S4", "GL23"):
        G = group(name)
        assert check_graph_invariants(G, name).count(FAIL) == 0
        assert check_tables(G, name).count(FAIL) == 0


def test_failures_need_payloads():
    rep = VerificationReport("x")
    with pytest.raises(ValueError):
        rep.add("c", {}, False)
    rep.add("c", {}, False, "bad", lambda: {"k": 1})
    rep.add("c", {}, None)
    line = json.loads(rep.to_jsonl().splitlines()[0])
    assert line == {"group": "x", "check": "c", "instance": {}, "status": FAIL, "detail": "bad", "payload": {"k": 1}}
    assert rep.count(NA) == 1


def test_sweep_driver():
    entries = load_catalog()
    reports = run_sweep(entries, 1, ["lemma"])
    assert [r.group for r in reports] == ["C1"]
    assert summarize(reports) == {"lemma": {PASS: 1, FAIL: 0, NA: 0}}
    with pytest.raises(InputError):
        run_sweep(entries, 6, ["theoremZ"])
    a = "".join(r.to_jsonl() for r in run_sweep(entries, 12, ["theoremA", "dade"]))
    b = "".join(r.to_jsonl() for r in run_sweep(entries, 12, ["theoremA", "dade"]))
    assert a == b
