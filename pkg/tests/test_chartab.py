from __future__ import annotations

import random

import pytest

from cliffgraph.chartab import (
    ClassFunction,
    character_table,
    class_function,
    decompose,
    dixon_prime,
    induce,
    induce_bruteforce,
    inner_product,
    is_homogeneous,
    is_irreducible,
    regular_character,
    restrict,
    table_to_json,
    trivial_character,
)
from cliffgraph.cyclo import ONE, Cyclotomic, root_of_unity
from cliffgraph.errors import DecompositionError, PreconditionError
from cliffgraph.permgroup import all_subgroups, normal_subgroups, perm_order
from cliffgraph.verify import table_problems

from conftest import group, groups_up_to


def by_order(G, order):
    return [H for H in all_subgroups(G) if H.order == order]


def test_c2_table():
    t = character_table(group("C2"))
    assert t.degrees == (1, 1)
    assert sorted(f.render() for f in t.irreducibles) == [["1", "-1"], ["1", "1"]]


@pytest.mark.parametrize("name,degrees", [
    ("C1", (1,)),
    ("S3", (1, 1, 2)),
    ("Q8", (1, 1, 1, 1, 2)),
    ("A4", (1, 1, 1, 3)),
    ("S4", (1, 1, 2, 3, 3)),
    ("SL23", (1, 1, 1, 2, 2, 2, 3)),
    ("C7:C3", (1, 1, 1, 3, 3)),
    ("GL23", (1, 1, 2, 2, 2, 3, 3, 4)),
])
def test_degrees(name, degrees):
    assert character_table(group(name)).degrees == degrees


def test_gl23_has_one_degree_four_character():
    assert character_table(group("GL23")).degrees.count(4) == 1


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
def test_cyclic_table_is_the_dual_group(n):
    G = group(f"C{n}")
    t = character_table(G)
    g = next(x for x in G.elements if perm_order(x) == n)
    rows = set()
    for chi in t.irreducibles:
        k = next(k for k in range(n) if chi(g) == root_of_unity(n, k))
        for j in range(n):
            power = G.identity
            for _ in range(j):
                power = tuple(g[i] for i in power)
            assert chi(power) == root_of_unity(n, j * k)
        rows.add(k)
    assert rows == set(range(n))


@pytest.mark.parametrize("name,G", groups_up_to(48))
def test_table_exactness(name, G):
    assert table_problems(character_table(G)) == []


@pytest.mark.parametrize("name", ["S4", "SL23", "C7:C3", "D8", "Q8", "GL23"])
def test_products_of_characters_decompose(name):
    t = character_table(group(name))
    for a in t.irreducibles:
        for b in t.irreducibles:
            prod = ClassFunction(a.group, tuple(x * y for x, y in zip(a.values, b.values)))
            parts = decompose(prod, t)
            assert sum(m * t.degrees[i] for i, m in parts) == a.degree.as_rational_integer() * b.degree.as_rational_integer()


@pytest.mark.parametrize("name", ["S3", "S4", "A4", "GL23", "D10"])
def test_permutation_character_contains_trivial(name):
    G = group(name)
    reps = G.conjugacy_classes.representatives
    perm = class_function(G, [sum(1 for i, x in enumerate(g) if i == x) for g in reps])
    t = character_table(G)
    parts = dict(decompose(perm, t))
    orbits = len({min(g[p] for g in G.elements) for p in range(G.degree)})
    assert parts[t.index_of(trivial_character(G))] == orbits


def test_regular_character():
    G = group("SL23")
    t = character_table(G)
    assert decompose(regular_character(G), t) == [(i, d) for i, d in enumerate(t.degrees)]


def test_decompose_rejects_non_characters():
    G = group("S3")
    half = trivial_character(G).scale(Cyclotomic.rational(1) / 2)
    with pytest.raises(DecompositionError):
        decompose(half, character_table(G))
    neg = trivial_character(G).scale(-1)
    with pytest.raises(DecompositionError):
        decompose(neg, character_table(G))


def test_restrict_examples():
    S3 = group("S3")
    chi = character_table(S3)[2]
    C3 = by_order(S3, 3)[0]
    r = restrict(chi, C3)
    assert not is_irreducible(r)
    assert not is_homogeneous(r, character_table(C3))
    parts = decompose(r, character_table(C3))
    trivial = character_table(C3).index_of(trivial_character(C3))
    assert len(parts) == 2 and all(m == 1 and i != trivial for i, m in parts)
    S4 = group("S4")
    A4 = by_order(S4, 12)[0]
    for i, d in enumerate(character_table(S4).degrees):
        if d == 3:
            assert is_irreducible(restrict(character_table(S4)[i], A4))


def test_homogeneous_examples():
    G = group("SL23")
    t = character_table(G)
    Z = by_order(G, 2)[0]
    z = next(x for x in Z.elements if x != G.identity)
    faithful = [i for i, d in enumerate(t.degrees) if d == 2 and t[i](z) == Cyclotomic.rational(-2)]
    assert len(faithful) == 3
    tz = character_table(Z)
    sign = next(i for i, lam in enumerate(tz.irreducibles) if lam(z) == Cyclotomic.rational(-1))
    for i in faithful:
        r = restrict(t[i], Z)
        assert is_homogeneous(r, tz)
        assert decompose(r, tz) == [(sign, 2)]
    for chi in t.irreducibles:
        assert is_homogeneous(chi, t)


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "S4", "SL23", "C3:D8"])
def test_induce_matches_bruteforce(name):
    G = group(name)
    for A in all_subgroups(G):
        for alpha in character_table(A).irreducibles:
            assert induce(alpha, G) == induce_bruteforce(alpha, G)


def test_induce_from_trivial_subgroup_is_regular():
    G = group("GL23")
    one = by_order(G, 1)[0]
    assert induce(trivial_character(one), G) == regular_character(G)


def test_frobenius_reciprocity_sample():
    rng = random.Random(7)
    names = [n for n, _ in groups_up_to(24)]
    for _ in range(100):
        G = group(rng.choice(names))
        A = rng.choice(all_subgroups(G))
        alpha = rng.choice(character_table(A).irreducibles)
        chi = rng.choice(character_table(G).irreducibles)
        assert inner_product(induce(alpha, G), chi) == inner_product(alpha, restrict(chi, A))


def test_inner_product_needs_same_group():
    with pytest.raises(PreconditionError):
        inner_product(trivial_character(group("C2")), trivial_character(group("C3")))


def test_index_of_and_json():
    G = group("S4")
    t = character_table(G)
    for i, chi in enumerate(t.irreducibles):
        assert t.index_of(chi) == i
    assert t.index_of(regular_character(G)) is None
    data = table_to_json(t)
    assert data["degrees"] == [1, 1, 2, 3, 3]
    assert len(data["characters"]) == len(data["classes"]) == 5


def test_table_order_is_canonical():
    for name in ("S4", "GL23", "C4xS3"):
        t = character_table(group(name))
        keys = [(d, chi.render()) for d, chi in zip(t.degrees, t.irreducibles)]
        assert keys == sorted(keys)
        assert trivial_character(group(name)) in t.irreducibles


@pytest.mark.parametrize("e,order", [(2, 6), (4, 8), (24, 48), (1, 1)])
def test_dixon_prime(e, order):
    p = dixon_prime(e, order)
    assert p % e == 1 % e and p * p > 4 * order
    assert all(p % q for q in range(2, int(p**0.5) + 1))


def test_irreducible_norm():
    for _, G in groups_up_to(24):
        t = character_table(G)
        assert all(inner_product(chi, chi) == ONE for chi in t.irreducibles)
        assert sum(1 for H in normal_subgroups(G)) >= 1
