#!/usr/bin/env python3
"""Regenerate src/cliffgraph/data/catalog.jsonl.

Every group of order <= 24 (one per isomorphism type) plus GL(2,3). Groups are
built from presentations (coset enumeration via sympy) or as direct products,
then moved to a small faithful permutation action: the coset action on a
family of subgroups whose cores intersect trivially, chosen to minimise the
total number of points.

Only a build-time tool; sympy is not a runtime dependency.
"""
from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from cliffgraph.chartab import character_table
from cliffgraph.permgroup import (
    all_subgroups,
    closure,
    commutator_subgroup,
    conj,
    format_cycles,
    is_normal,
    is_solvable,
    mul,
    normal_subgroups,
    perm_order,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "cliffgraph" / "data" / "catalog.jsonl"


def cyclic(n):
    return n, [tuple(list(range(1, n)) + [0])] if n > 1 else [(0,)]


def dihedral(order):
    n = order // 2
    rot = tuple(list(range(1, n)) + [0])
    ref = tuple((-i) % n for i in range(n))
    return n, [rot, ref]


def product(*factors):
    degree = sum(d for d, _ in factors)
    gens, offset = [], 0
    for d, fg in factors:
        for g in fg:
            gens.append(tuple(range(offset)) + tuple(offset + x for x in g) + tuple(range(offset + d, degree)))
        offset += d
    return degree, gens


def presented(names, relators):
    F, *xs = free_group(names)
    G = FpGroup(F, relators(*xs))
    P, _ = G._to_perm_group()
    return P.degree, [tuple(g.array_form) for g in P.generators]


def matrix_group(mats):
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]

    def act(M):
        return tuple(vecs.index(((M[0][0] * v[0] + M[0][1] * v[1]) % 3, (M[1][0] * v[0] + M[1][1] * v[1]) % 3))
                     for v in vecs)

    return 8, [act(M) for M in mats]


def core(H, G):
    elems = set(H.elements)
    for g in G.elements:
        elems &= {conj(x, g) for x in H.elements}
    return elems


def coset_action(G, H):
    cosets, index = [], {}
    for g in G.elements:
        key = frozenset(mul(h, g) for h in H.elements)
        if key not in index:
            index[key] = len(cosets)
            cosets.append(key)
    reps = [min(c) for c in cosets]
    images = []
    for g in G.generators:
        images.append([index[frozenset(mul(mul(h, r), g) for h in H.elements)] for r in reps])
    return len(cosets), images


def reduce_degree(degree, gens):
    G = closure(degree, gens)
    subs = all_subgroups(G)
    e = {G.identity}
    cores = [(G.order // H.order, H, core(H, G)) for H in subs if H.order < G.order]
    cores.sort(key=lambda t: (t[0], t[1].sort_key()))
    best = (degree, None)
    for k in (1, 2, 3):
        for combo in itertools.combinations(cores, k):
            total = sum(c[0] for c in combo)
            if total >= best[0]:
                continue
            inter = set.intersection(*(c[2] for c in combo))
            if inter == e:
                best = (total, [c[1] for c in combo])
    if best[1] is None:
        return degree, [tuple(g) for g in G.generators], G
    actions = [coset_action(G, H) for H in best[1]]
    new_gens, new_degree = [], sum(n for n, _ in actions)
    for i in range(len(G.generators)):
        img, offset = [], 0
        for n, imgs in actions:
            img.extend(offset + x for x in imgs[i])
            offset += n
        new_gens.append(tuple(img))
    H = closure(new_degree, new_gens)
    assert H.order == G.order
    return new_degree, new_gens, H


def invariants(G):
    cc = G.conjugacy_classes
    return (
        G.order,
        tuple(sorted((perm_order(r), len(c)) for r, c in zip(cc.representatives, cc.classes))),
        tuple(sorted(H.order for H in all_subgroups(G))),
        tuple(sorted(H.order for H in normal_subgroups(G))),
        commutator_subgroup(G).order,
        character_table(G).degrees,
    )


def catalog():
    C = cyclic
    S3 = dihedral(6)
    D8 = dihedral(8)
    Q8 = presented("a b", lambda a, b: [a**4, b**2 * a**-2, b**-1 * a * b * a])
    A4 = (4, [(1, 2, 0, 3), (1, 0, 3, 2)])
    S4 = (4, [(1, 2, 3, 0), (1, 0, 2, 3)])
    Dic3 = presented("a b", lambda a, b: [a**6, b**2 * a**-3, b**-1 * a * b * a])
    return [
        ("C1", (1, [(0,)])),
        ("C2", C(2)),
        ("C3", C(3)),
        ("C4", C(4)),
        ("C2xC2", product(C(2), C(2))),
        ("C5", C(5)),
        ("C6", C(6)),
        ("S3", S3),
        ("C7", C(7)),
        ("C8", C(8)),
        ("C4xC2", product(C(4), C(2))),
        ("C2xC2xC2", product(C(2), C(2), C(2))),
        ("D8", D8),
        ("Q8", Q8),
        ("C9", C(9)),
        ("C3xC3", product(C(3), C(3))),
        ("C10", C(10)),
        ("D10", dihedral(10)),
        ("C11", C(11)),
        ("C12", C(12)),
        ("C6xC2", product(C(6), C(2))),
        ("D12", dihedral(12)),
        ("A4", A4),
        ("Dic3", Dic3),
        ("C13", C(13)),
        ("C14", C(14)),
        ("D14", dihedral(14)),
        ("C15", C(15)),
        ("C16", C(16)),
        ("C4xC4", product(C(4), C(4))),
        ("C2^2:C4", presented("a b c", lambda a, b, c: [
            a**4, b**2, c**2, a * b * a**-1 * b**-1, b * c * b**-1 * c**-1, c * a * c**-1 * b**-1 * a**-1])),
        ("C4:C4", presented("a b", lambda a, b: [a**4, b**4, b**-1 * a * b * a])),
        ("C8xC2", product(C(8), C(2))),
        ("M16", presented("a b", lambda a, b: [a**8, b**2, b * a * b * a**-5])),
        ("D16", dihedral(16)),
        ("SD16", presented("a b", lambda a, b: [a**8, b**2, b * a * b * a**-3])),
        ("Q16", presented("a b", lambda a, b: [a**8, b**2 * a**-4, b**-1 * a * b * a])),
        ("C4xC2xC2", product(C(4), C(2), C(2))),
        ("C2xD8", product(C(2), D8)),
        ("C2xQ8", product(C(2), Q8)),
        ("C4oD8", presented("a b c", lambda a, b, c: [
            a**4, b**2, c**2, a * b * a**-1 * b**-1, a * c * a**-1 * c**-1, b * c * b * c * a**-2])),
        ("C2^4", product(C(2), C(2), C(2), C(2))),
        ("C17", C(17)),
        ("C18", C(18)),
        ("C6xC3", product(C(6), C(3))),
        ("D18", dihedral(18)),
        ("C3xS3", product(C(3), S3)),
        ("C3^2:C2", presented("x y s", lambda x, y, s: [
            x**3, y**3, x * y * x**-1 * y**-1, s**2, s * x * s * x, s * y * s * y])),
        ("C19", C(19)),
        ("C20", C(20)),
        ("C10xC2", product(C(10), C(2))),
        ("D20", dihedral(20)),
        ("Dic5", presented("a b", lambda a, b: [a**10, b**2 * a**-5, b**-1 * a * b * a])),
        ("F20", presented("a b", lambda a, b: [a**5, b**4, b**-1 * a * b * a**-2])),
        ("C21", C(21)),
        ("C7:C3", presented("a b", lambda a, b: [a**7, b**3, b**-1 * a * b * a**-2])),
        ("C22", C(22)),
        ("D22", dihedral(22)),
        ("C23", C(23)),
        ("C3:C8", presented("a b", lambda a, b: [a**3, b**8, b**-1 * a * b * a])),
        ("C24", C(24)),
        ("SL23", matrix_group([[[1, 1], [0, 1]], [[1, 0], [1, 1]]])),
        ("Dic6", presented("a b", lambda a, b: [a**12, b**2 * a**-6, b**-1 * a * b * a])),
        ("C4xS3", product(C(4), S3)),
        ("D24", dihedral(24)),
        ("C2xDic3", product(C(2), Dic3)),
        ("C3:D8", presented("x r s", lambda x, r, s: [
            x**3, r**4, s**2, (r * s)**2, r**-1 * x * r * x, s * x * s * x**-1])),
        ("C12xC2", product(C(12), C(2))),
        ("C3xD8", product(C(3), D8)),
        ("C3xQ8", product(C(3), Q8)),
        ("S4", S4),
        ("C2xA4", product(C(2), A4)),
        ("C2xC2xS3", product(C(2), C(2), S3)),
        ("C6xC2xC2", product(C(6), C(2), C(2))),
        ("GL23", matrix_group([[[1, 1], [0, 1]], [[0, 1], [2, 0]], [[2, 0], [0, 1]]])),
    ]


def main():
    entries, seen = [], {}
    for name, (degree, gens) in catalog():
        if degree > 1:
            degree, gens, G = reduce_degree(degree, gens)
        else:
            G = closure(degree, gens)
        inv = invariants(G)
        if inv in seen:
            sys.exit(f"{name} has the same invariants as {seen[inv]}")
        seen[inv] = name
        tags = []
        if G.is_abelian:
            tags.append("abelian")
        if is_solvable(G):
            tags.append("solvable")
        entries.append({
            "name": name,
            "degree": degree,
            "generators": [format_cycles(g) for g in gens],
            "order": G.order,
            "tags": tags,
        })
        print(f"{name:10s} order {G.order:3d} degree {degree:3d}", file=sys.stderr)
    counts = {}
    for e in entries:
        counts[e["order"]] = counts.get(e["order"], 0) + 1
    print(counts, file=sys.stderr)
    OUT.write_text("".join(json.dumps(e) + "\n" for e in entries))


if __name__ == "__main__":
    main()
