"""Finite permutation groups stored as explicit element sets.

Permutations are plain tuples of 0-based images: ``p[i]`` is the image of
point ``i``. Text input and output use 1-based disjoint-cycle notation.
Products act on the right, so ``mul(g, h)`` applies ``g`` first and then
``h``, and conjugation is ``x ** g = g^-1 x g``.

Groups are interned by element set, so every subgroup with a given set of
elements is represented by one :class:`Group` object. Caches (classes,
subgroup lists, character tables) hang off that object.
"""
from __future__ import annotations

import hashlib
import math
import os
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

from cliffgraph.errors import InputError, PreconditionError, SizeError

Permutation = tuple[int, ...]

DEFAULT_MAX_ORDER = 10_000
MAX_SUBGROUPS = 20_000
MAX_ORDER_ENV = "CLIFFGRAPH_MAX_ORDER"


def max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


# -- permutations -------------------------------------------------------------

def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def mul(g: Permutation, h: Permutation) -> Permutation:
    """Apply ``g`` then ``h``."""
    return tuple([h[i] for i in g])


def inv(g: Permutation) -> Permutation:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def conj(x: Permutation, g: Permutation) -> Permutation:
    """``g^-1 x g``: the image of ``x`` under conjugation by ``g``."""
    # (g^-1 x g)[g[i]] = g[x[i]]
    out = [0] * len(x)
    for i, xi in enumerate(x):
        out[g[i]] = g[xi]
    return tuple(out)


def cycles(g: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``g`` (0-based), each starting at its least point."""
    seen = [False] * len(g)
    out = []
    for start in range(len(g)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = g[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = g[j]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def perm_order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in cycles(g)), 1)


def power(g: Permutation, k: int) -> Permutation:
    n = perm_order(g)
    k %= n
    result = identity(len(g))
    base = g
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def format_cycles(g: Permutation) -> str:
    cs = cycles(g)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
    if degree < 1:
        raise InputError("permutation degree must be at least 1")
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise InputError(f"malformed cycle string {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.split()
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise InputError(f"non-integer point in {text!r}") from None
        for p in points:
            if not 1 <= p <= degree:
                raise InputError(f"point {p} outside 1..{degree} in {text!r}")
            if p in used:
                raise InputError(f"point {p} repeated in {text!r}")
            used.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def check_permutation(g: Sequence[int], degree: int) -> Permutation:
    if degree < 1:
        raise InputError("permutation degree must be at least 1")
    g = tuple(g)
    if len(g) != degree or sorted(g) != list(range(degree)):
        raise InputError(f"not a permutation of {degree} points: {g!r}")
    return g


# -- groups -------------------------------------------------------------------

@dataclass(frozen=True)
class ConjClassPartition:
    classes: tuple[frozenset, ...]
    representatives: tuple[Permutation, ...]
    centralizer_orders: tuple[int, ...]
    class_of: dict

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


_INTERN: dict[frozenset, "Group"] = {}


def _canonical_id(elements: Sequence[Permutation]) -> str:
    h = hashlib.sha256()
    for e in elements:
        h.update(bytes(e) if len(e) < 256 else repr(e).encode())
        h.update(b";")
    return h.hexdigest()[:16]


class Group:
    """A finite permutation group with its full element list.

    Do not instantiate directly; use :func:`closure` or :func:`group_from_elements`.
    """

    def __init__(self, degree: int, element_set: frozenset, generators: tuple | None):
        self.degree = degree
        self.element_set = element_set
        self.elements: tuple[Permutation, ...] = tuple(sorted(element_set))
        self.order = len(self.elements)
        self.id = _canonical_id(self.elements)
        self._given_generators = generators

    def __repr__(self) -> str:
        return f"<Group order={self.order} degree={self.degree} id={self.id}>"

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self is other or self.element_set == other.element_set

    def sort_key(self) -> tuple[int, str]:
        return (self.order, self.id)

    def issubgroup(self, other: "Group") -> bool:
        return self.element_set <= other.element_set

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        if self._given_generators is not None:
            return self._given_generators
        return self.canonical_generators

    @cached_property
    def canonical_generators(self) -> tuple[Permutation, ...]:
        """Greedy generating set: scan elements in sorted order, keep those not yet generated."""
        gens: list[Permutation] = []
        current = {self.identity}
        for x in self.elements:
            if x not in current:
                gens.append(x)
                current = _closure_set(self.degree, gens)
                if len(current) == self.order:
                    break
        return tuple(gens)

    @cached_property
    def conjugacy_classes(self) -> ConjClassPartition:
        class_of: dict[Permutation, int] = {}
        classes, reps = [], []
        gens = self.generators
        for x in self.elements:
            if x in class_of:
                continue
            idx = len(classes)
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in gens:
                    z = conj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            for y in orbit:
                class_of[y] = idx
            classes.append(frozenset(orbit))
            reps.append(x)  # elements are scanned in sorted order, so x is the least
        cents = tuple(self.order // len(c) for c in classes)
        return ConjClassPartition(tuple(classes), tuple(reps), cents, class_of)

    def class_index(self, g: Permutation) -> int:
        return self.conjugacy_classes.class_of[g]

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, (perm_order(x) for x in self.conjugacy_classes.representatives), 1)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for a in gens for b in gens)


def _closure_set(degree: int, generators: Iterable[Permutation], bound: int | None = None) -> set:
    gens = [g for g in generators]
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
                if bound is not None and len(seen) > bound:
                    raise SizeError(f"group order exceeds bound {bound}")
    return seen


def _intern(degree: int, element_set: frozenset, generators: tuple | None) -> Group:
    grp = _INTERN.get(element_set)
    if grp is None:
        grp = Group(degree, element_set, generators)
        _INTERN[element_set] = grp
    return grp


def closure(degree: int, generators: Sequence[Sequence[int]]) -> Group:
    """The group generated by ``generators`` acting on ``degree`` points."""
    gens = tuple(check_permutation(g, degree) for g in generators)
    elements = frozenset(_closure_set(degree, gens, bound=max_order()))
    return _intern(degree, elements, gens)


def group_from_elements(elements: Iterable[Permutation], check: bool = False) -> Group:
    element_set = frozenset(elements)
    if not element_set:
        raise InputError("a group needs at least one element")
    grp = _INTERN.get(element_set)
    if grp is not None:
        return grp
    degree = len(next(iter(element_set)))
    if check:
        e = identity(degree)
        if e not in element_set or any(mul(a, b) not in element_set for a in element_set for b in element_set):
            raise PreconditionError("element set is not closed under multiplication")
    return _intern(degree, element_set, None)


def trivial_subgroup(G: Group) -> Group:
    return group_from_elements([G.identity])


def conjugacy_classes(G: Group) -> ConjClassPartition:
    return G.conjugacy_classes


def exponent(G: Group) -> int:
    return G.exponent


def conjugate_subgroup(A: Group, g: Permutation) -> Group:
    """The subgroup ``g^-1 A g``."""
    return group_from_elements(conj(x, g) for x in A.elements)


def is_normal(C: Group, A: Group) -> bool:
    """True when ``C`` is a normal subgroup of ``A``."""
    if not C.issubgroup(A):
        return False
    cs = C.element_set
    return all(conj(c, a) in cs for a in A.generators for c in C.generators)


def intersection(A: Group, B: Group) -> Group:
    return group_from_elements(A.element_set & B.element_set)


def join(*groups: Group) -> Group:
    """Subgroup generated by the union of the given groups."""
    degree = groups[0].degree
    gens = [g for H in groups for g in H.generators]
    return group_from_elements(_closure_set(degree, gens))


def commutator_subgroup(A: Group) -> Group:
    degree = A.degree
    comms = set()
    for a in A.elements:
        ai = inv(a)
        for b in A.elements:
            comms.add(mul(mul(ai, inv(b)), mul(a, b)))
    return group_from_elements(_closure_set(degree, comms))


def is_solvable(G: Group) -> bool:
    H = G
    while H.order > 1:
        D = commutator_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True


_SUBGROUPS: dict[frozenset, tuple[Group, ...]] = {}


def all_subgroups(G: Group) -> list[Group]:
    """Every subgroup of ``G``, sorted by (order, canonical id).

    Built from the cyclic subgroups by repeatedly joining a known subgroup with
    one more cyclic subgroup; every subgroup is a join of cyclic ones.
    """
    cached = _SUBGROUPS.get(G.element_set)
    if cached is not None:
        return list(cached)
    degree = G.degree
    cyclic: dict[frozenset, Permutation] = {}
    for g in G.elements:
        powers = frozenset(_closure_set(degree, [g]))
        cyclic.setdefault(powers, g)
    found: dict[frozenset, tuple[Permutation, ...]] = {c: (g,) for c, g in cyclic.items()}
    queue = list(found)
    while queue:
        H = queue.pop()
        hgens = found[H]
        for Z, z in cyclic.items():
            if z in H:
                continue
            K = frozenset(_closure_set(degree, hgens + (z,)))
            if K not in found:
                found[K] = hgens + (z,)
                queue.append(K)
                if len(found) > MAX_SUBGROUPS:
                    raise SizeError(f"subgroup count exceeds bound {MAX_SUBGROUPS}")
    subs = tuple(sorted((group_from_elements(K) for K in found), key=Group.sort_key))
    _SUBGROUPS[G.element_set] = subs
    return list(subs)


def subgroups_of_index_dividing(G: Group, d: int) -> list[Group]:
    if d < 1:
        raise PreconditionError(f"index bound must be positive, got {d}")
    return [A for A in all_subgroups(G) if d % (G.order // A.order) == 0]


def normal_subgroups_in(A: Group, ambient: Group | None = None) -> list[Group]:
    """All normal subgroups of ``A``; ``ambient`` (a group containing ``A``) reuses its subgroup list."""
    if ambient is not None:
        if not A.issubgroup(ambient):
            raise PreconditionError("A is not contained in the ambient group")
        candidates = [C for C in all_subgroups(ambient) if C.issubgroup(A)]
    else:
        candidates = all_subgroups(A)
    return [C for C in candidates if is_normal(C, A)]


def normal_subgroups(G: Group) -> list[Group]:
    return normal_subgroups_in(G)
