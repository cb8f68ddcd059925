"""Exact irreducible character tables (Dixon's method) and class-function algebra.

The table of a group is found by splitting the simultaneous eigenspaces of the
class-sum matrices over GF(p), where ``p = 1 mod exponent`` and
``p > 2 sqrt(|G|)``. Each modular character value is then lifted to an exact
cyclotomic integer from the eigenvalue multiplicities of the element, which
are recovered with a discrete Fourier sum over the powers of the element.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from cliffgraph import cyclo
from cliffgraph.cyclo import ONE, ZERO, Cyclotomic
from cliffgraph.errors import ConsistencyError, DecompositionError, PreconditionError
from cliffgraph.permgroup import Group, format_cycles, inv, mul, perm_order, power


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Values of a class function, one per conjugacy class of ``group``."""

    group: Group
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes):
            raise PreconditionError("class function length does not match class count")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.group.id, self.values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_group(self, other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, k) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v * k for v in self.values))

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def __call__(self, g) -> Cyclotomic:
        return self.values[self.group.class_index(g)]

    def render(self) -> list[str]:
        return [cyclo.render(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: Group
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    def index_of(self, f: ClassFunction) -> int | None:
        """Position of ``f`` among the irreducibles, by exact value comparison."""
        if f.group != self.group:
            raise PreconditionError("class function lives on a different group")
        return self._lookup.get(f.values)

    @property
    def _lookup(self) -> dict:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {f.values: i for i, f in enumerate(self.irreducibles)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache


def _same_group(f: ClassFunction, h: ClassFunction) -> None:
    if f.group != h.group:
        raise PreconditionError("class functions live on different groups")


# -- modular linear algebra -----------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime ``p = 1 mod exponent`` with ``p > 2 sqrt(order)``."""
    p = exponent + 1
    while not (_is_prime(p) and p * p > 4 * order):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    qs = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1  # p == 2


def _nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of ``{x : mat x = 0}`` over GF(p)."""
    rows = [r[:] for r in mat]
    ncols = len(mat[0]) if mat else 0
    pivcols: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        f = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * f) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                g = rows[r][col]
                rows[r] = [(a - g * b) % p for a, b in zip(rows[r], rows[rank])]
        pivcols.append(col)
        rank += 1
        if rank == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for i, pc in enumerate(pivcols):
            x[pc] = (-rows[i][fc]) % p
        basis.append(x)
    return basis


def _coordinates(basis: list[list[int]], p: int):
    """Return a map sending a vector in span(basis) to its coordinates."""
    d = len(basis)
    r = len(basis[0])
    # rows of the r x d matrix whose columns are the basis vectors
    mat = [[basis[j][i] for j in range(d)] for i in range(r)]
    pivots, sub = [], []
    for i in range(r):
        trial = sub + [mat[i]]
        if _rank(trial, p) > len(sub):
            sub = trial
            pivots.append(i)
            if len(sub) == d:
                break
    inv_sub = _inverse_mod(sub, p)

    def coords(v: list[int]) -> list[int]:
        vals = [v[i] for i in pivots]
        return [sum(a * b for a, b in zip(row, vals)) % p for row in inv_sub]

    return coords


def _rank(mat: list[list[int]], p: int) -> int:
    ncols = len(mat[0])
    return ncols - len(_nullspace([row[:] for row in mat], p)) if mat else 0


def _inverse_mod(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    aug = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        f = pow(aug[col][col], -1, p)
        aug[col] = [(x * f) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                g = aug[r][col]
                aug[r] = [(a - g * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _matvec(mat: list[list[int]], v: list[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v) if a) % p for row in mat]


def _split(space: list[list[int]], mat: list[list[int]], p: int) -> list[list[list[int]]]:
    """Split an invariant subspace into eigenspaces of ``mat``."""
    d = len(space)
    coords = _coordinates(space, p)
    images = [coords(_matvec(mat, v, p)) for v in space]
    restricted = [[images[c][r] for c in range(d)] for r in range(d)]
    pieces, found = [], 0
    for lam in range(p):
        shifted = [[(x - lam) % p if i == j else x for j, x in enumerate(row)] for i, row in enumerate(restricted)]
        kern = _nullspace(shifted, p)
        if kern:
            vecs = [[sum(c[j] * space[j][i] for j in range(d)) % p for i in range(len(space[0]))] for c in kern]
            pieces.append(vecs)
            found += len(kern)
            if found == d:
                break
    if found != d:
        raise ConsistencyError("class matrix is not diagonalisable over GF(p)")
    return pieces


# -- Dixon's algorithm ------------------------------------------------------------

def _class_matrices(G: Group) -> list[list[list[int]]]:
    cc = G.conjugacy_classes
    r = len(cc)
    class_of = cc.class_of
    inverses = {x: inv(x) for x in G.elements}
    mats = []
    for j in range(r):
        M = [[0] * r for _ in range(r)]
        for l, z in enumerate(cc.representatives):
            for x in cc.classes[j]:
                M[class_of[mul(inverses[x], z)]][l] += 1
        mats.append(M)
    return mats


def _dixon(G: Group) -> CharacterTable:
    cc = G.conjugacy_classes
    r = len(cc)
    n = G.order
    e = G.exponent
    p = dixon_prime(e, n)
    sizes = cc.sizes
    class_of = cc.class_of
    reps = cc.representatives

    spaces = [[[int(i == j) for i in range(r)] for j in range(r)]]
    if r > 1:
        mats = _class_matrices(G)
        for j in range(1, r):
            if all(len(s) == 1 for s in spaces):
                break
            nxt = []
            for s in spaces:
                nxt.extend([s] if len(s) == 1 else _split(s, mats[j], p))
            spaces = nxt
    if len(spaces) != r or any(len(s) != 1 for s in spaces):
        raise ConsistencyError("class matrices failed to separate the characters")

    inv_class = [class_of[inv(g)] for g in reps]
    orders = [perm_order(g) for g in reps]
    power_maps = [[class_of[power(g, k)] for k in range(o)] for g, o in zip(reps, orders)]
    z = pow(_primitive_root(p), (p - 1) // e, p)

    chars = []
    for (w,) in spaces:
        if w[0] % p == 0:
            raise ConsistencyError("eigenvector vanishes at the identity class")
        f = pow(w[0], -1, p)
        w = [(x * f) % p for x in w]
        s = sum(w[j] * w[inv_class[j]] * pow(sizes[j], -1, p) for j in range(r)) % p
        target = (n * pow(s, -1, p)) % p
        degree = next((d for d in range(1, math.isqrt(n) + 1) if (d * d - target) % p == 0), None)
        if degree is None:
            raise ConsistencyError("no admissible character degree")
        theta = [(degree * w[j] * pow(sizes[j], -1, p)) % p for j in range(r)]
        values = []
        for j in range(r):
            o = orders[j]
            zo = pow(z, e // o, p)
            inv_o = pow(o, -1, p)
            terms = {}
            for k in range(o):
                mk = inv_o * sum(theta[power_maps[j][l]] * pow(zo, (-k * l) % o, p) for l in range(o)) % p
                if mk > degree:
                    raise ConsistencyError("eigenvalue multiplicity exceeds the degree")
                if mk:
                    terms[k] = mk
            values.append(Cyclotomic.from_exponents(o, terms))
        chars.append((degree, tuple(values)))

    chars.sort(key=lambda dv: (dv[0], [cyclo.render(v) for v in dv[1]]))
    table = CharacterTable(
        G,
        tuple(ClassFunction(G, vals) for _, vals in chars),
        tuple(d for d, _ in chars),
    )
    _validate(table)
    return table


def _validate(table: CharacterTable) -> None:
    G = table.group
    if sum(d * d for d in table.degrees) != G.order:
        raise ConsistencyError(f"sum of squared degrees != |G| for {G!r}")
    if any(G.order % d for d in table.degrees):
        raise ConsistencyError(f"a character degree does not divide |G| for {G!r}")
    irr = table.irreducibles
    for i, f in enumerate(irr):
        for j in range(i, len(irr)):
            expected = ONE if i == j else ZERO
            if inner_product(f, irr[j]) != expected:
                raise ConsistencyError(f"row orthogonality fails at ({i}, {j}) for {G!r}")


_TABLES: dict[str, CharacterTable] = {}


def character_table(G: Group) -> CharacterTable:
    """The exact character table of ``G``, cached by canonical group id."""
    table = _TABLES.get(G.id)
    if table is None:
        table = _dixon(G)
        _TABLES.setdefault(G.id, table)
    return _TABLES[G.id]


def computed_tables() -> list[CharacterTable]:
    return list(_TABLES.values())


# -- class-function algebra --------------------------------------------------------

def inner_product(f: ClassFunction, h: ClassFunction) -> Cyclotomic:
    """``(1/|G|) sum_g f(g) conj(h(g))``."""
    _same_group(f, h)
    G = f.group
    sizes = G.conjugacy_classes.sizes
    total = cyclo.hermitian_sum(zip(sizes, f.values, h.values))
    return total * Fraction(1, G.order)


_FUSIONS: dict[tuple[str, str], tuple[int, ...]] = {}


def fusion(A: Group, G: Group) -> tuple[int, ...]:
    """Class of ``G`` containing each class of the subgroup ``A``."""
    key = (A.id, G.id)
    fus = _FUSIONS.get(key)
    if fus is None:
        if not A.issubgroup(G):
            raise PreconditionError("not a subgroup")
        fus = tuple(G.class_index(g) for g in A.conjugacy_classes.representatives)
        _FUSIONS[key] = fus
    return fus


def restrict(f: ClassFunction, A: Group) -> ClassFunction:
    fus = fusion(A, f.group)
    return ClassFunction(A, tuple(f.values[i] for i in fus))


def induce(f: ClassFunction, G: Group) -> ClassFunction:
    """Induced class function, summed over the classes of ``A`` fusing into each class of ``G``."""
    A = f.group
    fus = fusion(A, G)
    buckets: list[list] = [[] for _ in range(len(G.conjugacy_classes))]
    for c, (i, size) in enumerate(zip(fus, A.conjugacy_classes.sizes)):
        buckets[i].append((size, f.values[c]))
    cents = G.conjugacy_classes.centralizer_orders
    values = tuple(
        cyclo.linear_combination((Fraction(cents[i] * size, A.order), v) for size, v in bucket)
        for i, bucket in enumerate(buckets)
    )
    return ClassFunction(G, values)


def induce_bruteforce(f: ClassFunction, G: Group) -> ClassFunction:
    """Induction straight from ``(1/|A|) sum_{x in G} f°(x g x^-1)``; slow reference route."""
    A = f.group
    if not A.issubgroup(G):
        raise PreconditionError("not a subgroup")
    values = []
    for g in G.conjugacy_classes.representatives:
        terms = []
        for x in G.elements:
            y = mul(mul(x, g), inv(x))
            if y in A.element_set:
                terms.append((1, f(y)))
        values.append(cyclo.linear_combination(terms) * Fraction(1, A.order))
    return ClassFunction(G, tuple(values))


def decompose(f: ClassFunction, table: CharacterTable) -> list[tuple[int, int]]:
    """Constituents ``(index, multiplicity)`` of a character; raises on a non-character."""
    if f.group != table.group:
        raise PreconditionError("class function and table live on different groups")
    out = []
    for i, chi in enumerate(table.irreducibles):
        m = inner_product(f, chi).as_rational_integer()
        if m is None or m < 0:
            raise DecompositionError(f"multiplicity of irreducible {i} is not a non-negative integer")
        if m:
            out.append((i, m))
    return out


def is_homogeneous(f: ClassFunction, table: CharacterTable) -> bool:
    return len(decompose(f, table)) == 1


def is_irreducible(f: ClassFunction) -> bool:
    return inner_product(f, f) == ONE


def trivial_character(G: Group) -> ClassFunction:
    return ClassFunction(G, (ONE,) * len(G.conjugacy_classes))


def regular_character(G: Group) -> ClassFunction:
    r = len(G.conjugacy_classes)
    return ClassFunction(G, (Cyclotomic.rational(G.order),) + (ZERO,) * (r - 1))


def class_function(G: Group, values: Sequence) -> ClassFunction:
    return ClassFunction(G, tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in values))


def table_to_json(table: CharacterTable) -> dict:
    G = table.group
    cc = G.conjugacy_classes
    return {
        "group": G.id,
        "order": G.order,
        "degree": G.degree,
        "classes": [
            {"representative": format_cycles(g), "size": len(c), "centralizer_order": z}
            for g, c, z in zip(cc.representatives, cc.classes, cc.centralizer_orders)
        ],
        "degrees": list(table.degrees),
        "characters": [chi.render() for chi in table.irreducibles],
    }
