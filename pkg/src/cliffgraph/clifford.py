"""Inertia groups and Clifford correspondents.

Characters are referred to by their index in the canonical table of their
group; character identity across subgroups is always settled by exact value
comparison against that table.
"""
from __future__ import annotations

from dataclasses import dataclass

from cliffgraph.chartab import (
    ClassFunction,
    character_table,
    induce,
    inner_product,
    restrict,
)
from cliffgraph.errors import ConsistencyError, PreconditionError
from cliffgraph.permgroup import (
    Group,
    Permutation,
    conj,
    conjugate_subgroup,
    group_from_elements,
    inv,
    is_normal,
)


@dataclass(frozen=True)
class InertiaDatum:
    ambient: Group
    kernel_sub: Group
    gamma: int
    stabilizer: Group


def conjugate_character(gamma: ClassFunction, a: Permutation) -> ClassFunction:
    """``gamma^a`` on ``a^-1 C a``, given by ``gamma^a(y) = gamma(a y a^-1)``."""
    C = gamma.group
    target = conjugate_subgroup(C, a)
    a_inv = inv(a)
    values = tuple(gamma(conj(y, a_inv)) for y in target.conjugacy_classes.representatives)
    return ClassFunction(target, values)


def conjugate_char_index(A: Group, alpha: int, g: Permutation) -> tuple[Group, int]:
    """The pair ``(A^g, alpha^g)`` with ``alpha^g`` located in the canonical table of ``A^g``."""
    image = conjugate_character(character_table(A)[alpha], g)
    idx = character_table(image.group).index_of(image)
    if idx is None:
        raise ConsistencyError("conjugate of an irreducible character is not irreducible")
    return image.group, idx


_CLASS_ACTIONS: dict[tuple[str, str], list[tuple[Permutation, tuple[int, ...]]]] = {}


def _class_action(A: Group, C: Group) -> list[tuple[Permutation, tuple[int, ...]]]:
    """For each ``a`` in ``A``, the permutation of classes of ``C`` with ``j -> class(a x_j a^-1)``."""
    key = (A.id, C.id)
    action = _CLASS_ACTIONS.get(key)
    if action is None:
        cc = C.conjugacy_classes
        action = []
        for a in A.elements:
            a_inv = inv(a)
            action.append((a, tuple(cc.class_of[conj(x, a_inv)] for x in cc.representatives)))
        _CLASS_ACTIONS[key] = action
    return action


def inertia_group(A: Group, C: Group, gamma: int) -> InertiaDatum:
    """Stabilizer in ``A`` of the irreducible ``gamma`` of the normal subgroup ``C``."""
    if not is_normal(C, A):
        raise PreconditionError("C is not a normal subgroup of A")
    values = character_table(C)[gamma].values
    stab = [a for a, perm in _class_action(A, C) if all(values[perm[j]] == v for j, v in enumerate(values))]
    return InertiaDatum(A, C, gamma, group_from_elements(stab))


def lies_over(beta: ClassFunction, C: Group, gamma: int) -> bool:
    return not inner_product(restrict(beta, C), character_table(C)[gamma]).is_zero()


def irr_over(B: Group, C: Group, gamma: int) -> list[int]:
    """Indices of the irreducibles of ``B`` whose restriction to ``C`` contains ``gamma``."""
    if not C.issubgroup(B):
        raise PreconditionError("C is not contained in B")
    return [i for i, beta in enumerate(character_table(B).irreducibles) if lies_over(beta, C, gamma)]


def clifford_correspondent(A: Group, alpha: int, C: Group, gamma: int) -> tuple[Group, int]:
    """The pair ``(B, beta)``: ``B`` the inertia group of ``gamma`` in ``A`` and ``beta`` the
    unique irreducible of ``B`` over ``gamma`` inducing ``alpha``."""
    chi = character_table(A)[alpha]
    if not is_normal(C, A):
        raise PreconditionError("C is not a normal subgroup of A")
    if not lies_over(chi, C, gamma):
        raise PreconditionError("gamma is not a constituent of the restriction of alpha")
    B = inertia_group(A, C, gamma).stabilizer
    if B == A:
        return A, alpha
    index = A.order // B.order
    table_B = character_table(B)
    target_degree = character_table(A).degrees[alpha]
    # exhaustive over Irr(B | gamma): uniqueness is asserted, not assumed
    hits = [
        i for i in irr_over(B, C, gamma)
        if table_B.degrees[i] * index == target_degree and induce(table_B[i], A) == chi
    ]
    if len(hits) != 1:
        raise ConsistencyError(f"expected one Clifford correspondent, found {len(hits)}")
    return B, hits[0]


def clifford_bijection(A: Group, C: Group, gamma: int) -> dict[int, int]:
    """Induction from ``Irr(B | gamma)`` to ``Irr(A | gamma)``, checked to be a bijection."""
    B = inertia_group(A, C, gamma).stabilizer
    table_A = character_table(A)
    table_B = character_table(B)
    above = set(irr_over(A, C, gamma))
    mapping = {}
    for i in irr_over(B, C, gamma):
        j = table_A.index_of(induce(table_B[i], A))
        if j is None:
            raise ConsistencyError("character over gamma induces a reducible character")
        if j not in above:
            raise ConsistencyError("induced character does not lie over gamma")
        mapping[i] = j
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != above:
        raise ConsistencyError("Clifford induction map is not a bijection")
    return mapping
