"""
Finite groups as verified Cayley tables, coset and centralizer machinery, and
breadth-first closure of permutation groups.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation

from .errors import (
    AutomorphismError,
    GroupAxiomError,
    HomomorphismError,
    MalformedInputError,
    NotASubgroupError,
)

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


def as_table(rows: Sequence[Sequence[int]], what: str = "table") -> np.ndarray:
    """Validate a square table of in-range indices and return it as an int array."""
    try:
        array = np.asarray(rows, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"{what} is not a rectangular integer table: {e}") from e
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise MalformedInputError(f"{what} must be a non-empty square table, got shape {array.shape}")
    n = array.shape[0]
    bad = np.argwhere((array < 0) | (array >= n))
    if bad.size:
        x, y = bad[0]
        raise MalformedInputError(f"{what} entry [{x}][{y}] = {array[x, y]} is out of range 0..{n - 1}")
    return array


def to_tuple_table(array: np.ndarray) -> Table:
    return tuple(tuple(int(v) for v in row) for row in array)


@dataclass(frozen=True)
class FiniteGroup:
    table: Table
    identity: int
    inverses: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def product(self, *elements: int) -> int:
        result = self.identity
        for e in elements:
            result = self.table[result][e]
        return result

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)


def verify_group(rows: Sequence[Sequence[int]]) -> FiniteGroup:
    """Check the group axioms, reporting the first violated one with a witness."""
    t = as_table(rows, "group table")
    n = t.shape[0]
    idx = np.arange(n)

    identities = [e for e in range(n) if (t[e] == idx).all() and (t[:, e] == idx).all()]
    if not identities:
        # witness: the first row that fails as a left identity
        raise GroupAxiomError("identity", (0,))
    e = identities[0]

    inverses = []
    for a in range(n):
        right = np.flatnonzero(t[a] == e)
        left = np.flatnonzero(t[:, a] == e)
        common = np.intersect1d(right, left)
        if common.size == 0:
            raise GroupAxiomError("inverse", (a,))
        inverses.append(int(common[0]))

    lhs = t[t[:, :, None], idx[None, None, :]]
    rhs = t[idx[:, None, None], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise GroupAxiomError("associativity", tuple(int(v) for v in bad[0]))

    return FiniteGroup(to_tuple_table(t), e, tuple(inverses))


def _element_set(G: FiniteGroup, H: Iterable[int]) -> FrozenSet[int]:
    H = frozenset(int(h) for h in H)
    bad = [h for h in H if not 0 <= h < G.order]
    if bad:
        raise MalformedInputError(f"subset elements {sorted(bad)} are not in the group")
    return H


def check_subgroup(G: FiniteGroup, H: Iterable[int]) -> FrozenSet[int]:
    H = _element_set(G, H)
    if G.identity not in H:
        raise NotASubgroupError(f"subset {sorted(H)} does not contain the identity {G.identity}")
    for a in H:
        if G.inv(a) not in H:
            raise NotASubgroupError(f"subset {sorted(H)} is not closed under inverse at {a}")
        for b in H:
            if G.mul(a, b) not in H:
                raise NotASubgroupError(f"subset {sorted(H)} is not closed under product at ({a}, {b})")
    return H


class CosetDecomposition(NamedTuple):
    cosets: Tuple[FrozenSet[int], ...]
    rep: Tuple[int, ...]

    def representative(self, index: int) -> int:
        return min(self.cosets[index])


def right_cosets(G: FiniteGroup, H: Iterable[int]) -> CosetDecomposition:
    """Right cosets Hg; coset 0 is H, the others ordered by smallest member."""
    H = check_subgroup(G, H)
    cosets: List[FrozenSet[int]] = [H]
    rep = [-1] * G.order
    for h in H:
        rep[h] = 0
    for g in G.elements:
        if rep[g] >= 0:
            continue
        coset = frozenset(G.mul(h, g) for h in H)
        for x in coset:
            rep[x] = len(cosets)
        cosets.append(coset)
    return CosetDecomposition(tuple(cosets), tuple(rep))


def centralizer(G: FiniteGroup, H: Iterable[int]) -> FrozenSet[int]:
    H = sorted(_element_set(G, H))
    if not H:
        return frozenset(G.elements)
    t = G.array
    commutes = (t[:, H] == t[H, :].T).all(axis=1)
    return frozenset(int(g) for g in np.flatnonzero(commutes))


def inner_automorphism(G: FiniteGroup, g: int) -> Tuple[int, ...]:
    """The element permutation x -> g^{-1} x g."""
    g_inv = G.inv(g)
    return tuple(G.product(g_inv, x, g) for x in G.elements)


def check_automorphism(G: FiniteGroup, phi: Sequence[int]) -> Tuple[int, ...]:
    phi = tuple(int(v) for v in phi)
    if sorted(phi) != list(G.elements):
        raise AutomorphismError(f"map {list(phi)} is not a bijection of the group elements")
    try:
        group_hom_check(G, G, phi)
    except HomomorphismError as e:
        raise AutomorphismError(f"map {list(phi)} does not preserve the product at {e.witness}") from e
    return phi


def group_hom_check(G: FiniteGroup, F: FiniteGroup, images: Sequence[int]) -> Tuple[int, ...]:
    images = np.asarray(images, dtype=np.int64)
    if images.shape != (G.order,) or ((images < 0) | (images >= F.order)).any():
        raise MalformedInputError(f"group map must send {G.order} elements into 0..{F.order - 1}")
    lhs = images[G.array]
    rhs = F.array[images[:, None], images[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise HomomorphismError("map does not preserve the group product", (int(bad[0][0]), int(bad[0][1])))
    return tuple(int(v) for v in images)


# ============================================================
# NAMED GROUPS
# ============================================================

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise MalformedInputError(f"cyclic group order must be >= 1, got {n}")
    return verify_group([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on points 0..n-1; elements in array-form order, identity first."""
    if n < 1:
        raise MalformedInputError(f"symmetric group degree must be >= 1, got {n}")
    perms = symmetric_elements(n)
    index = {p: i for i, p in enumerate(perms)}
    return verify_group([[index[p * q] for q in perms] for p in perms])


def symmetric_elements(n: int) -> List[Permutation]:
    """The permutations behind ``symmetric_group(n)``, by element index."""
    return [Permutation(list(p)) for p in itertools.permutations(range(n))]


# ============================================================
# PERMUTATION GROUPS
# ============================================================

@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: Tuple[Permutation, ...]
    elements: FrozenSet[Permutation]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements


def closure(degree: int, generators: Sequence[Permutation]) -> PermutationGroup:
    """Breadth-first closure of the generators under composition."""
    generators = tuple(generators)
    for g in generators:
        if g.size != degree:
            raise MalformedInputError(f"generator {g.array_form} has degree {g.size}, expected {degree}")
    identity = Permutation(list(range(degree)))
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            nxt = current * g
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    logger.debug("closure: degree %s, %s generators, order %s", degree, len(generators), len(seen))
    return PermutationGroup(degree, generators, frozenset(seen))
