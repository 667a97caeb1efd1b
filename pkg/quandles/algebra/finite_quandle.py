"""
Finite quandles as verified operation tables.

Orientation: ``table[x][y] = x * y``, so column y is the inner map S_y.
``inv_table[x][y] = x *^{-1} y`` is built by column inversion at verification.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, NamedTuple, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation

from .errors import (
    AutomorphismError,
    HomomorphismError,
    InvariantError,
    MalformedInputError,
    PreconditionError,
    QuandleAxiomError,
)
from .finite_group import (
    FiniteGroup,
    PermutationGroup,
    as_table,
    centralizer,
    check_automorphism,
    closure,
    right_cosets,
    to_tuple_table,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteQuandle:
    table: Tuple[Tuple[int, ...], ...]
    inv_table: Tuple[Tuple[int, ...], ...]
    label: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def op_inv(self, x: int, y: int) -> int:
        return self.inv_table[x][y]

    def inner(self, y: int) -> Permutation:
        """S_y: x -> x * y."""
        return Permutation([row[y] for row in self.table])

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def is_trivial(self) -> bool:
        return all(row[y] == x for x, row in enumerate(self.table) for y in self.elements)


def verify_quandle(rows: Sequence[Sequence[int]], label: str = "") -> FiniteQuandle:
    """Check the three quandle axioms in order; report the first violation."""
    t = as_table(rows, "quandle table")
    n = t.shape[0]
    idx = np.arange(n)

    diagonal = t[idx, idx]
    bad = np.flatnonzero(diagonal != idx)
    if bad.size:
        x = int(bad[0])
        raise QuandleAxiomError(1, (x,))

    for y in range(n):
        column = t[:, y]
        values, counts = np.unique(column, return_counts=True)
        if values.size != n:
            repeated = values[counts > 1][0]
            x1, x2 = (int(v) for v in np.flatnonzero(column == repeated)[:2])
            raise QuandleAxiomError(2, (x1, x2, y))

    lhs = t[t[:, :, None], idx[None, None, :]]
    rhs = t[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise QuandleAxiomError(3, tuple(int(v) for v in bad[0]))

    inv = np.empty_like(t)
    inv[t, idx[None, :]] = idx[:, None]
    return FiniteQuandle(to_tuple_table(t), to_tuple_table(inv), label)


# ============================================================
# CONSTRUCTIONS
# ============================================================

def trivial_quandle(n: int) -> FiniteQuandle:
    if n < 1:
        raise MalformedInputError(f"a quandle needs at least one element, got order {n}")
    return verify_quandle([[x] * n for x in range(n)], f"trivial:{n}")


def dihedral_quandle(n: int) -> FiniteQuandle:
    """R_n: i * j = 2j - i mod n."""
    if n < 1:
        raise MalformedInputError(f"dihedral quandle order must be >= 1, got {n}")
    return verify_quandle([[(2 * j - i) % n for j in range(n)] for i in range(n)], f"dihedral:{n}")


def conj_quandle(G: FiniteGroup, label: str = "") -> FiniteQuandle:
    """a * b = b^{-1} a b."""
    return verify_quandle(
        [[G.product(G.inv(b), a, b) for b in G.elements] for a in G.elements], label
    )


def core_quandle(G: FiniteGroup, label: str = "") -> FiniteQuandle:
    """a * b = b a^{-1} b."""
    return verify_quandle(
        [[G.product(b, G.inv(a), b) for b in G.elements] for a in G.elements], label
    )


def alexander_quandle(G: FiniteGroup, phi: Sequence[int], label: str = "") -> FiniteQuandle:
    """a * b = phi(a b^{-1}) b for a group automorphism phi (given as an element map)."""
    phi = check_automorphism(G, phi)
    return verify_quandle(
        [[G.mul(phi[G.mul(a, G.inv(b))], b) for b in G.elements] for a in G.elements], label
    )


def coset_quandle(G: FiniteGroup, H: Iterable[int], z: int, label: str = "") -> FiniteQuandle:
    """Right cosets of H with Hx * Hy = H z^{-1} x y^{-1} z y, for z centralizing H."""
    decomposition = right_cosets(G, H)
    H = decomposition.cosets[0]
    if z not in centralizer(G, H):
        raise PreconditionError(f"element {z} does not centralize the subgroup {sorted(H)}")
    z_inv = G.inv(z)
    reps = [decomposition.representative(i) for i in range(len(decomposition.cosets))]
    rows = [
        [decomposition.rep[G.product(z_inv, x, G.inv(y), z, y)] for y in reps]
        for x in reps
    ]
    return verify_quandle(rows, label)


def product_quandle(factors: Sequence[FiniteQuandle], label: str = "") -> FiniteQuandle:
    """Componentwise product; elements indexed mixed-radix, first factor most significant."""
    factors = list(factors)
    if not factors:
        raise MalformedInputError("product_quandle needs at least one factor")
    shape = tuple(f.order for f in factors)
    size = int(np.prod(shape))
    coords = np.unravel_index(np.arange(size), shape)
    parts = [f.array[c[:, None], c[None, :]] for f, c in zip(factors, coords)]
    table = np.ravel_multi_index(parts, shape)
    if not label:
        label = "product:" + "+".join(f.label or f"table({f.order})" for f in factors)
    return verify_quandle(table, label)


def product_coordinates(factors: Sequence[FiniteQuandle], element: int) -> Tuple[int, ...]:
    shape = tuple(f.order for f in factors)
    return tuple(int(c) for c in np.unravel_index(element, shape))


# ============================================================
# INNER AUTOMORPHISMS, HOMOMORPHISMS, FIXED POINTS
# ============================================================

def inner_group(Q: FiniteQuandle) -> PermutationGroup:
    """Inn(Q): the closure of the inner maps S_y."""
    return closure(Q.order, [Q.inner(y) for y in Q.elements])


@dataclass(frozen=True)
class QuandleHom:
    source: FiniteQuandle
    target: FiniteQuandle
    images: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def compose(self, after: "QuandleHom") -> "QuandleHom":
        """``after`` applied to the output of ``self``."""
        return QuandleHom(self.source, after.target, tuple(after.images[v] for v in self.images))


def hom_check(Q: FiniteQuandle, F: FiniteQuandle, images: Sequence[int]) -> QuandleHom:
    """Verify images[x * y] = images[x] * images[y] for every pair."""
    array = np.asarray(images, dtype=np.int64)
    if array.shape != (Q.order,):
        raise MalformedInputError(f"a map out of a quandle of order {Q.order} needs {Q.order} images")
    if ((array < 0) | (array >= F.order)).any():
        raise MalformedInputError(f"images must lie in 0..{F.order - 1}")
    lhs = array[Q.array]
    rhs = F.array[array[:, None], array[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        raise HomomorphismError("map does not preserve *", (int(bad[0][0]), int(bad[0][1])))
    return QuandleHom(Q, F, tuple(int(v) for v in array))


def check_quandle_automorphism(Q: FiniteQuandle, alpha) -> QuandleHom:
    images = alpha.images if isinstance(alpha, QuandleHom) else tuple(alpha)
    if sorted(images) != list(Q.elements):
        raise AutomorphismError(f"map {list(images)} is not a bijection of the quandle elements")
    try:
        return hom_check(Q, Q, images)
    except HomomorphismError as e:
        raise AutomorphismError(f"map {list(images)} does not preserve * at {e.witness}") from e


def projection(factors: Sequence[FiniteQuandle], j: int, product: FiniteQuandle = None) -> QuandleHom:
    """The projection hom from the product of ``factors`` onto factor j."""
    factors = list(factors)
    product = product or product_quandle(factors)
    shape = tuple(f.order for f in factors)
    coords = np.unravel_index(np.arange(product.order), shape)
    return hom_check(product, factors[j], coords[j])


class FixedSubquandle(NamedTuple):
    elements: FrozenSet[int]
    empty: bool


def fixed_subquandle(Q: FiniteQuandle, alpha) -> FixedSubquandle:
    """Fix(alpha) for an automorphism alpha; an empty result is flagged, not an error."""
    alpha = check_quandle_automorphism(Q, alpha)
    fixed = frozenset(x for x in Q.elements if alpha(x) == x)
    for x in fixed:
        for y in fixed:
            if Q.op(x, y) not in fixed or Q.op_inv(x, y) not in fixed:
                raise InvariantError(f"Fix(alpha) is not closed at ({x}, {y})")
    if not fixed:
        logger.warning("fixed_subquandle: automorphism %s has no fixed points", alpha.images)
    return FixedSubquandle(fixed, not fixed)
