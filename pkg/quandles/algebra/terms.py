"""
Quandle terms: generator leaves combined by * and *^{-1} (written "/").
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Sequence, Tuple, Union

from .finite_quandle import FiniteQuandle
from .free_group import GeneratorSet


class Op(Enum):
    STAR = "*"
    STAR_INV = "/"


@dataclass(frozen=True)
class Leaf:
    gen: int


@dataclass(frozen=True)
class Node:
    op: Op
    left: "QuandleTerm"
    right: "QuandleTerm"


QuandleTerm = Union[Leaf, Node]

# Path from the root: 0 = left operand, 1 = right operand.
Position = Tuple[int, ...]


def star(left: QuandleTerm, right: QuandleTerm) -> Node:
    return Node(Op.STAR, left, right)


def star_inv(left: QuandleTerm, right: QuandleTerm) -> Node:
    return Node(Op.STAR_INV, left, right)


def generators_of(t: QuandleTerm) -> FrozenSet[int]:
    if isinstance(t, Leaf):
        return frozenset((t.gen,))
    return generators_of(t.left) | generators_of(t.right)


def eval_term(t: QuandleTerm, F: FiniteQuandle, images: Sequence[int]) -> int:
    if isinstance(t, Leaf):
        return images[t.gen]
    left = eval_term(t.left, F, images)
    right = eval_term(t.right, F, images)
    if t.op is Op.STAR:
        return F.table[left][right]
    return F.inv_table[left][right]


def format_term(t: QuandleTerm, gens: GeneratorSet) -> str:
    if isinstance(t, Leaf):
        return gens.name(t.gen)
    return f"({format_term(t.left, gens)} {t.op.value} {format_term(t.right, gens)})"


def subterm(t: QuandleTerm, position: Position) -> QuandleTerm:
    for step in position:
        if not isinstance(t, Node):
            raise IndexError(f"position {position} leaves the term")
        t = t.left if step == 0 else t.right
    return t


def replace_at(t: QuandleTerm, position: Position, replacement: QuandleTerm) -> QuandleTerm:
    if not position:
        return replacement
    if not isinstance(t, Node):
        raise IndexError(f"position {position} leaves the term")
    head, rest = position[0], position[1:]
    if head == 0:
        return Node(t.op, replace_at(t.left, rest, replacement), t.right)
    return Node(t.op, t.left, replace_at(t.right, rest, replacement))


def positions(t: QuandleTerm, prefix: Position = ()):
    """Every subterm position, pre-order (root first, then left, then right)."""
    yield prefix
    if isinstance(t, Node):
        yield from positions(t.left, prefix + (0,))
        yield from positions(t.right, prefix + (1,))
