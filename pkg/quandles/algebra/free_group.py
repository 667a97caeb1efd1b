"""
Free-group words over a named generating set.

Words are freely reduced at construction time, so equality of GroupWord values
is equality in F(S). Generator indices and permutation points are 0-indexed;
a word acts on points letter by letter, leftmost letter first, which matches
sympy's product convention (``p*q`` applies ``p`` first).
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from .errors import InvariantError, MalformedInputError, PreconditionError

logger = logging.getLogger(__name__)

Letter = Tuple[int, int]

NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GeneratorSet:
    names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not isinstance(name, str) or not NAME_PATTERN.match(name):
                raise MalformedInputError(f"invalid generator name {name!r}")
        if len(set(names)) != len(names):
            raise MalformedInputError(f"generator names must be distinct: {list(names)}")

    @classmethod
    def of(cls, *names: str) -> "GeneratorSet":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise MalformedInputError(f"unknown generator {name!r}; known: {', '.join(self.names)}") from None

    def name(self, index: int) -> str:
        return self.names[index]


def _free_reduce(raw: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for gen, exp in raw:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word; the empty word is the identity."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for gen, exp in letters:
            if gen < 0:
                raise MalformedInputError(f"negative generator index {gen}")
            if exp not in (1, -1):
                raise MalformedInputError(f"letter exponent must be +1 or -1, got {exp}")
        object.__setattr__(self, "letters", _free_reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return multiply(self, other)

    def __invert__(self) -> "GroupWord":
        return invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)


IDENTITY = GroupWord()


def generator(index: int, exponent: int = 1) -> GroupWord:
    return GroupWord(((index, exponent),))


def reduce(raw: Iterable[Letter], rank: Optional[int] = None) -> GroupWord:
    """Freely reduce a letter sequence; with ``rank`` given, indices must be below it."""
    raw = list(raw)
    if rank is not None:
        for gen, _ in raw:
            if not 0 <= gen < rank:
                raise MalformedInputError(f"generator index {gen} out of range for rank {rank}")
    return GroupWord(tuple(raw))


def multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    return GroupWord(u.letters + v.letters)


def invert(u: GroupWord) -> GroupWord:
    return GroupWord(tuple((g, -e) for g, e in reversed(u.letters)))


def conjugate(u: GroupWord, v: GroupWord) -> GroupWord:
    """Return v^{-1} u v."""
    return GroupWord(invert(v).letters + u.letters + v.letters)


def format_word(word: GroupWord, gens: GeneratorSet) -> str:
    if word.is_identity:
        return "1"
    return " ".join(gens.name(g) if e == 1 else f"{gens.name(g)}^-1" for g, e in word.letters)


@dataclass(frozen=True)
class GroupPresentation:
    generators: GeneratorSet
    relations: Tuple[Tuple[GroupWord, GroupWord], ...] = field(default=())

    def format(self) -> str:
        rels = ", ".join(
            f"{format_word(lhs, self.generators)} = {format_word(rhs, self.generators)}"
            for lhs, rhs in self.relations
        )
        gens = " ".join(self.generators.names)
        return f"< {gens} | {rels} >" if rels else f"< {gens} | >"


# ============================================================
# PERMUTATION REPRESENTATIONS
# ============================================================

class PermutationRep(NamedTuple):
    degree: int
    assignment: Dict[int, Permutation]


def _record(partial: Dict[int, int], hit: Dict[int, int], src: int, dst: int, gen: int):
    if partial.get(src, dst) != dst or hit.get(dst, src) != src:
        raise InvariantError(f"conflicting partial map for generator {gen}: {src} -> {dst}")
    partial[src] = dst
    hit[dst] = src


def permutation_rep(g: GroupWord, rank: Optional[int] = None) -> PermutationRep:
    """
    A homomorphism F(S) -> S_n with rho(g) != 1, for n = len(g) + 1.

    Letter x^{+1} at position p records pi_x(p) = p + 1 and x^{-1} records
    pi_x(p + 1) = p. Each partial injection is completed by sending the
    unmapped points, ascending, to the unhit points, ascending. Generators
    below ``rank`` that do not occur in g map to the identity.
    """
    if g.is_identity:
        raise PreconditionError("permutation_rep needs a non-identity word")
    n = len(g) + 1
    rank = max(rank or 0, g.max_generator() + 1)
    partial: Dict[int, Dict[int, int]] = {}
    hits: Dict[int, Dict[int, int]] = {}
    for pos, (gen, exp) in enumerate(g.letters):
        src, dst = (pos, pos + 1) if exp == 1 else (pos + 1, pos)
        _record(partial.setdefault(gen, {}), hits.setdefault(gen, {}), src, dst, gen)

    assignment: Dict[int, Permutation] = {}
    for gen in range(rank):
        mapping = dict(partial.get(gen, {}))
        unmapped = [p for p in range(n) if p not in mapping]
        unhit = sorted(set(range(n)) - set(mapping.values()))
        mapping.update(zip(unmapped, unhit))
        assignment[gen] = Permutation([mapping[p] for p in range(n)])

    rep = PermutationRep(n, assignment)
    if evaluate(rep, g).is_Identity:
        raise InvariantError(f"permutation_rep produced a trivial image for {g.letters}")
    logger.debug("permutation_rep: degree %s for word of length %s", n, len(g))
    return rep


def evaluate(rep: PermutationRep, word: GroupWord) -> Permutation:
    """Image of ``word`` under the homomorphism defined by ``rep``."""
    result = Permutation(list(range(rep.degree)))
    for gen, exp in word.letters:
        image = rep.assignment.get(gen)
        if image is None:
            raise MalformedInputError(f"generator {gen} has no image in this representation")
        result = result * (image if exp == 1 else ~image)
    return result


def letters_from_pairs(pairs: Sequence[Tuple[str, int]], gens: GeneratorSet) -> GroupWord:
    return reduce(((gens.index(name), exp) for name, exp in pairs), rank=len(gens))
