"""
Free racks and free quandles on a finite generating set.

An element a^w of the free rack is the pair (a, w) with w in F(S), and
a^w * b^u = a^{w u^{-1} b u}. The free quandle identifies a^w with a^{aw};
the normal form strips the maximal leading power of a^{+-1} from w, which is
the shortest word in the class. The embedding a^w -> w^{-1} a w into
Conj(F(S)) is the second, independent model used for cross-checks.
"""

import logging
from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Tuple

from sympy.combinatorics import Permutation

from ..config import settings
from .errors import InvariantError, PreconditionError
from .free_group import (
    GeneratorSet,
    GroupPresentation,
    GroupWord,
    conjugate,
    format_word,
    generator,
    invert,
    multiply,
    permutation_rep,
)
from .grammar import parse_element_parts
from .terms import Leaf, Op, QuandleTerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RackElement:
    gen: int
    word: GroupWord = GroupWord()


@dataclass(frozen=True)
class FreeQuandleElement:
    """a^w with w reduced and not starting with a^{+-1}; build through ``normalize``."""

    gen: int
    word: GroupWord = GroupWord()

    def __post_init__(self):
        if self.word.letters and self.word.letters[0][0] == self.gen:
            raise InvariantError(
                f"word of a free-quandle normal form may not start with its own generator {self.gen}"
            )


def normalize(e: RackElement) -> FreeQuandleElement:
    letters = e.word.letters
    start = 0
    while start < len(letters) and letters[start][0] == e.gen:
        start += 1
    return FreeQuandleElement(e.gen, GroupWord(letters[start:]))


def free_rack_op(x: RackElement, y: RackElement) -> RackElement:
    """a^w * b^u = a^{w u^{-1} b u} in the free rack."""
    return RackElement(x.gen, multiply(x.word, conjugate(generator(y.gen), y.word)))


def free_rack_op_inv(x: RackElement, y: RackElement) -> RackElement:
    return RackElement(x.gen, multiply(x.word, conjugate(generator(y.gen, -1), y.word)))


def rack_op(x: FreeQuandleElement, y: FreeQuandleElement) -> FreeQuandleElement:
    return normalize(free_rack_op(RackElement(x.gen, x.word), RackElement(y.gen, y.word)))


def rack_op_inv(x: FreeQuandleElement, y: FreeQuandleElement) -> FreeQuandleElement:
    """The unique z with z * y = x: a^{w u^{-1} b^{-1} u}."""
    return normalize(free_rack_op_inv(RackElement(x.gen, x.word), RackElement(y.gen, y.word)))


def embed(e) -> GroupWord:
    """a^w -> w^{-1} a w in Conj(F(S)); accepts rack elements as well."""
    return conjugate(generator(e.gen), e.word)


def fq_equal(e1: FreeQuandleElement, e2: FreeQuandleElement) -> bool:
    equal = e1 == e2
    if settings.CROSS_CHECK and equal != (embed(e1) == embed(e2)):
        raise InvariantError(f"normal-form and embedding models disagree on {e1} vs {e2}")
    return equal


# ============================================================
# SEPARATION INTO Conj(S_n)
# ============================================================

class SeparationWitness(NamedTuple):
    degree: int
    assignment: Dict[int, Permutation]
    images: Tuple[Permutation, Permutation]


def image_in_conj(e, assignment: Dict[int, Permutation], degree: int) -> Permutation:
    """phi(a^w) = rho(w)^{-1} rho(a) rho(w) in Conj(S_n)."""
    rho_w = Permutation(list(range(degree)))
    for gen, exp in e.word.letters:
        rho_w = rho_w * (assignment[gen] if exp == 1 else ~assignment[gen])
    return ~rho_w * assignment[e.gen] * rho_w


def separate(e1: FreeQuandleElement, e2: FreeQuandleElement, rank: Optional[int] = None) -> SeparationWitness:
    """A hom FQ(S) -> Conj(S_n) separating two distinct elements, n = |g2^{-1} g1| + 1."""
    if fq_equal(e1, e2):
        raise PreconditionError("separate needs two distinct free-quandle elements")
    g = multiply(invert(embed(e2)), embed(e1))
    rank = max(rank or 0, e1.gen + 1, e2.gen + 1, e1.word.max_generator() + 1, e2.word.max_generator() + 1)
    degree, assignment = permutation_rep(g, rank)
    images = (image_in_conj(e1, assignment, degree), image_in_conj(e2, assignment, degree))
    if images[0] == images[1]:
        raise InvariantError(f"separation witness maps {e1} and {e2} to the same permutation")
    logger.debug("separate: degree %s", degree)
    return SeparationWitness(degree, assignment, images)


def enveloping_of_free(gens: GeneratorSet) -> GroupPresentation:
    """G_{FQ(S)} is the free group F(S): no relations."""
    if not len(gens):
        raise PreconditionError("a free quandle needs a non-empty generating set")
    return GroupPresentation(gens, ())


# ============================================================
# TEXT AND TERMS
# ============================================================

def parse_element(text: str, gens: GeneratorSet) -> FreeQuandleElement:
    gen, word = parse_element_parts(text, gens)
    return normalize(RackElement(gen, word))


def format_element(e, gens: GeneratorSet) -> str:
    if e.word.is_identity:
        return gens.name(e.gen)
    return f"{gens.name(e.gen)} ^ {format_word(e.word, gens)}"


def free_normal_form(t: QuandleTerm) -> FreeQuandleElement:
    """Evaluate a term in the free quandle on its generators."""
    if isinstance(t, Leaf):
        return FreeQuandleElement(t.gen)
    left, right = free_normal_form(t.left), free_normal_form(t.right)
    return rack_op(left, right) if t.op is Op.STAR else rack_op_inv(left, right)
