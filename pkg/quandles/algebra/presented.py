"""
Finitely presented quandles <X || R>: presentations, homomorphism enumeration
into finite quandles, and the enveloping-group presentation.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from .errors import MalformedInputError, TermSyntaxError
from .finite_quandle import FiniteQuandle
from .free_group import GeneratorSet, GroupPresentation, GroupWord, conjugate, generator, invert
from .grammar import parse_term
from .terms import Leaf, Node, Op, QuandleTerm, eval_term, format_term, generators_of, star

logger = logging.getLogger(__name__)

Assignment = Tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    lhs: QuandleTerm
    rhs: QuandleTerm

    @property
    def generators(self):
        return generators_of(self.lhs) | generators_of(self.rhs)


@dataclass(frozen=True)
class QuandlePresentation:
    generators: GeneratorSet
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if not len(self.generators):
            raise MalformedInputError("a quandle presentation needs at least one generator")
        rank = len(self.generators)
        for i, rel in enumerate(self.relations):
            bad = [g for g in rel.generators if not 0 <= g < rank]
            if bad:
                raise MalformedInputError(f"relation {i} uses generator indices {sorted(bad)} outside 0..{rank - 1}")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def format(self) -> str:
        lines = ["gens: " + " ".join(self.generators.names)]
        for rel in self.relations:
            lines.append(f"rel: {format_term(rel.lhs, self.generators)} = {format_term(rel.rhs, self.generators)}")
        return "\n".join(lines)


def parse_presentation(text: str) -> QuandlePresentation:
    """Read `gens:` / `rel:` lines; blank lines and `#` comments are skipped."""
    gens = None
    pending: List[Tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("gens", "rel"):
            raise MalformedInputError(f"expected 'gens:' or 'rel:', got {line!r}", lineno)
        if key == "gens":
            if gens is not None:
                raise MalformedInputError("duplicate 'gens:' line", lineno)
            try:
                gens = GeneratorSet(tuple(rest.split()))
            except MalformedInputError as e:
                raise MalformedInputError(e.detail, lineno) from None
        else:
            pending.append((lineno, rest))
    if gens is None:
        raise MalformedInputError("presentation has no 'gens:' line")

    relations = []
    for lineno, rest in pending:
        lhs_text, sep, rhs_text = rest.partition("=")
        if not sep:
            raise MalformedInputError("relation needs the form <term> = <term>", lineno)
        try:
            relations.append(Relation(parse_term(lhs_text, gens), parse_term(rhs_text, gens)))
        except TermSyntaxError as e:
            raise TermSyntaxError(e.detail, lineno, e.column) from None
    return QuandlePresentation(gens, tuple(relations))


# ============================================================
# HOMOMORPHISM ENUMERATION
# ============================================================

def _buckets(P: QuandlePresentation) -> List[List[Relation]]:
    """Relations grouped by their highest generator index: checkable once it is assigned."""
    buckets: List[List[Relation]] = [[] for _ in range(P.rank)]
    for rel in P.relations:
        buckets[max(rel.generators)].append(rel)
    return buckets


def _holds(rel: Relation, F: FiniteQuandle, images: Sequence[int]) -> bool:
    return eval_term(rel.lhs, F, images) == eval_term(rel.rhs, F, images)


def _search(F: FiniteQuandle, buckets: List[List[Relation]], first: int) -> List[Assignment]:
    rank = len(buckets)
    images = [0] * rank
    images[0] = first
    found: List[Assignment] = []
    if not all(_holds(rel, F, images) for rel in buckets[0]):
        return found

    def extend(i: int):
        if i == rank:
            found.append(tuple(images))
            return
        for v in F.elements:
            images[i] = v
            if all(_holds(rel, F, images) for rel in buckets[i]):
                extend(i + 1)

    extend(1)
    return found


def hom_enumerate(P: QuandlePresentation, F: FiniteQuandle, threads: int = 1) -> List[Assignment]:
    """Every generator assignment satisfying all relations in F, sorted by image tuple."""
    buckets = _buckets(P)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda v: _search(F, buckets, v), F.elements))
    else:
        parts = [_search(F, buckets, v) for v in F.elements]
    result = sorted(a for part in parts for a in part)
    logger.debug("hom_enumerate: %s homs into %s (threads=%s)", len(result), F.label or F.order, threads)
    return result


class ColoringCount(NamedTuple):
    count: int
    non_constant: bool


def coloring_count(P: QuandlePresentation, F: FiniteQuandle, threads: int = 1) -> ColoringCount:
    homs = hom_enumerate(P, F, threads)
    return ColoringCount(len(homs), any(len(set(a)) > 1 for a in homs))


# ============================================================
# ENVELOPING GROUP AND STANDARD PRESENTATIONS
# ============================================================

def term_to_word(t: QuandleTerm) -> GroupWord:
    """t * u -> u^{-1} t u and t / u -> u t u^{-1}."""
    if isinstance(t, Leaf):
        return generator(t.gen)
    left, right = term_to_word(t.left), term_to_word(t.right)
    if t.op is Op.STAR:
        return conjugate(left, right)
    return conjugate(left, invert(right))


def enveloping_presentation(P: QuandlePresentation) -> GroupPresentation:
    return GroupPresentation(
        P.generators,
        tuple((term_to_word(rel.lhs), term_to_word(rel.rhs)) for rel in P.relations),
    )


def table_presentation(Q: FiniteQuandle, prefix: str = "q") -> QuandlePresentation:
    """Generators are the elements; one relation x * y = table[x][y] per pair."""
    gens = GeneratorSet(tuple(f"{prefix}{x}" for x in Q.elements))
    relations = tuple(
        Relation(star(Leaf(x), Leaf(y)), Leaf(Q.op(x, y)))
        for x in Q.elements
        for y in Q.elements
    )
    return QuandlePresentation(gens, relations)


def trivial_presentation(names: Sequence[str]) -> QuandlePresentation:
    gens = GeneratorSet(tuple(names))
    relations = tuple(
        Relation(star(Leaf(x), Leaf(y)), Leaf(x))
        for x in range(len(gens))
        for y in range(len(gens))
        if x != y
    )
    return QuandlePresentation(gens, relations)
