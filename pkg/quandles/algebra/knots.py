"""
Knot quandle presentations from diagrams, and quandle coloring invariants.

Two diagram encodings are accepted: braid words, closed up into a knot, and
signed crossing lists in Wirtinger style (one arc name per under-arc).
"""

import logging
from typing import List, Literal, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from sympy.combinatorics import Permutation

from .errors import LinkNotSupportedError, MalformedInputError
from .finite_quandle import FiniteQuandle
from .free_group import NAME_PATTERN, GeneratorSet
from .presented import ColoringCount, QuandlePresentation, Relation, coloring_count
from .terms import Leaf, star, star_inv

logger = logging.getLogger(__name__)


class BraidWord(BaseModel):
    """sigma_i^{+-1} written as +-i, 1 <= i < strands."""

    model_config = ConfigDict(frozen=True)

    strands: int = Field(..., ge=1, description="Number of braid strands.")
    letters: Tuple[int, ...] = Field(default=(), description="Signed generator indices.")

    @model_validator(mode="after")
    def check_letters_in_range(self):
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(f"braid letter {letter} is out of range for {self.strands} strands")
        return self


class Crossing(BaseModel):
    model_config = ConfigDict(frozen=True)

    over: str = Field(..., description="Arc passing over the crossing.")
    under_in: str = Field(..., description="Under-arc entering the crossing.")
    under_out: str = Field(..., description="Under-arc leaving the crossing.")
    sign: Literal["+", "-"]

    @field_validator("over", "under_in", "under_out")
    @classmethod
    def check_arc_name(cls, value: str) -> str:
        if not NAME_PATTERN.match(value):
            raise ValueError(f"invalid arc name {value!r}")
        return value


class CrossingList(BaseModel):
    model_config = ConfigDict(frozen=True)

    crossings: Tuple[Crossing, ...] = ()

    @property
    def arcs(self) -> Tuple[str, ...]:
        if not self.crossings:
            return ("a",)
        names = set()
        for c in self.crossings:
            names.update((c.over, c.under_in, c.under_out))
        return tuple(sorted(names))


Diagram = Union[BraidWord, CrossingList]


def _validation_message(e: ValidationError) -> str:
    first = e.errors()[0]
    return first["msg"].removeprefix("Value error, ")


# ============================================================
# PARSING
# ============================================================

def parse_braid(text: str) -> BraidWord:
    """`strands=<k>` followed by whitespace-separated signed integers."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("strands="):
        raise MalformedInputError("braid text must start with strands=<k>")
    try:
        strands = int(tokens[0].removeprefix("strands="))
        letters = tuple(int(t) for t in tokens[1:])
    except ValueError as e:
        raise MalformedInputError(f"braid text is not numeric: {e}") from None
    try:
        return BraidWord(strands=strands, letters=letters)
    except ValidationError as e:
        raise MalformedInputError(_validation_message(e)) from None


def parse_crossing_list(text: str) -> CrossingList:
    """One `over=<arc> in=<arc> out=<arc> sign=<+|->` line per crossing."""
    keys = {"over": "over", "in": "under_in", "out": "under_out", "sign": "sign"}
    crossings: List[Crossing] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = {}
        for token in line.split():
            key, sep, value = token.partition("=")
            if not sep or key not in keys or keys[key] in fields:
                raise MalformedInputError(f"unexpected crossing field {token!r}", lineno)
            fields[keys[key]] = value
        if len(fields) != len(keys):
            missing = sorted(k for k, v in keys.items() if v not in fields)
            raise MalformedInputError(f"crossing is missing {', '.join(missing)}", lineno)
        try:
            crossings.append(Crossing(**fields))
        except ValidationError as e:
            raise MalformedInputError(_validation_message(e), lineno) from None
    return CrossingList(crossings=tuple(crossings))


# ============================================================
# PRESENTATIONS
# ============================================================

def braid_components(b: BraidWord) -> int:
    """Number of components of the braid closure."""
    order = list(range(b.strands))
    for letter in b.letters:
        p = abs(letter) - 1
        order[p], order[p + 1] = order[p + 1], order[p]
    end_position = [0] * b.strands
    for position, strand in enumerate(order):
        end_position[strand] = position
    return Permutation(end_position).cycles


def braid_presentation(b: BraidWord) -> QuandlePresentation:
    """
    Generators g1..gk label the strands at the top; each crossing adds a fresh
    generator. sigma_i sends (a, b) to (b, a * b), sigma_i^{-1} sends (a, b)
    to (b / a, a). Closing the braid identifies the bottom labels with the top.
    """
    components = braid_components(b)
    if components != 1:
        raise LinkNotSupportedError(components)
    k = b.strands
    names = [f"g{j + 1}" for j in range(k)] + [f"c{m + 1}" for m in range(len(b.letters))]
    state = list(range(k))
    relations: List[Relation] = []
    for m, letter in enumerate(b.letters):
        p = abs(letter) - 1
        a, c_old = state[p], state[p + 1]
        fresh = k + m
        if letter > 0:
            relations.append(Relation(Leaf(fresh), star(Leaf(a), Leaf(c_old))))
            state[p], state[p + 1] = c_old, fresh
        else:
            relations.append(Relation(Leaf(fresh), star_inv(Leaf(c_old), Leaf(a))))
            state[p], state[p + 1] = fresh, a
    for j, label in enumerate(state):
        if label != j:
            relations.append(Relation(Leaf(label), Leaf(j)))
    return QuandlePresentation(GeneratorSet(tuple(names)), tuple(relations))


def _check_wiring(d: CrossingList):
    arcs = set(d.arcs)
    ins = [c.under_in for c in d.crossings]
    outs = [c.under_out for c in d.crossings]
    if len(set(outs)) != len(outs):
        raise MalformedInputError("an arc leaves more than one crossing as under_out")
    if len(set(ins)) != len(ins):
        raise MalformedInputError("an arc enters more than one crossing as under_in")
    if set(ins) != arcs or set(outs) != arcs:
        stray = sorted(arcs - (set(ins) & set(outs)))
        raise MalformedInputError(f"arcs {stray} do not both start and end at an undercrossing")
    successor = {c.under_in: c.under_out for c in d.crossings}
    start = d.arcs[0]
    seen, arc = {start}, successor[start]
    while arc != start:
        seen.add(arc)
        arc = successor[arc]
    if len(seen) != len(arcs):
        raise LinkNotSupportedError(_count_cycles(successor))


def _count_cycles(successor) -> int:
    remaining, cycles = set(successor), 0
    while remaining:
        arc = remaining.pop()
        cycles += 1
        arc = successor[arc]
        while arc in remaining:
            remaining.remove(arc)
            arc = successor[arc]
    return cycles


def crossing_presentation(d: CrossingList) -> QuandlePresentation:
    """under_out = under_in * over at a positive crossing, under_in / over at a negative one."""
    gens = GeneratorSet(d.arcs)
    if not d.crossings:
        return QuandlePresentation(gens, ())
    _check_wiring(d)
    relations = []
    for c in d.crossings:
        under_in, over = Leaf(gens.index(c.under_in)), Leaf(gens.index(c.over))
        rhs = star(under_in, over) if c.sign == "+" else star_inv(under_in, over)
        relations.append(Relation(Leaf(gens.index(c.under_out)), rhs))
    return QuandlePresentation(gens, tuple(relations))


def diagram_presentation(d: Diagram) -> QuandlePresentation:
    if isinstance(d, BraidWord):
        return braid_presentation(d)
    return crossing_presentation(d)


def mirror(d: Diagram) -> Diagram:
    """Reverse every crossing."""
    if isinstance(d, BraidWord):
        return BraidWord(strands=d.strands, letters=tuple(-letter for letter in d.letters))
    flipped = {"+": "-", "-": "+"}
    return CrossingList(crossings=tuple(c.model_copy(update={"sign": flipped[c.sign]}) for c in d.crossings))


# ============================================================
# INVARIANTS
# ============================================================

def coloring_invariant(d: Diagram, F: FiniteQuandle, threads: int = 1) -> ColoringCount:
    return coloring_count(diagram_presentation(d), F, threads)


class Distinction(NamedTuple):
    quandle: FiniteQuandle
    counts: Tuple[int, int]


def distinguish(
    d1: Diagram, d2: Diagram, library: Sequence[FiniteQuandle], threads: int = 1
) -> Optional[Distinction]:
    """The first library quandle whose coloring counts differ, or None."""
    P1, P2 = diagram_presentation(d1), diagram_presentation(d2)
    for F in library:
        c1 = coloring_count(P1, F, threads).count
        c2 = coloring_count(P2, F, threads).count
        logger.debug("distinguish: %s gives %s vs %s", F.label, c1, c2)
        if c1 != c2:
            return Distinction(F, (c1, c2))
    return None
