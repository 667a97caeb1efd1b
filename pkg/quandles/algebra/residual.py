"""
Residual-finiteness witnesses at finite scale: homomorphisms into finite
quandles that separate a given pair of elements, and the Hopfian check.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence

from .errors import InvariantError, PreconditionError
from .finite_group import FiniteGroup, group_hom_check
from .finite_quandle import (
    FiniteQuandle,
    QuandleHom,
    check_quandle_automorphism,
    conj_quandle,
    core_quandle,
    fixed_subquandle,
    hom_check,
    product_coordinates,
    product_quandle,
    projection,
    trivial_quandle,
)
from .presented import hom_enumerate, table_presentation

logger = logging.getLogger(__name__)


class Separation(NamedTuple):
    hom: QuandleHom
    x: int
    y: int

    @property
    def separates(self) -> bool:
        return self.hom(self.x) != self.hom(self.y)


def _distinct(x: int, y: int):
    if x == y:
        raise PreconditionError(f"cannot separate element {x} from itself")


def finite_separator(Q: FiniteQuandle, x: int, y: int) -> Separation:
    """A finite quandle is its own finite quotient: the identity separates."""
    _distinct(x, y)
    return Separation(hom_check(Q, Q, tuple(Q.elements)), x, y)


def trivial_separator(n: int, x: int, y: int) -> Separation:
    """trivial(n) -> trivial(2), x -> 0 and everything else -> 1."""
    _distinct(x, y)
    Q = trivial_quandle(n)
    return Separation(hom_check(Q, trivial_quandle(2), tuple(0 if v == x else 1 for v in Q.elements)), x, y)


def product_separator(
    factors: Sequence[FiniteQuandle],
    x: int,
    y: int,
    witnesses: Optional[Sequence[Optional[QuandleHom]]] = None,
) -> Separation:
    """
    Separate two product elements through the first coordinate j where they
    differ: the projection onto factor j, followed by ``witnesses[j]`` when given.
    """
    _distinct(x, y)
    factors = list(factors)
    product = product_quandle(factors)
    cx, cy = product_coordinates(factors, x), product_coordinates(factors, y)
    j = next(i for i, (a, b) in enumerate(zip(cx, cy)) if a != b)
    hom = projection(factors, j, product)
    if witnesses is not None and witnesses[j] is not None:
        hom = hom.compose(witnesses[j])
    separation = Separation(hom, x, y)
    if not separation.separates:
        raise PreconditionError(f"the witness for factor {j} does not separate {cx[j]} from {cy[j]}")
    return separation


def induced_hom(G: FiniteGroup, F: FiniteGroup, group_images: Sequence[int], construction: str = "conj") -> QuandleHom:
    """A group hom G -> F read as Conj(G) -> Conj(F) or Core(G) -> Core(F)."""
    builders = {"conj": conj_quandle, "core": core_quandle}
    if construction not in builders:
        raise PreconditionError(f"induced_hom supports conj and core, got {construction!r}")
    images = group_hom_check(G, F, group_images)
    build = builders[construction]
    return hom_check(build(G), build(F), images)


def fixed_point_separator(Q: FiniteQuandle, alpha, x0: int) -> Separation:
    """
    eta(x) = (x, alpha(x)) into Q x Q. An element outside Fix(alpha) lands
    off the diagonal, so eta(x0) is separated from the image of Fix(alpha).
    """
    alpha = check_quandle_automorphism(Q, alpha)
    fixed = fixed_subquandle(Q, alpha)
    if fixed.empty:
        raise PreconditionError("the automorphism has no fixed points to separate from")
    if x0 in fixed.elements:
        raise PreconditionError(f"element {x0} is fixed by the automorphism")
    square = product_quandle([Q, Q])
    eta = hom_check(Q, square, tuple(x * Q.order + alpha(x) for x in Q.elements))
    if eta(x0) in {eta(f) for f in fixed.elements}:
        raise InvariantError("eta sends an unfixed element onto the image of Fix(alpha)")
    return Separation(eta, x0, min(fixed.elements))


def endomorphisms(Q: FiniteQuandle, threads: int = 1) -> List[QuandleHom]:
    homs = hom_enumerate(table_presentation(Q), Q, threads)
    return [QuandleHom(Q, Q, a) for a in homs]


class HopfianReport(NamedTuple):
    endomorphisms: int
    surjective: int
    counterexample: Optional[QuandleHom]

    @property
    def hopfian(self) -> bool:
        return self.counterexample is None


def hopfian_check(Q: FiniteQuandle, threads: int = 1) -> HopfianReport:
    """Every surjective endomorphism must be injective; report the first that is not."""
    endos = endomorphisms(Q, threads)
    surjective = [h for h in endos if h.is_surjective()]
    bad = next((h for h in surjective if not h.is_injective()), None)
    if bad is not None:
        logger.warning("hopfian_check: surjective non-injective endomorphism %s", bad.images)
    return HopfianReport(len(endos), len(surjective), bad)
