"""
Semi-decision of the word problem in a finitely presented quandle.

Two procedures run in alternating turns: a rewrite search from t1 looking for
t2 (a hit proves equality), and a countermodel search over a library of finite
quandles looking for a homomorphism that separates t1 from t2 (a hit proves
distinctness). The rewrite procedure always moves first.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import settings
from .errors import InvariantError, MalformedInputError, PreconditionError
from .finite_quandle import FiniteQuandle
from .free_quandle import free_normal_form
from .presented import Assignment, QuandlePresentation, hom_enumerate
from .rewriting import RewriteSearch, RewriteStep, replay_trace
from .terms import QuandleTerm, eval_term, generators_of

logger = logging.getLogger(__name__)


class Verdict(Enum):
    EQUAL = "EQUAL"
    DISTINCT = "DISTINCT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class DistinctWitness:
    quandle: FiniteQuandle
    assignment: Assignment
    values: Tuple[int, int]


@dataclass(frozen=True)
class DecideOutcome:
    verdict: Verdict
    trace: Tuple[RewriteStep, ...] = ()
    witness: Optional[DistinctWitness] = None
    budget_spent: Dict[str, int] = field(default_factory=dict)


class RewriteProcedure:
    """Breadth-first rewriting from t1, stopped as soon as t2 is reached."""

    def __init__(self, P: QuandlePresentation, t1: QuandleTerm, t2: QuandleTerm, budget: int):
        self.search = RewriteSearch(P, t1, t2)
        self.budget = budget

    @property
    def spent(self) -> int:
        return self.search.expansions

    @property
    def can_continue(self) -> bool:
        return self.spent < self.budget and self.search.exhausted

    def invoke(self, slice_size: int) -> Optional[List[RewriteStep]]:
        if self.search.found:
            return self.search.trace_to(self.search.target)
        self.search.step(min(slice_size, self.budget - self.spent))
        if self.search.found:
            return self.search.trace_to(self.search.target)
        return None


class CountermodelProcedure:
    """One library quandle per turn; every homomorphism into it is tried."""

    def __init__(
        self,
        P: QuandlePresentation,
        t1: QuandleTerm,
        t2: QuandleTerm,
        library: Sequence[FiniteQuandle],
        threads: int = 1,
    ):
        self.P = P
        self.t1 = t1
        self.t2 = t2
        self.pending = list(library)
        self.threads = threads
        self.quandles_tried = 0
        self.homs_checked = 0

    @property
    def can_continue(self) -> bool:
        return bool(self.pending)

    def invoke(self) -> Optional[DistinctWitness]:
        F = self.pending.pop(0)
        self.quandles_tried += 1
        for a in hom_enumerate(self.P, F, self.threads):
            self.homs_checked += 1
            v1, v2 = eval_term(self.t1, F, a), eval_term(self.t2, F, a)
            if v1 != v2:
                return DistinctWitness(F, a, (v1, v2))
        return None


class WordProblemExecutor:
    """
    Alternates the two procedures in fixed turns: ``slice_size`` rewrite
    expansions, then one library quandle. Stops at the first conclusive
    answer, or with UNKNOWN once the rewrite budget and the library are spent.
    """

    def __init__(
        self,
        P: QuandlePresentation,
        library: Sequence[FiniteQuandle],
        budget: int,
        threads: int = 1,
        slice_size: int = settings.REWRITE_SLICE,
    ):
        if budget < 0:
            raise PreconditionError(f"decide budget must be >= 0, got {budget}")
        if slice_size < 1:
            raise PreconditionError(f"rewrite slice must be >= 1, got {slice_size}")
        self.P = P
        self.library = list(library)
        self.budget = budget
        self.threads = threads
        self.slice_size = slice_size

    def _check_terms(self, *terms: QuandleTerm):
        for t in terms:
            bad = [g for g in generators_of(t) if g >= self.P.rank]
            if bad:
                raise MalformedInputError(f"term uses generator indices {sorted(bad)} outside the presentation")

    def invoke(self, t1: QuandleTerm, t2: QuandleTerm) -> DecideOutcome:
        self._check_terms(t1, t2)
        rewriter = RewriteProcedure(self.P, t1, t2, self.budget)
        counter = CountermodelProcedure(self.P, t1, t2, self.library, self.threads)

        def spent() -> Dict[str, int]:
            return {
                "rewrite_expansions": rewriter.spent,
                "quandles_tried": counter.quandles_tried,
                "homs_checked": counter.homs_checked,
            }

        turn = 0
        while True:
            if t1 == t2 or rewriter.can_continue:
                trace = rewriter.invoke(self.slice_size)
                if trace is not None:
                    return self._equal(t1, t2, trace, spent())
            if counter.can_continue:
                witness = counter.invoke()
                if witness is not None:
                    return self._distinct(t1, t2, witness, spent())
            turn += 1
            logger.debug("decide turn %s: %s", turn, spent())
            if not rewriter.can_continue and not counter.can_continue:
                return DecideOutcome(Verdict.UNKNOWN, budget_spent=spent())

    def _equal(self, t1, t2, trace: List[RewriteStep], spent: Dict[str, int]) -> DecideOutcome:
        if settings.CROSS_CHECK:
            if replay_trace(self.P, t1, trace) != t2:
                raise InvariantError("rewrite trace does not end at the second term")
            if not self.P.relations and free_normal_form(t1) != free_normal_form(t2):
                raise InvariantError("rewriting equated two distinct free-quandle elements")
        logger.info("decide: EQUAL after %s rewrite expansions", spent["rewrite_expansions"])
        return DecideOutcome(Verdict.EQUAL, trace=tuple(trace), budget_spent=spent)

    def _distinct(self, t1, t2, witness: DistinctWitness, spent: Dict[str, int]) -> DecideOutcome:
        if settings.CROSS_CHECK:
            F, a = witness.quandle, witness.assignment
            for i, rel in enumerate(self.P.relations):
                if eval_term(rel.lhs, F, a) != eval_term(rel.rhs, F, a):
                    raise InvariantError(f"countermodel assignment {a} breaks relation {i}")
            if eval_term(t1, F, a) == eval_term(t2, F, a):
                raise InvariantError(f"countermodel assignment {a} does not separate the terms")
        logger.info("decide: DISTINCT via %s", witness.quandle.label or f"table({witness.quandle.order})")
        return DecideOutcome(Verdict.DISTINCT, witness=witness, budget_spent=spent)


def decide_equal(
    P: QuandlePresentation,
    t1: QuandleTerm,
    t2: QuandleTerm,
    budget: int,
    library: Sequence[FiniteQuandle],
    threads: int = 1,
) -> DecideOutcome:
    return WordProblemExecutor(P, library, budget, threads).invoke(t1, t2)
