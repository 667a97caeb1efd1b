"""
Breadth-first rewriting of quandle terms under a presentation's relations and
the quandle axioms, with replayable traces.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .errors import InvariantError, PreconditionError
from .presented import QuandlePresentation
from .terms import Leaf, Node, Op, Position, QuandleTerm, positions, replace_at, star, star_inv, subterm

logger = logging.getLogger(__name__)

IDEMPOTENCE = "idempotence"
IDEMPOTENCE_REVERSED = "idempotence reversed"
CANCEL = "cancellation"
UNCANCEL_STAR = "cancellation reversed *"
UNCANCEL_STAR_INV = "cancellation reversed /"
DISTRIBUTE = "distributivity"
DISTRIBUTE_REVERSED = "distributivity reversed"


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    position: Position
    before: QuandleTerm
    after: QuandleTerm


def operand_pool(P: QuandlePresentation, *terms: QuandleTerm) -> Tuple[QuandleTerm, ...]:
    """
    The terms u that reverse cancellation may introduce: every generator, then
    every compound subterm of ``terms`` and of the relation sides, in pre-order
    of first appearance.
    """
    pool: Dict[QuandleTerm, None] = {Leaf(g): None for g in range(P.rank)}
    sources = list(terms)
    for rel in P.relations:
        sources += [rel.lhs, rel.rhs]
    for t in sources:
        for position in positions(t):
            pool.setdefault(subterm(t, position), None)
    return tuple(pool)


def local_rewrites(
    P: QuandlePresentation, s: QuandleTerm, operands: Sequence[QuandleTerm]
) -> Iterator[Tuple[str, QuandleTerm]]:
    """Every (rule, replacement) applicable at the root of s, in a fixed order."""
    for i, rel in enumerate(P.relations):
        if s == rel.lhs:
            yield f"relation {i}", rel.rhs
        if s == rel.rhs:
            yield f"relation {i} reversed", rel.lhs

    if isinstance(s, Node):
        left, right = s.left, s.right
        if s.op is Op.STAR and left == right:
            yield IDEMPOTENCE, left
        # ((t * u) / u) -> t and ((t / u) * u) -> t
        if isinstance(left, Node) and left.right == right and left.op is not s.op:
            yield CANCEL, left.left
        if s.op is Op.STAR and isinstance(left, Node) and left.op is Op.STAR:
            yield DISTRIBUTE, star(star(left.left, right), star(left.right, right))
        if (
            s.op is Op.STAR
            and isinstance(left, Node) and left.op is Op.STAR
            and isinstance(right, Node) and right.op is Op.STAR
            and left.right == right.right
        ):
            yield DISTRIBUTE_REVERSED, star(star(left.left, right.left), left.right)

    yield IDEMPOTENCE_REVERSED, star(s, s)
    for u in operands:
        yield UNCANCEL_STAR, star_inv(star(s, u), u)
        yield UNCANCEL_STAR_INV, star(star_inv(s, u), u)


def neighbours(
    P: QuandlePresentation, t: QuandleTerm, operands: Optional[Sequence[QuandleTerm]] = None
) -> Iterator[Tuple[str, Position, QuandleTerm]]:
    if operands is None:
        operands = operand_pool(P, t)
    for position in positions(t):
        for rule, replacement in local_rewrites(P, subterm(t, position), operands):
            yield rule, position, replace_at(t, position, replacement)


class RewriteSearch:
    """Resumable BFS from ``start``; one expansion generates every neighbour of one term."""

    def __init__(self, P: QuandlePresentation, start: QuandleTerm, target: Optional[QuandleTerm] = None):
        self.P = P
        self.start = start
        self.target = target
        self.operands = operand_pool(P, start) if target is None else operand_pool(P, start, target)
        self.queue = deque([start])
        self.parents: Dict[QuandleTerm, Optional[Tuple[QuandleTerm, str, Position]]] = {start: None}
        self.expansions = 0

    @property
    def found(self) -> bool:
        return self.target is not None and self.target in self.parents

    @property
    def exhausted(self) -> bool:
        """True while unexpanded terms remain, i.e. the closure is not complete."""
        return bool(self.queue)

    def step(self, limit: int) -> bool:
        done = 0
        while self.queue and done < limit and not self.found:
            term = self.queue.popleft()
            for rule, position, after in neighbours(self.P, term, self.operands):
                if after not in self.parents:
                    self.parents[after] = (term, rule, position)
                    self.queue.append(after)
            done += 1
        self.expansions += done
        return self.found

    def trace_to(self, term: QuandleTerm) -> List[RewriteStep]:
        if term not in self.parents:
            raise PreconditionError("term was not reached by the rewrite search")
        steps: List[RewriteStep] = []
        while self.parents[term] is not None:
            parent, rule, position = self.parents[term]
            steps.append(RewriteStep(rule, position, parent, term))
            term = parent
        steps.reverse()
        return steps


class RewriteClosure(NamedTuple):
    visited: FrozenSet[QuandleTerm]
    exhausted: bool


def rewrite_closure(P: QuandlePresentation, start: QuandleTerm, budget: int) -> RewriteClosure:
    if budget < 0:
        raise PreconditionError(f"rewrite budget must be >= 0, got {budget}")
    search = RewriteSearch(P, start)
    search.step(budget)
    logger.debug("rewrite_closure: %s terms after %s expansions", len(search.parents), search.expansions)
    return RewriteClosure(frozenset(search.parents), search.exhausted)


def replay_trace(P: QuandlePresentation, start: QuandleTerm, trace: List[RewriteStep]) -> QuandleTerm:
    """Re-apply each step from ``start``; returns the final term."""
    operands = operand_pool(P, start, trace[-1].after) if trace else ()
    current = start
    for i, step in enumerate(trace):
        if step.before != current:
            raise InvariantError(f"trace step {i} does not start from the previous term")
        try:
            local = subterm(current, step.position)
        except IndexError as e:
            raise InvariantError(f"trace step {i}: {e}") from e
        legal = any(
            rule == step.rule and replace_at(current, step.position, replacement) == step.after
            for rule, replacement in local_rewrites(P, local, operands)
        )
        if not legal:
            raise InvariantError(f"trace step {i} ({step.rule} at {step.position}) is not a legal rewrite")
        current = step.after
    return current
