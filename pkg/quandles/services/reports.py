# quandles/services/reports.py
"""
Line-oriented report formatting shared by the management commands.
Field order is fixed so reports can be compared byte for byte.
"""

from typing import Dict, Iterable, List

from sympy.combinatorics import Permutation

from ..algebra.decide import DecideOutcome, Verdict
from ..algebra.finite_quandle import FiniteQuandle
from ..algebra.free_group import GeneratorSet
from ..algebra.presented import Assignment, QuandlePresentation
from ..algebra.terms import Position, format_term


def format_cycles(p: Permutation) -> str:
    """Cycle notation without fixed points; the identity is `()`."""
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in cycles)


def quandle_name(F: FiniteQuandle) -> str:
    return F.label or f"table({F.order})"


def format_assignment(gens: GeneratorSet, a: Assignment) -> str:
    return " ".join(f"{name}={value}" for name, value in zip(gens.names, a))


def format_position(position: Position) -> str:
    return ".".join(str(step) for step in position) if position else "root"


def format_budget(spent: Dict[str, int]) -> str:
    return " ".join(f"{key}={value}" for key, value in spent.items())


def hom_report(P: QuandlePresentation, homs: Iterable[Assignment]) -> List[str]:
    lines = [format_assignment(P.generators, a) for a in homs]
    lines.append(f"count {len(lines)}")
    return lines


def decide_report(P: QuandlePresentation, outcome: DecideOutcome) -> List[str]:
    gens = P.generators
    lines = [outcome.verdict.value]
    if outcome.verdict is Verdict.EQUAL:
        lines.append(f"trace {len(outcome.trace)} steps")
        for i, step in enumerate(outcome.trace, start=1):
            lines.append(
                f"  {i}. {step.rule} at {format_position(step.position)}: "
                f"{format_term(step.before, gens)} -> {format_term(step.after, gens)}"
            )
    elif outcome.verdict is Verdict.DISTINCT:
        w = outcome.witness
        lines.append(f"witness {quandle_name(w.quandle)} {format_assignment(gens, w.assignment)}")
        lines.append(f"values {w.values[0]} vs {w.values[1]}")
    lines.append(f"budget {format_budget(outcome.budget_spent)}")
    return lines
