from django.core.management.base import CommandError

from ...algebra.census import census_counts
from ...algebra.decide import Verdict, decide_equal
from ...algebra.errors import MalformedInputError
from ...algebra.grammar import parse_term
from ...algebra.presented import hom_enumerate
from ...config import settings
from ...services.loaders import load_presentation
from ...services.reports import decide_report, hom_report
from ...services.specs import resolve_library, resolve_quandle
from ..base import EXIT_UNKNOWN, ToolkitCommand

USAGE = {
    "homs": ("presentation_file", "quandle_spec"),
    "decide": ("presentation_file", "term_1", "term_2"),
    "census": (),
}


class Command(ToolkitCommand):
    help = (
        "Finitely presented quandles: enumerate homomorphisms into a finite quandle, "
        "semi-decide equality of two terms, or count small quandles."
    )

    def add_arguments(self, parser):
        parser.add_argument("action", choices=sorted(USAGE))
        parser.add_argument("operands", nargs="*", help="homs: FILE SPEC; decide: FILE TERM TERM.")
        parser.add_argument("--budget", type=int, default=settings.DEFAULT_BUDGET,
                            help="Rewrite expansions allowed to decide.")
        parser.add_argument("--library", default=settings.DEFAULT_LIBRARY,
                            help="Comma-separated quandle specs tried by decide ('' for none).")
        parser.add_argument("--max-order", type=int, help="Largest order counted by census.")
        self.add_threads_argument(parser)

    def run(self, *args, action, operands, budget, library, max_order=None, threads=1, **options):
        expected = USAGE[action]
        if len(operands) != len(expected):
            raise MalformedInputError(f"{action} expects {' '.join(expected) or 'no operands'}")

        if action == "census":
            if max_order is None:
                raise MalformedInputError("census needs --max-order")
            counts = census_counts(max_order)
            self.emit([f"order {n}: {count}" for n, count in counts.items()])
            self.emit(f"total {sum(counts.values())}")
            return

        P = load_presentation(operands[0])
        if action == "homs":
            F = resolve_quandle(operands[1])
            self.emit(hom_report(P, hom_enumerate(P, F, threads)))
            return

        t1 = parse_term(operands[1], P.generators)
        t2 = parse_term(operands[2], P.generators)
        outcome = decide_equal(P, t1, t2, budget, resolve_library(library), threads)
        self.emit(decide_report(P, outcome))
        if outcome.verdict is Verdict.UNKNOWN:
            raise CommandError("undecided within the budget and library", returncode=EXIT_UNKNOWN)
