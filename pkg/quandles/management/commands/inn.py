from ...algebra.finite_quandle import inner_group
from ...services.reports import format_cycles
from ...services.specs import resolve_quandle
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Print the order of Inn(X) and its generators S_y in cycle notation."

    def add_arguments(self, parser):
        parser.add_argument("spec", help="Quandle spec naming exactly one quandle.")

    def run(self, *args, spec, **options):
        Q = resolve_quandle(spec)
        group = inner_group(Q)
        self.emit(f"order {group.order}")
        self.emit(sorted({format_cycles(g) for g in group.generators}))
