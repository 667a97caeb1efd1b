from ...algebra.errors import QuandleAxiomError
from ...algebra.finite_quandle import verify_quandle
from ...services.loaders import parse_table_text, read_text
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Check a quandle table file against the three quandle axioms."

    def add_arguments(self, parser):
        parser.add_argument("table_file", help="File starting with 'quandle <n>'.")

    def run(self, *args, table_file, **options):
        rows = parse_table_text(read_text(table_file), "quandle")
        try:
            Q = verify_quandle(rows)
        except QuandleAxiomError as e:
            self.emit(f"invalid: axiom {e.axiom} ({e.AXIOM_NAMES[e.axiom]}) fails at {e.witness}")
            raise
        self.emit(f"valid quandle of order {Q.order}")
