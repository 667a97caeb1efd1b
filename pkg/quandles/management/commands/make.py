from ...services.loaders import format_quandle, write_text
from ...services.specs import resolve_quandle
from ..base import ToolkitCommand


class Command(ToolkitCommand):
    help = "Build a quandle from a spec (dihedral:3, conj:symmetric:3, ...) and write its table."

    def add_arguments(self, parser):
        parser.add_argument("spec", help="Quandle spec naming exactly one quandle.")
        parser.add_argument("--out", help="Write the table here instead of stdout.")

    def run(self, *args, spec, out=None, **options):
        Q = resolve_quandle(spec)
        text = format_quandle(Q)
        if out:
            write_text(out, text)
            self.emit(f"wrote {Q.label} (order {Q.order}) to {out}")
        else:
            self.stdout.write(text, ending="")
