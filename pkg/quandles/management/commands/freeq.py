from ...algebra.errors import MalformedInputError
from ...algebra.free_group import GeneratorSet, format_word
from ...algebra.free_quandle import embed, format_element, parse_element, rack_op, rack_op_inv, separate
from ...algebra.grammar import names_in
from ...services.reports import format_cycles
from ..base import ToolkitCommand

ARITY = {"normalize": 1, "embed": 1, "op": 2, "separate": 2}


class Command(ToolkitCommand):
    help = "Free-quandle elements written `a ^ <word>`: normal forms, products, embedding, separation."

    def add_arguments(self, parser):
        parser.add_argument("action", choices=sorted(ARITY))
        parser.add_argument("elements", nargs="+", help="Elements such as 'a' or 'a ^ b a^-1'.")
        parser.add_argument("--gens", help="Comma-separated generators (default: names in the elements, sorted).")
        parser.add_argument("--inverse", action="store_true", help="With op: compute x *^-1 y.")

    def run(self, *args, action, elements, gens=None, inverse=False, **options):
        if len(elements) != ARITY[action]:
            raise MalformedInputError(f"{action} takes {ARITY[action]} element(s), got {len(elements)}")
        if gens:
            generators = GeneratorSet(tuple(g.strip() for g in gens.split(",") if g.strip()))
        else:
            generators = GeneratorSet(tuple(sorted({n for text in elements for n in names_in(text, "element")})))
        values = [parse_element(text, generators) for text in elements]

        if action == "normalize":
            self.emit(format_element(values[0], generators))
        elif action == "embed":
            self.emit(format_word(embed(values[0]), generators))
        elif action == "op":
            op = rack_op_inv if inverse else rack_op
            self.emit(format_element(op(*values), generators))
        else:
            witness = separate(*values, rank=len(generators))
            self.emit(f"degree {witness.degree}")
            for gen in range(len(generators)):
                self.emit(f"{generators.name(gen)} -> {format_cycles(witness.assignment[gen])}")
            for value, image in zip(values, witness.images):
                self.emit(f"image {format_element(value, generators)} = {format_cycles(image)}")
