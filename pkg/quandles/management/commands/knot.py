import logging

from django.core.management.base import CommandError

from ...algebra.knots import coloring_invariant, distinguish, parse_braid
from ...config import settings
from ...services.loaders import load_crossings
from ...services.reports import quandle_name
from ...services.specs import resolve_library, resolve_quandle
from ..base import EXIT_DOMAIN, ToolkitCommand

logger = logging.getLogger(__name__)


class Command(ToolkitCommand):
    help = "Quandle coloring invariants of knots given as closed braids or crossing lists."

    def add_arguments(self, parser):
        parser.add_argument("action", choices=["colorings", "distinguish"])
        for suffix in ("", "-a", "-b"):
            group = parser.add_mutually_exclusive_group()
            group.add_argument(f"--braid{suffix}", help="Braid text, e.g. 'strands=2 1 1 1'.")
            group.add_argument(f"--crossings{suffix}", help="Crossing-list file.")
        parser.add_argument("--quandle", help="Coloring quandle spec for colorings.")
        parser.add_argument("--library", default=settings.DEFAULT_LIBRARY,
                            help="Comma-separated quandle specs tried by distinguish.")
        self.add_threads_argument(parser)

    def _diagram(self, options, suffix):
        braid = options.get(f"braid{suffix}")
        crossings = options.get(f"crossings{suffix}")
        if braid is not None:
            return parse_braid(braid)
        if crossings is not None:
            return load_crossings(crossings)
        flag = suffix.replace("_", "-")
        raise CommandError(f"a diagram is required: --braid{flag} or --crossings{flag}", returncode=2)

    def run(self, *args, action, threads=1, **options):
        if action == "colorings":
            if not options.get("quandle"):
                raise CommandError("colorings needs --quandle", returncode=2)
            F = resolve_quandle(options["quandle"])
            result = coloring_invariant(self._diagram(options, ""), F, threads)
            self.emit(f"colorings {result.count}")
            self.emit(f"non-constant {'yes' if result.non_constant else 'no'}")
            return

        d1, d2 = self._diagram(options, "_a"), self._diagram(options, "_b")
        library = resolve_library(options["library"])
        found = distinguish(d1, d2, library, threads)
        if found is None:
            self.emit(f"indistinguishable by {', '.join(quandle_name(F) for F in library) or 'an empty library'}")
            raise CommandError("no library quandle distinguishes the knots", returncode=EXIT_DOMAIN)
        self.emit(f"distinguished by {quandle_name(found.quandle)} ({found.counts[0]} vs {found.counts[1]})")
