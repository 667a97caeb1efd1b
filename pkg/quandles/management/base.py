# quandles/management/base.py
import logging

from django.core.management.base import BaseCommand, CommandError

from ..algebra.errors import DomainError, InvariantError, MalformedInputError, ToolkitIOError
from ..config import settings

logger = logging.getLogger(__name__)

EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


class ToolkitCommand(BaseCommand):
    """
    Base for the toolkit commands. Subclasses implement ``run`` and print
    reports with ``emit``; toolkit errors become CommandError with the exit
    code of their class, after whatever report was already printed.
    """

    requires_system_checks = []

    def add_threads_argument(self, parser):
        parser.add_argument(
            "--threads", type=int, default=settings.DEFAULT_THREADS,
            help="Worker threads for homomorphism searches (output does not depend on it).",
        )

    def emit(self, lines):
        if isinstance(lines, str):
            lines = [lines]
        for line in lines:
            self.stdout.write(line)

    def handle(self, *args, **options):
        logger.info("command %s started", self.__module__.rsplit(".", 1)[-1])
        try:
            self.run(*args, **options)
        except DomainError as e:
            raise CommandError(str(e), returncode=EXIT_DOMAIN) from e
        except (MalformedInputError, ToolkitIOError) as e:
            raise CommandError(str(e), returncode=EXIT_INPUT) from e
        except InvariantError as e:
            logger.exception("internal consistency failure: %s", e)
            raise

    def run(self, *args, **options):
        raise NotImplementedError("subclasses of ToolkitCommand must provide a run() method")
