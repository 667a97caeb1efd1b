"""
Exception hierarchy shared by the algebra library, the loaders and the commands.

Commands map these onto exit codes: DomainError -> 1, MalformedInputError and
ToolkitIOError -> 2.
"""

from typing import Optional, Tuple


class QuandleToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class MalformedInputError(QuandleToolkitError):
    """Input text or data that cannot be read as the expected structure."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.detail = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class TermSyntaxError(MalformedInputError):
    """A positioned syntax error in word, element or term text."""


class ToolkitIOError(QuandleToolkitError):
    """A file could not be read or written."""


class DomainError(QuandleToolkitError):
    """A mathematical object fails the property an operation requires."""


class GroupAxiomError(DomainError):
    def __init__(self, axiom: str, witness: Tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"group axiom violated: {axiom} at {witness}")


class QuandleAxiomError(DomainError):
    AXIOM_NAMES = {
        1: "idempotence",
        2: "right translations bijective",
        3: "right self-distributivity",
    }

    def __init__(self, axiom: int, witness: Tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(
            f"quandle axiom {axiom} ({self.AXIOM_NAMES[axiom]}) violated at {witness}"
        )


class NotASubgroupError(DomainError):
    pass


class AutomorphismError(DomainError):
    pass


class HomomorphismError(DomainError):
    def __init__(self, message: str, witness: Optional[Tuple[int, int]] = None):
        self.witness = witness
        if witness is not None:
            message = f"{message} at {witness}"
        super().__init__(message)


class PreconditionError(DomainError):
    pass


class LinkNotSupportedError(DomainError):
    def __init__(self, components: int):
        self.components = components
        super().__init__(
            f"braid closure has {components} components; only knots (1 component) are supported"
        )


class CensusLimitError(DomainError):
    pass


class InvariantError(QuandleToolkitError):
    """Internal consistency failure; indicates a bug rather than bad input."""
