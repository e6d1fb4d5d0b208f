"""Shared exception types.

All domain failures derive from ValueError so that callers who do not care
about the fine distinction can catch one thing.  The CLI maps DomainError to
exit code 1 and argparse usage problems to exit code 2.
"""


class DomainError(ValueError):
    """Input is syntactically fine but violates a domain precondition."""


class NotABasisError(DomainError):
    """A configuration expected to be a triangle basis is not one."""


class CollisionError(DomainError):
    """Two indices of a 3-permutation map to the same inversion point."""

    def __init__(self, message: str, labels: tuple[int, ...] = ()):
        super().__init__(message)
        self.labels = labels


class IllegalMoveError(DomainError):
    """A solitaire move failed a legality clause.

    The message names the violated clause so services can report it.
    """


class GuardExceededError(DomainError):
    """An enumeration size guard was exceeded without force=True."""


class ParseError(DomainError):
    """Malformed textual input.  Carries line and column when known."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
