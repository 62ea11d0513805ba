"""Exception hierarchy.

Domain errors (bad input, out-of-range parameters) and invariant violations
(a theorem-level guarantee failed) are kept apart so callers, and the CLI
exit codes, can tell them apart.
"""

from __future__ import annotations


class RobustMSTError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RobustMSTError, ValueError):
    """Invalid input or parameters."""


class GraphFormatError(DomainError):
    """Malformed graph or order text. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(DomainError):
    def __init__(self, message: str, u: int, v: int) -> None:
        super().__init__(message)
        self.u = u
        self.v = v


class WorkLimitExceeded(DomainError):
    pass


class InvariantViolation(RobustMSTError):
    """A mathematical invariant failed: either a bug or a counterexample."""
