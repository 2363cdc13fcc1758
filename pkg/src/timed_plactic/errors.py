"""Shared exception types."""

from __future__ import annotations


class NotARowError(ValueError):
    """An operation that requires a (timed) row was given something else."""


class InvalidTableauError(ValueError):
    """Rows violate one of the tableau conditions."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search outgrew its state budget."""


class OracleSizeError(RuntimeError):
    """A brute-force oracle instance exceeds its size bound."""


class InvalidMoveError(ValueError):
    """A Knuth move failed validation on the given word.

    ``condition`` names the violated side condition, e.g. ``"length-mismatch"``.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


class NotationError(ValueError):
    """Malformed textual input; ``position`` is the character offset, if known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
