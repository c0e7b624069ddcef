from __future__ import annotations


class MaxchordError(Exception):
    pass


class InvalidInputError(MaxchordError, ValueError):
    """Malformed diagram or matching input. The message names the offending index."""


class PreconditionError(MaxchordError, ValueError):
    pass


class InvariantViolationError(MaxchordError, RuntimeError):
    """A proven structural fact failed to hold. Always a bug, never expected input."""


class GuardExceededError(MaxchordError):
    pass


class VerificationMismatchError(MaxchordError):
    def __init__(self, message: str, cells: list[str] | None = None) -> None:
        super().__init__(message)
        self.cells = cells or []
