"""Exception types shared across the toolkit.

Every error that crosses a module boundary has a named class so callers can
react to the specific failure rather than parsing messages.
"""

from __future__ import annotations


class InvalidInput(ValueError):
    """A precondition on the arguments was violated."""


class DegenerateRandomness(RuntimeError):
    """Seeded random draws failed to produce a verified generic object
    within the retry budget."""


class ResourceLimit(RuntimeError):
    """An exhaustive search would exceed the configured work budget.

    Attributes:
        limit: the budget (elementary comparisons) that would be exceeded.
        estimate: the estimated cost of the search.
    """

    def __init__(self, message: str, limit: int, estimate: int | None = None):
        super().__init__(message)
        self.limit = limit
        self.estimate = estimate


class SizeShortfall(RuntimeError):
    """A construction could not reach the requested size.

    Attributes:
        achieved: the size that was actually reached.
    """

    def __init__(self, message: str, achieved: int):
        super().__init__(message)
        self.achieved = achieved


class DegenerateSystem(ArithmeticError):
    """An exponent linear system was singular.  This never happens for a
    valid chain; if it fires, it is a bug, not a recoverable condition."""


class InvariantViolation(RuntimeError):
    """An algebraic invariant that should hold for all valid inputs failed.
    Surfaced loudly instead of being clamped or ignored."""


class SweepFailed(RuntimeError):
    """A sweep produced too few usable rungs or a degenerate fit."""
