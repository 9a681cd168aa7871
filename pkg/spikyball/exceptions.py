"""Exceptions raised across the package."""


class GeometryError(ValueError):
    """Input violates a documented precondition or schema."""


class RetryBudgetExceeded(RuntimeError):
    """A seeded retry loop ran out of attempts.

    The message names the constraint that kept failing.
    """


class ConstructionError(RuntimeError):
    """A construction could not produce a verified direction set."""


class InvariantViolation(AssertionError):
    """An internal mathematical assertion failed."""
