"""Shared exception types."""


class CapacityError(ValueError):
    """Raised when a requested problem size exceeds a configured limit."""
