"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration or search exceeded its configured budget."""
