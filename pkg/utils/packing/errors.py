"""Failure types shared by the counting, search and CLI layers."""

from __future__ import annotations

from typing import Any, Optional


class PatternBudgetExceeded(RuntimeError):
    """
    The pattern space is larger than the configured budget.

    ``total`` and ``budget`` are None when the space is not enumerable at all
    (too many vertices).
    """

    def __init__(
        self,
        total: Optional[int],
        budget: Optional[int],
        partial: Optional[Any] = None,
        message: Optional[str] = None,
    ):
        self.total = total
        self.budget = budget
        self.partial = partial
        super().__init__(
            message
            or f"Pattern space has {total} patterns, exceeding the budget of {budget}. "
            "Use list_packing_function_sampled or raise the budget."
        )


class InvariantViolation(RuntimeError):
    """A mathematical identity failed at run time; indicates a bug."""


class ConfigError(ValueError):
    """Invalid command-line configuration, tagged with a distinct code."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)
