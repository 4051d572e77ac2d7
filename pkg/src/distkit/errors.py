"""Shared exception types and search budgets."""

from __future__ import annotations

import os

DEFAULT_NODE_BUDGET = 10_000_000
BUDGET_ENV_VAR = "DISTKIT_BUDGET"


class DistkitError(Exception):
    """Base class for errors raised by this package."""


class Graph6Error(DistkitError, ValueError):
    """Malformed graph6 text."""


class BudgetExceeded(DistkitError):
    """A search ran out of its node budget before reaching a verdict.

    Deliberately distinct from a "no such object" result: callers must
    never treat an exhausted search as a proof of non-existence.
    """

    def __init__(self, what: str, spent: int, limit: int):
        super().__init__(f"{what}: budget exhausted after {spent} nodes (limit {limit})")
        self.what = what
        self.spent = spent
        self.limit = limit


class PathVerificationError(DistkitError):
    """A constructed path system failed independent verification."""


class InternalInvariantError(DistkitError):
    """A postcondition that is supposed to be mathematically forced failed."""


def default_budget_limit() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        limit = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if limit <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {limit}")
    return limit


class Budget:
    """Countdown node budget shared across the stages of one search."""

    __slots__ = ("limit", "spent", "what")

    def __init__(self, limit: int | None = None, what: str = "search"):
        self.limit = default_budget_limit() if limit is None else limit
        self.spent = 0
        self.what = what

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExceeded(self.what, self.spent, self.limit)

    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)
