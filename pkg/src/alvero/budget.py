"""Work budget for the exact (symbolic) computations.

Coefficient swell makes runtimes of exact elimination hard to predict from the
input size alone, so every heavy loop (Bareiss updates, Buchberger reductions)
charges its work here and aborts with a diagnostic instead of hanging.  One
unit is roughly one term-by-term coefficient operation.
"""

from __future__ import annotations

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(Exception):
    """Raised when an exact computation runs past its configured work budget."""

    def __init__(self, used: int, limit: int, context: str = ""):
        self.used = used
        self.limit = limit
        self.context = context
        where = f" during {context}" if context else ""
        super().__init__(
            f"work budget exhausted{where}: {used} units used, limit {limit}"
        )


class Budget:
    """Mutable work counter shared across the stages of one command."""

    __slots__ = ("limit", "used", "context")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit <= 0:
            raise ValueError("budget limit must be positive")
        self.limit = limit
        self.used = 0
        self.context = ""

    def charge(self, units: int) -> None:
        self.used += units
        if self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit, self.context)

    def enter(self, context: str) -> None:
        """Label subsequent charges for diagnostics; purely informational."""
        self.context = context
