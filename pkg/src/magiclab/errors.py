"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """A search would exceed its configured node or subset budget.

    ``required`` carries the budget that would have sufficed when it can
    be computed up front (vertex enumeration); otherwise it is None.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ConsistencyError(RuntimeError):
    """An operation failed in a way the library's invariants rule out."""
