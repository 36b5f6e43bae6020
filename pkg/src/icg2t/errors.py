"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class NonSplitError(DomainError):
    """The matrix discriminant has no square root in the 2-adic integers."""


class DegenerateError(DomainError):
    """The input is split but cannot be normalized to the closed form."""


class BudgetError(RuntimeError):
    """A computation would exceed the configured work budget."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget
