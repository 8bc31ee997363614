"""Exception types shared across the package.

The CLI maps these to its exit-code contract: GraphInputError -> 1,
BudgetExceededError -> 2, RegimeError -> 3.
"""


class SteinerPackError(Exception):
    """Base class for all package errors."""


class GraphInputError(SteinerPackError):
    """Invalid graph data: bad sizes, missing edges, malformed graph6."""


class BudgetExceededError(SteinerPackError):
    """An exact search ran out of its node budget; no value is reported."""


class RegimeError(SteinerPackError):
    """Parameters fall outside a supported formula regime or size cap."""
