"""Exception types shared across the package."""


class TensorWalkError(Exception):
    """Base class for all package errors."""


class ParameterError(TensorWalkError, ValueError):
    """A family parameter or option violates a documented constraint."""


class UnsupportedFamilyError(TensorWalkError):
    """The requested operation is not defined for this family."""


class ConsistencyError(TensorWalkError):
    """An internal invariant (stationarity, conservation, ...) failed."""


class BudgetError(TensorWalkError):
    """An exact computation exceeds the configured size or step budget."""
