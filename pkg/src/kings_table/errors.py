"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceError(RuntimeError):
    """A request would exceed a documented size limit."""


class InconsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""
