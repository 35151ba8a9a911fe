"""Exception types shared across the package."""


class CutIdealError(ValueError):
    """Base class for input errors raised by this package."""


class GraphError(CutIdealError):
    """Malformed, disconnected or otherwise invalid graph."""


class GuardExceeded(CutIdealError):
    """An input is larger than the desk-scale cap of an operation."""


class ContextMismatch(CutIdealError):
    """Two ideals (or monomials) live in different variable contexts."""


class UnitIdealError(CutIdealError):
    """A proper ideal was required but the unit ideal was produced."""
