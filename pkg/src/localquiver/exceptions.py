"""Exception hierarchy shared by all modules."""


class QuiverError(Exception):
    """Base class for errors raised by localquiver."""


class DimensionError(QuiverError, ValueError):
    """A vector or matrix has the wrong length for the quiver it is paired with."""


class DomainError(QuiverError, ValueError):
    """An argument lies outside the domain of the operation."""


class InconsistencyError(QuiverError, RuntimeError):
    """A computed quantity is impossible for valid input, e.g. a negative arrow count."""
