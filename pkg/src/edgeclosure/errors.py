"""Exception hierarchy shared across the package."""


class EdgeClosureError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(EdgeClosureError):
    """Vectors or certificates with incompatible lengths."""


class ZeroIdealError(EdgeClosureError):
    """Operation requires a nonzero ideal (at least one generator)."""


class UnitIdealError(EdgeClosureError):
    """Operation rejects the unit ideal (zero-vector generator)."""


class GraphFormatError(EdgeClosureError):
    """Invalid graph JSON; the message carries the offending position."""


class InfeasibleInstanceError(EdgeClosureError):
    """Path-cover instance violates its inequality system."""


class ResourceCapError(EdgeClosureError):
    """A configured resource cap (lattice volume, nodes, wall clock) was hit."""
