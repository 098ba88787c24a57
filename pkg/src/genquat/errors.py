"""Exception hierarchy shared by the library and the command line."""


class GenQuatError(Exception):
    """Base class for all errors raised by genquat."""


class ParamsMismatch(GenQuatError, ValueError):
    """Binary operation on elements of two different algebras."""


class NonFiniteInput(GenQuatError, ValueError):
    """A coefficient or parameter is NaN or infinite."""


class DomainError(GenQuatError, ValueError):
    """The argument lies outside the domain of the requested function."""


class NullOrNegativeNorm(DomainError):
    """Norm form is zero or negative: no real logarithm exists."""


class NoPrincipalLog(DomainError):
    """Negative real element: the imaginary direction of the log is undetermined."""


class OutOfDomain(DomainError):
    """Hyperbolic or degenerate element with non-positive scalar part."""


class RangeError(GenQuatError, OverflowError):
    """Result is not representable in double precision."""
