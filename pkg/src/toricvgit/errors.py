"""Exception hierarchy shared by the library and the command line front end."""


class VGITError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(VGITError, ValueError):
    """Operands have incompatible dimensions or group shapes."""


class DomainError(VGITError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(VGITError, ValueError):
    """A documented precondition of the operation does not hold."""


class InvalidModelError(VGITError, ValueError):
    """The input describes no valid model (non-effective grading, bad fan)."""


class NonEffectiveGradingError(InvalidModelError):
    """The variable degrees do not generate the grading group."""
