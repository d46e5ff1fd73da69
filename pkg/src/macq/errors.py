class MacqError(Exception):
    """Base class for all errors raised by macq."""


class InvalidParameter(MacqError, ValueError):
    pass


class UnsupportedForm(MacqError, ValueError):
    """The expression cannot be put into a wedge of spheres and CP^n."""


class InconsistentComplex(MacqError, ValueError):
    """A chain complex whose differentials do not square to zero."""


class ResourceLimit(MacqError, RuntimeError):
    pass


class PreconditionError(MacqError, ValueError):
    pass


class NormalizationError(MacqError, ValueError):
    """No coordinate of the weight vector is a unit, so no pivot exists."""
