"""Exception types shared across the package."""


class HilbgenError(Exception):
    """Base class for all errors raised by hilbgen."""


# series
class NonUnitConstantTerm(HilbgenError, ArithmeticError):
    pass


class InvalidShift(HilbgenError, ValueError):
    pass


class OrderExceeded(HilbgenError, IndexError):
    pass


# asymptotics
class PrecisionLoss(HilbgenError, ArithmeticError):
    pass


class RangeExceeded(UserWarning):
    """Emitted (not raised) when m lies outside the profile window."""


# contour oracle
class ConvergenceTooSlow(HilbgenError, ValueError):
    pass


class PoleProximity(HilbgenError, ArithmeticError):
    pass


class QuadratureUnstable(HilbgenError, ArithmeticError):
    pass
