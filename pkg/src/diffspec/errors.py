"""Exception hierarchy shared by every diffspec module."""


class DiffSpecError(Exception):
    """Base class for all library errors."""


class ParameterError(DiffSpecError, ValueError):
    """Invalid field or exponent parameters (CLI exit code 2)."""


class NotPrime(ParameterError):
    pass


class EvenCharacteristic(ParameterError):
    pass


class Overflow(ParameterError):
    pass


class TableBoundExceeded(ParameterError):
    pass


class RegimeViolation(ParameterError):
    """Parameters fall outside the regime a formula or check is stated for."""


class MuOutOfRange(ParameterError):
    pass


class SearchBoundExceeded(ParameterError):
    pass


class ZeroInverse(DiffSpecError, ZeroDivisionError):
    pass


class LogOfZero(DiffSpecError, ValueError):
    pass


class ZeroInput(DiffSpecError, ValueError):
    pass


class RangeEmpty(DiffSpecError, ValueError):
    """A parametrization index range is empty (the quadrant has no elements)."""


class InconsistentClosedForm(DiffSpecError, ArithmeticError):
    """Two routes through the same closed form disagree."""


class CacheError(DiffSpecError, OSError):
    pass
