"""Exception types raised across the package."""


class RealZerosError(Exception):
    """Base class for every error raised by realzeros."""


class DivisionByZeroPolynomial(RealZerosError, ZeroDivisionError):
    pass


class BothZero(RealZerosError, ValueError):
    pass


class DegreeTooSmall(RealZerosError, ValueError):
    pass


class LevelOutOfRange(RealZerosError, ValueError):
    pass


class ZeroOrConstantInput(RealZerosError, ValueError):
    pass


class EndpointIsRoot(RealZerosError, ValueError):
    pass


class PreconditionViolated(RealZerosError, ValueError):
    pass


class InternalDisagreement(RealZerosError, RuntimeError):
    """The criterion and the Sturm oracle disagree. Always a bug."""


class NotInterlacing(RealZerosError, ValueError):
    """The downward recurrence produced b_k <= 0 or a deficient remainder.

    ``level`` is the index k at which the recurrence broke down and ``b``
    the offending coefficient (``None`` when the remainder had the wrong
    degree).
    """

    def __init__(self, message, level=None, b=None):
        super().__init__(message)
        self.level = level
        self.b = b


class FavardViolated(RealZerosError, ValueError):
    pass


class DimensionMismatch(RealZerosError, ValueError):
    pass


class ParseError(RealZerosError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotRealRooted(PreconditionViolated):
    pass
