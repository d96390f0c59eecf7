class OddSympError(Exception):
    """Base class for every error raised by the kernel."""


class PartitionError(OddSympError, ValueError):
    pass


class LengthError(PartitionError):
    """A partition is too long for the rank it is used at."""


class RingError(OddSympError):
    pass


class VarTableMismatch(RingError, ValueError):
    pass


class NotDivisible(RingError, ArithmeticError):
    """No exact quotient exists in the Laurent ring."""


class NegativeExponentAtNonUnit(RingError, ValueError):
    pass


class ZeroAtNegativePower(RingError, ZeroDivisionError):
    pass


class NegativePowerError(RingError, ValueError):
    pass


class MatrixShapeError(OddSympError, ValueError):
    pass


class SingularPointError(OddSympError, ValueError):
    pass


class SeriesError(OddSympError, ValueError):
    pass
