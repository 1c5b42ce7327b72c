"""Exception hierarchy shared by all modules."""


class InsdelError(Exception):
    """Base class for every error raised by this package."""


# finite fields / rings
class CompositeCharacteristic(InsdelError, ValueError):
    pass


class ReducibleModulus(InsdelError, ValueError):
    pass


class NotMonic(InsdelError, ValueError):
    pass


class FieldMismatch(InsdelError, ValueError):
    pass


class CharacteristicMismatch(InsdelError, ValueError):
    pass


class DivisionByZero(InsdelError, ZeroDivisionError):
    pass


# sequences
class PositionOutOfRange(InsdelError, IndexError):
    pass


class BudgetTooLarge(InsdelError, ValueError):
    pass


# codes and criterion
class DuplicatePoint(InsdelError, ValueError):
    pass


class InvalidCode(InsdelError, ValueError):
    pass


class LengthMismatch(InsdelError, ValueError):
    pass


class PreconditionError(InsdelError, ValueError):
    pass


class IndexOutOfRange(InsdelError, IndexError):
    pass


class DimensionTooLarge(InsdelError, ValueError):
    pass


class DegreeOverflow(InsdelError, ArithmeticError):
    """A determinant reached the degree bound, so ring non-vanishing certifies nothing."""


# constructions
class SearchExhausted(InsdelError, RuntimeError):
    pass


class AttemptsExhausted(InsdelError, RuntimeError):
    def __init__(self, message, attempts=0, stats=None):
        super().__init__(message)
        self.attempts = attempts
        self.stats = stats or {}


class WorkCapExceeded(InsdelError, RuntimeError):
    pass


class TooLargeToEnumerate(InsdelError, ValueError):
    pass


class DegenerateDimension(InsdelError, ValueError):
    pass
