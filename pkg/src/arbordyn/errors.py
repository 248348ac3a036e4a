"""Exception hierarchy shared by every module."""


class ArbordynError(Exception):
    """Base class for all library errors."""


class DivisionByZero(ArbordynError, ZeroDivisionError):
    pass


class DomainMismatch(ArbordynError, ValueError):
    """Operands live over different coefficient domains."""


class NotASquare(ArbordynError, ValueError):
    pass


class NotAPthPower(ArbordynError, ValueError):
    pass


class Undefined(ArbordynError, ValueError):
    """The requested quantity has no value for this input (e.g. gcd(0, 0))."""


class IllDefined(ArbordynError, ValueError):
    """Inseparability degree requested for an isotrivial map or c1 = 0."""


class DegenerateSquare(ArbordynError, ValueError):
    """The map is a square (c1 = 0)."""


class IteratesInseparable(ArbordynError, ValueError):
    pass


class CapExceeded(ArbordynError, RuntimeError):
    pass


class ParseError(ArbordynError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(ArbordynError, ValueError):
    """A documented precondition of an operation does not hold."""
