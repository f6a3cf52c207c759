"""Exception hierarchy shared by every module of the package."""


class NuError(Exception):
    """Base class for all errors raised by nucalc."""


class DomainMismatch(NuError):
    pass


class CodomainMismatch(NuError):
    pass


class NotCommuting(NuError):
    pass


class NotAPullback(NuError):
    pass


class ShapeMismatch(NuError):
    pass


class MiddleMismatch(NuError):
    pass


class WorldMismatch(NuError):
    pass


class NuSyntaxError(NuError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at offset {pos}"
        super().__init__(message)


class TypeCheckError(NuError):
    def __init__(self, message, term=None, expected=None, actual=None):
        self.term = term
        self.expected = expected
        self.actual = actual
        super().__init__(message)


class UnboundVariable(TypeCheckError):
    pass


class StuckTerm(NuError):
    pass


class FuelExhausted(NuError):
    """Tabulating a closure ran out of fuel; certification is aborted."""


class HigherOrderArgument(NuError):
    pass
