"""Exception hierarchy shared by every fsing module."""


class FsingError(Exception):
    """Base class for all errors raised by fsing."""


class InputError(FsingError, ValueError):
    """Malformed or inconsistent user input."""


class UnknownVariable(InputError):
    def __init__(self, name):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


class PolySyntaxError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExponentOverflow(FsingError, OverflowError):
    pass


class MixedRings(FsingError, ValueError):
    pass


class NotDivisible(FsingError, ArithmeticError):
    pass


class OrderMismatch(FsingError, ValueError):
    pass


class NotAPowerOfP(FsingError, ValueError):
    pass


class BudgetExceeded(FsingError, RuntimeError):
    """A computation hit its configured step budget.

    Raised instead of returning a partial (and possibly wrong) answer.
    """


class UnitIdeal(FsingError, ValueError):
    pass


class IdealNotInMaximal(FsingError, ValueError):
    pass


class NotZeroDimensional(FsingError, ValueError):
    pass


class CInIdeal(FsingError, ValueError):
    pass


class NegativeT(FsingError, ValueError):
    pass
