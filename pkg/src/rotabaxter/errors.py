"""Exception hierarchy shared by every module of the package."""


class RotaBaxterError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(RotaBaxterError, ZeroDivisionError):
    pass


class DiscriminantMismatch(RotaBaxterError, ValueError):
    """Two quadratic-extension elements with different radicands met."""


class ExponentOutOfWindow(RotaBaxterError, ValueError):
    """A monomial left the active exponent window."""

    def __init__(self, mono, window):
        super().__init__(f"monomial {mono} outside {window}")
        self.mono = mono
        self.window = window


class InvalidFamilyParams(RotaBaxterError, ValueError):
    pass


class DegenerateDenominator(RotaBaxterError, ArithmeticError):
    """Every available linear constraint on a coefficient is degenerate."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class UnclassifiedMonomial(RotaBaxterError, ValueError):
    pass
