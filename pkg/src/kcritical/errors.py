"""Exception hierarchy shared by all kcritical modules."""


class KCriticalError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(KCriticalError, ValueError):
    """Arguments violate an operation's preconditions."""


class NoSolution(InvalidParams):
    """A Diophantine equation has no solution for the given coefficients."""


class NotBiregular(InvalidParams):
    """m(n-m+1)/n is not an integer, so no (a, b)-regular solution with b = n-m+1 exists."""


class IsBiregularCase(InvalidParams):
    """The irregular construction was requested where the biregular one applies."""


class InvalidStep(InvalidParams):
    """The step size does not divide x."""


class Inapplicable(InvalidParams):
    """A construction's gate condition does not hold for this parameter set."""


class OutOfRange(KCriticalError, IndexError):
    """A vertex index lies outside its color class."""


class ShapeError(KCriticalError, ValueError):
    """The graph has the wrong order for the requested check."""


class BudgetExceeded(KCriticalError):
    """An exhaustive search would exceed its configured budget."""


class NoPerfectMatching(KCriticalError):
    """A balanced graph has no perfect matching."""


class Unbalanced(ShapeError):
    """A balanced graph was required."""
