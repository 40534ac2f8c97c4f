"""Exception types raised by the numerical routines."""


class FracwaveError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FracwaveError, ValueError):
    """An argument lies outside the domain an operation supports."""


class NonConvergence(FracwaveError, ArithmeticError):
    """A series failed to meet the requested tolerance within its budget.

    For the Mittag-Leffler Taylor series this signals that the caller
    should switch to the asymptotic regime.
    """


class AsymptoticDivergence(FracwaveError, ArithmeticError):
    """The divergent asymptotic expansion cannot reach the tolerance.

    The smallest term of the expansion exceeds the requested tolerance,
    which means the argument is too small for the asymptotic regime.
    """


class CancellationLoss(FracwaveError, ArithmeticError):
    """Alternating-series cancellation exhausted the working precision."""


class BracketFailure(FracwaveError, RuntimeError):
    """No valid bracket around an interior extremum could be established."""
