"""Error taxonomy for the library.

Every failure mode raised by the numerical kernel or the polynomial
evaluators is a subclass of :class:`AssocPolyError`, so callers can
catch one base class.  The split between "validation" errors (bad
parameters) and "numerical" errors (a well-posed computation that
cannot be completed) is what drives the CLI exit codes.
"""

from __future__ import annotations


class AssocPolyError(Exception):
    """Base class for every library-specific error."""


# ---------------------------------------------------------------------------
# Parameter validation errors
# ---------------------------------------------------------------------------


class ZeroC(AssocPolyError):
    """The Meixner parameter c is zero (the recurrence divides by c)."""


class ZeroA(AssocPolyError):
    """The Charlier parameter a is zero (the recurrence divides by a)."""


class RestrictedParameter(AssocPolyError):
    """A parameter violates an explicit restriction of the formula in use."""


class DomainError(AssocPolyError):
    """An argument lies outside the evaluable domain of the requested form."""


# ---------------------------------------------------------------------------
# Numerical evaluation errors
# ---------------------------------------------------------------------------


class ZeroPochhammer(AssocPolyError):
    """A rising factorial is exactly zero where a nonzero value is required."""


class PoleArgument(AssocPolyError):
    """An argument hit a pole of the gamma function (nonpositive integer)."""


class DenominatorPole(AssocPolyError):
    """A denominator rising-factorial factor vanishes inside the summation range."""


class NotConverged(AssocPolyError):
    """An infinite series hit the term cap before meeting the tolerance.

    Carries the partial result in :attr:`outcome` so callers can inspect
    how far the summation got.
    """

    def __init__(self, message, outcome=None):
        super().__init__(message)
        self.outcome = outcome


class IllConditioned(AssocPolyError):
    """The only available evaluation route is numerically degenerate.

    Raised by the Gauss 2F1 connection formula when the parameter
    difference a - b sits within 1e-6 of an integer (gamma-function
    poles make the two-term formula 0/0) and no series route reaches
    the requested argument.
    """


class SingularIntegrand(AssocPolyError):
    """An Euler-integral factor vanishes on the integration interval."""


class QuadratureNotConverged(AssocPolyError):
    """Tanh-sinh refinement hit its level cap before the tolerance was met."""


class TailTooLarge(AssocPolyError):
    """A truncated generating-function partial sum has a non-negligible tail."""
