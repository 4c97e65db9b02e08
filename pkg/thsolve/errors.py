########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Exceptions raised by thsolve.

All of them derive from `THSolveError`, which is a `ValueError`, so
invalid input can be caught the same way as elsewhere in NumPy code.
"""

from __future__ import absolute_import


class THSolveError(ValueError):
    """Base class for every thsolve error."""


class NonFredholm(THSolveError):
    """A symbol has a zero or pole on the unit circle."""


class PoleOnCircle(NonFredholm):
    """A symbol has a pole on the unit circle."""


class ZeroOrPoleOnCircle(NonFredholm):
    """A symbol has a zero or a pole on the unit circle, so its Toeplitz
    operator is not Fredholm."""


class RootFindingFailure(THSolveError):
    """The polynomial root solver did not produce usable roots."""


class NotMatching(THSolveError):
    """A pair violates ``a*a~ = b*b~`` or a function ``g*g~ = 1``."""


class SignatureIndeterminate(THSolveError):
    """The factorization signature is not close to +1 or -1."""


class IndexPositive(THSolveError):
    """A right inverse was requested for a positive factorization index."""


class IndexNegative(THSolveError):
    """A left inverse was requested for a negative factorization index."""


class KappaNonpositive(THSolveError):
    """Kernel generators were requested for a non-positive index."""


class WrongCase(THSolveError):
    """A case solver was called with indices outside its case."""


class NotHardy(THSolveError):
    """A function has poles in the closed unit disk or negative powers."""


class ConstraintSystemSingular(THSolveError):
    """The shifted-case constraint system could not be resolved."""

    def __init__(self, message, residuals=None):
        super(ConstraintSystemSingular, self).__init__(message)
        self.residuals = residuals


class ProblemFileError(THSolveError):
    """A problem or solution file is malformed."""
