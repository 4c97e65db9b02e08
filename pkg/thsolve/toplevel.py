########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Top level functions and classes.
"""

from __future__ import absolute_import, print_function

import os
import sys

import numpy as np
import scipy

import thsolve
from thsolve.laurent import LaurentPolynomial
from thsolve.symbol import RationalSymbol


def print_versions():
    """Print all the versions of packages that thsolve relies on."""
    print("-=" * 38)
    print("thsolve version:   %s" % thsolve.__version__)
    if thsolve.git_description:
        print("thsolve git info:  %s" % thsolve.git_description)
    print("NumPy version:     %s" % np.__version__)
    print("SciPy version:     %s" % scipy.__version__)
    print("Python version:    %s" % sys.version)
    if os.name == "posix":
        (sysname, nodename, release, version, machine) = os.uname()
        print("Platform:          %s-%s" % (sys.platform, machine))
    print("Byte-ordering:     %s" % sys.byteorder)
    print("-=" * 38)


def symbol(num=1.0, den=None):
    """
    symbol(num=1.0, den=None)

    Return the rational symbol ``num / den``.

    Parameters
    ----------
    num : scalar, sequence or dict
        Numerator.  A sequence lists the coefficients of ``t**0, t**1,
        ...``; a dict maps exponents (possibly negative) to coefficients.
    den : scalar, sequence or dict, optional
        Denominator, in the same format.  Default is 1.

    Returns
    -------
    out : RationalSymbol
        The symbol in canonical form.

    See Also
    --------
    monomial, polynomial

    """
    return RationalSymbol(num, den)


def monomial(k, coeff=1.0):
    """Return ``coeff * t**k`` as a RationalSymbol."""
    return RationalSymbol.monomial(k, coeff)


def polynomial(coeffs, offset=0):
    """
    polynomial(coeffs, offset=0)

    Return a Laurent polynomial as a RationalSymbol.

    Parameters
    ----------
    coeffs : sequence or dict
        Coefficients starting at ``t**offset``, or a mapping from
        exponent to coefficient.
    offset : int
        Exponent of ``coeffs[0]`` when `coeffs` is a sequence.

    Examples
    --------
    >>> print(polynomial({6: 1, 4: 3}))
    t^6 + 3t^4

    """
    return RationalSymbol(LaurentPolynomial(coeffs, offset))
