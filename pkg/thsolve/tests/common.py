########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

from __future__ import absolute_import

import tempfile
import shutil

import unittest  # noqa
from unittest import TestCase, skipUnless, SkipTest  # noqa

import numpy as np

from thsolve.laurent import LaurentPolynomial
from thsolve.symbol import RationalSymbol, tilde
from thsolve.utils import circle_points


# Global variables for the tests
verbose = False
heavy = False


# Useful superclass for tests that write problem files
class MayBeTempDirTest():

    tempdir = False

    def setUp(self):
        if self.tempdir:
            prefix = 'thsolve-' + self.__class__.__name__
            self.rootdir = tempfile.mkdtemp(prefix=prefix)
        else:
            self.rootdir = None

    def tearDown(self):
        if self.rootdir:
            shutil.rmtree(self.rootdir)


def sample_deviation(f, g, n=16):
    """Largest difference of two callables at `n` circle points."""
    t = circle_points(n, shift=0.3)
    return float(np.max(np.abs(np.asarray(f(t)) - np.asarray(g(t)))))


def quadrature_coefficients(g, lo, hi, nodes=512):
    """Fourier coefficients by the trapezoidal rule on `nodes` points."""
    t = circle_points(nodes)
    vals = g(t)
    n = np.arange(lo, hi + 1)
    return np.array([np.mean(vals * t ** (-k)) for k in n])


#
# Random instances
#

def random_root(rng):
    """A root at distance >= 0.1 from the circle and modulus in [0.3, 3]."""
    if rng.uniform() < 0.5:
        r = rng.uniform(0.3, 0.9)
    else:
        r = rng.uniform(1.1, 3.0)
    return r * np.exp(2j * np.pi * rng.uniform())


def random_coefficient(rng):
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def random_lead(rng):
    return rng.uniform(0.5, 2) * np.exp(2j * np.pi * rng.uniform())


def random_symbol(rng, nzeros=2, npoles=2, offsets=(-1, 0, 1)):
    """A random rational symbol with no zeros or poles near the circle."""
    zeros = [random_root(rng) for _ in range(rng.randint(0, nzeros + 1))]
    poles = [random_root(rng) for _ in range(rng.randint(0, npoles + 1))]
    lead = random_lead(rng)
    offset = int(rng.choice(offsets))
    return RationalSymbol.from_zeros_poles(zeros, poles, lead, offset)


def random_matching_pair(rng):
    """Return ``(a, b)`` with ``a = (h / h~) b``, so that a a~ = b b~.

    Numerators and denominators have degree at most 4.
    """
    h = random_symbol(rng, nzeros=2, npoles=0, offsets=(0,))
    b = random_symbol(rng, nzeros=2, npoles=2)
    a = h * tilde(h).inverse() * b
    return a, b


def random_inner_root(rng, rmax=0.8):
    return rng.uniform(0.3, rmax) * np.exp(2j * np.pi * rng.uniform())


def random_outer_root(rng):
    return rng.uniform(1.25, 3.0) * np.exp(2j * np.pi * rng.uniform())


def random_separated_roots(rng, n, gap=0.2, draw=None):
    """`n` roots from `draw(rng)`, at mutual distance >= `gap`.

    By default roots have moduli in [0.3, 0.8] or [1.25, 3].
    """
    roots = []
    while len(roots) < n:
        if draw is not None:
            r = draw(rng)
        elif rng.uniform() < 0.5:
            r = random_inner_root(rng)
        else:
            r = random_outer_root(rng)
        if all(abs(r - s) >= gap for s in roots):
            roots.append(r)
    return roots


def random_repeated_symbol(rng, maxmult=4):
    """A symbol with a multiple zero, a multiple pole and two simple roots.

    Returns the symbol with the sorted zero and pole multiplicities.
    """
    z, z1, p, p1 = random_separated_roots(rng, 4)
    mz = rng.randint(2, maxmult + 1)
    mp = rng.randint(2, maxmult + 1)
    num = LaurentPolynomial.from_roots([z] * mz + [z1], random_lead(rng))
    den = LaurentPolynomial.from_roots([p] * mp + [p1])
    return RationalSymbol(num, den), [1, mz], [1, mp]


def random_polynomial(rng, degree=8):
    """A random polynomial of degree at most `degree`."""
    coeffs = [random_coefficient(rng)
              for _ in range(rng.randint(1, degree + 2))]
    return RationalSymbol(coeffs)


def random_hardy(rng):
    """A random rational function analytic in the closed disk."""
    zeros = [random_root(rng) for _ in range(rng.randint(0, 3))]
    poles = [rng.uniform(1.1, 3.0) * np.exp(2j * np.pi * rng.uniform())
             for _ in range(rng.randint(0, 3))]
    return RationalSymbol.from_zeros_poles(zeros, poles,
                                           random_coefficient(rng))


def sample_max(g, n=16):
    """max(1, largest modulus of `g` at `n` circle points)."""
    t = circle_points(n, shift=0.3)
    return max(1.0, float(np.max(np.abs(g(t)))))
