########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Wiener-Hopf factorization of rational symbols.

A symbol `g` without zeros or poles on the unit circle is written as
``g = minus * t**index * plus``, where `minus` and its inverse are
analytic outside the disk with ``minus(inf) = 1`` and `plus` and its
inverse are analytic in the closed disk.  The Toeplitz operator T(g)
is then Fredholm with ``ind T(g) = -index``.
"""

from __future__ import absolute_import

import logging

import numpy as np

from thsolve.defaults import defaults
from thsolve.errors import (
    ZeroOrPoleOnCircle, NotMatching, SignatureIndeterminate)
from thsolve.laurent import LaurentPolynomial
from thsolve.symbol import RationalSymbol, tilde, _tosymbol
from thsolve.utils import cluster_roots, circle_points, random_circle_points

LOGGER = logging.getLogger(__name__)


class WienerHopfFactorization(object):
    """The triple ``(minus, index, plus)`` of a factorized symbol."""

    def __init__(self, minus, index, plus):
        self.minus = minus
        self.index = int(index)
        self.plus = plus

    @property
    def kappa(self):
        """Fredholm index of the Toeplitz operator (``-index``)."""
        return -self.index

    def reconstruct(self):
        """Return ``minus * t**index * plus``."""
        return self.minus.shift(self.index) * self.plus

    def reconstruction_error(self, g, points=None):
        """Largest relative deviation from `g` at circle points."""
        if points is None:
            points = random_circle_points(100)
        g = _tosymbol(g)
        gv = g(points)
        rv = (self.minus(points) * points ** self.index * self.plus(points))
        return float(np.max(np.abs(rv - gv) / np.abs(gv)))

    def to_json(self):
        return {"minus": self.minus.to_json(), "index": self.index,
                "plus": self.plus.to_json()}

    def __repr__(self):
        return "WienerHopfFactorization(minus=%s, index=%d, plus=%s)" % (
            self.minus, self.index, self.plus)


class MatchingFactorization(object):
    """Factorization of a matching function together with its signature.

    For ``g * g~ = 1`` the factors are tied by
    ``minus = signature / tilde(plus)`` with ``signature = plus(0)``
    equal to +1 or -1.
    """

    def __init__(self, base, signature):
        self.base = base
        self.signature = int(signature)

    @property
    def kappa(self):
        return self.base.kappa

    def to_json(self):
        out = self.base.to_json()
        out["signature"] = self.signature
        return out

    def __repr__(self):
        return "MatchingFactorization(%r, signature=%+d)" % (
            self.base, self.signature)


def zeros_poles(g):
    """Split `g` into ``(lead, offset, zeros, poles)``.

    `zeros` and `poles` are merged ``(location, multiplicity)`` lists
    of nonzero roots, so that
    ``g = lead * t**offset * prod(t - z) / prod(t - p)``.

    Raises
    ------
    ZeroOrPoleOnCircle
        If a root, or a cluster of nearly coincident roots, touches the
        circle tolerance band.

    """
    g = _tosymbol(g)
    if g.iszero():
        raise ZeroOrPoleOnCircle("the zero symbol is not Fredholm")
    tol = defaults.circle_tolerance
    zeros = []
    for cl in cluster_roots(g.num.roots(), coeffs=g.num.coeffs):
        mods = np.abs(cl)
        inside, outside = np.any(mods < 1 - tol), np.any(mods > 1 + tol)
        if not (inside or outside) or (inside and outside):
            raise ZeroOrPoleOnCircle(
                "symbol %s has a zero at %r on the unit circle"
                % (g, complex(np.mean(cl))))
        zeros.append((complex(np.mean(cl)), len(cl)))
    for p, m in g.poles:
        if abs(abs(p) - 1) < tol:
            raise ZeroOrPoleOnCircle(
                "symbol %s has a pole at %r on the unit circle" % (g, p))
    return g.lead(), g.num.offset, zeros, list(g.poles)


def winding_index(g):
    """Return the factorization index of `g` (its winding number)."""
    lead, offset, zeros, poles = zeros_poles(g)
    return (offset + sum(m for z, m in zeros if abs(z) < 1) -
            sum(m for p, m in poles if abs(p) < 1))


def winding_number(g, nodes=1024):
    """Winding number of `g` about 0 from the unwrapped phase on the circle.

    This is an independent check of `winding_index` and assumes `g` is
    well resolved by `nodes` samples.
    """
    g = _tosymbol(g)
    t = circle_points(nodes + 1)
    t[-1] = t[0]
    phase = np.unwrap(np.angle(g(t)))
    return int(np.round((phase[-1] - phase[0]) / (2 * np.pi)))


def factorize(g):
    """Return the `WienerHopfFactorization` of `g`.

    Every zero or pole ``z`` inside the disk contributes ``(1 - z/t)``
    to `minus` (to the power of its multiplicity, negated for poles) and
    one unit to the index; the remaining roots and the leading
    coefficient go to `plus`.

    Examples
    --------
    >>> fact = factorize(RationalSymbol([0, 1, 2], [2, 1]))
    >>> fact.index
    2

    """
    lead, offset, zeros, poles = zeros_poles(g)
    zin = [z for z, m in zeros if abs(z) < 1 for _ in range(m)]
    zout = [z for z, m in zeros if abs(z) > 1 for _ in range(m)]
    pin = [(p, m) for p, m in poles if abs(p) < 1]
    pout = [(p, m) for p, m in poles if abs(p) > 1]
    npin = sum(m for p, m in pin)
    minus = RationalSymbol._make(
        LaurentPolynomial.from_roots(zin, offset=npin - len(zin)), pin)
    plus = RationalSymbol._make(LaurentPolynomial.from_roots(zout, lead),
                                pout)
    index = offset + len(zin) - npin
    LOGGER.debug("factorized %s: index %d", g, index)
    return WienerHopfFactorization(minus, index, plus)


def matching_deviation(g, points=None):
    """Largest deviation of ``g(t) g(1/t)`` from 1 at circle points."""
    g = _tosymbol(g)
    if points is None:
        points = circle_points(defaults.sample_points, shift=0.1)
    return float(np.max(np.abs(g(points) * g(1.0 / points) - 1)))


def is_matching(g, tol=None):
    """Whether ``g * tilde(g) = 1`` within `tol` at circle points."""
    if tol is None:
        tol = defaults.matching_tolerance
    return matching_deviation(g) <= tol


def matching_factorize(g):
    """Factorize a matching function and extract its signature.

    Raises
    ------
    NotMatching
        If ``g * tilde(g)`` deviates from 1.
    SignatureIndeterminate
        If ``plus(0)`` is not close to +1 or -1.

    """
    g = _tosymbol(g)
    dev = matching_deviation(g)
    if dev > defaults.matching_tolerance:
        raise NotMatching("g*g~ differs from 1 by %.3g for g = %s" % (dev, g))
    base = factorize(g)
    value = complex(base.plus(0.0))
    tol = defaults.signature_tolerance
    if abs(value - 1) < tol:
        signature = 1
    elif abs(value + 1) < tol:
        signature = -1
    else:
        raise SignatureIndeterminate(
            "plus(0) = %r is not +1 or -1 for g = %s" % (value, g))
    shape = tilde(base.plus).inverse() * signature
    mismatch = base.minus.max_deviation(shape)
    if mismatch > 1e-8:
        LOGGER.warning("minus factor of %s deviates by %.3g from "
                       "signature/tilde(plus)", g, mismatch)
    return MatchingFactorization(base, signature)
