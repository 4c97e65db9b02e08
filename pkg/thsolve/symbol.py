########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Rational symbols on the unit circle.

A `RationalSymbol` is stored as a Laurent polynomial numerator over a
monic denominator kept in factored form, ``prod (t - p)**m``, with no
pole at the origin (powers of `t` live in the numerator).  Poles are
computed once, when a symbol is built from coefficients or inverted;
products, sums and the involutions below just move them around, which
keeps the arithmetic exact up to rounding of the numerators.

The Riesz projection `project_p` keeps the nonnegative Fourier
coefficients of a symbol and `project_q` the negative ones.  Both are
computed from the partial fraction decomposition, so their results are
again rational.
"""

from __future__ import absolute_import

import logging

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.special import binom

from thsolve.defaults import defaults
from thsolve.errors import (
    PoleOnCircle, ZeroOrPoleOnCircle, RootFindingFailure, ProblemFileError)
from thsolve.laurent import LaurentPolynomial
from thsolve.utils import merge_roots, on_circle, circle_points

LOGGER = logging.getLogger(__name__)


class RationalSymbol(object):
    """Rational function ``num(t) / den(t)`` on the unit circle.

    Parameters
    ----------
    num : LaurentPolynomial, scalar, sequence or dict
        The numerator.  Sequences and dicts are passed on to
        `LaurentPolynomial`.
    den : LaurentPolynomial, scalar, sequence or dict, optional
        The denominator.  It defaults to the constant 1.

    Notes
    -----
    After construction the symbol is canonical: the denominator is
    monic with a nonzero constant term, the power of `t` sits in the
    numerator, and numerator and denominator share no root (within
    `defaults.cancel_tolerance`).

    """

    def __init__(self, num=1.0, den=None):
        if isinstance(num, RationalSymbol) or isinstance(den, RationalSymbol):
            out = _tosymbol(num)
            if out is NotImplemented:
                out = RationalSymbol(num)
            if den is not None:
                out = out / RationalSymbol(den)
            self._num, self._poles = out._num, out._poles
            return
        num = _tolaurent(num)
        if den is None:
            self._num, self._poles = _canonical(num, ())
            return
        den = _tolaurent(den)
        if den.iszero():
            raise ZeroDivisionError("the denominator is identically zero")
        lead = den.coeffs[-1]
        poles = _roots(den)
        num = num.shift(-den.offset) * (1.0 / lead)
        self._num, self._poles = _canonical(num, poles)

    @classmethod
    def _make(cls, num, poles):
        """Build a symbol from a numerator and a list of (pole, mult)."""
        obj = cls.__new__(cls)
        obj._num, obj._poles = _canonical(num, poles)
        return obj

    @classmethod
    def monomial(cls, k, coeff=1.0):
        """Return ``coeff * t**k``."""
        return cls._make(LaurentPolynomial.monomial(k, coeff), ())

    @classmethod
    def from_zeros_poles(cls, zeros=(), poles=(), lead=1.0, offset=0):
        """Return ``lead * t**offset * prod(t - z) / prod(t - p)``."""
        num = LaurentPolynomial.from_roots(list(zeros), lead, offset)
        return cls._make(num, [(complex(p), 1) for p in poles])

    #
    # Accessors
    #

    @property
    def num(self):
        """Numerator (a Laurent polynomial)."""
        return self._num

    @property
    def poles(self):
        """Tuple of ``(location, multiplicity)`` pairs of the denominator."""
        return self._poles

    @property
    def den(self):
        """Monic denominator as a Laurent polynomial."""
        roots = [p for p, m in self._poles for _ in range(m)]
        return LaurentPolynomial.from_roots(roots)

    def iszero(self):
        return self._num.iszero()

    def ispolynomial(self):
        """Whether the symbol is a Laurent polynomial (no nonzero poles)."""
        return len(self._poles) == 0

    def is_hardy(self, tol=None):
        """Whether the symbol extends analytically to the closed disk."""
        if tol is None:
            tol = defaults.circle_tolerance
        if self.iszero():
            return True
        if self._num.offset < 0:
            return False
        return all(abs(p) > 1 + tol for p, m in self._poles)

    def zeros(self):
        """Nonzero zeros as merged ``(location, multiplicity)`` pairs."""
        return _roots(self._num)

    def lead(self):
        """Leading (highest power) coefficient of the numerator."""
        return complex(self._num.coeffs[-1])

    def check_circle(self, zeros=False):
        """Raise if a pole (and, optionally, a zero) is on the circle."""
        for p, m in self._poles:
            if on_circle(p):
                raise PoleOnCircle("symbol %s has a pole at %r on the unit "
                                   "circle" % (self, p))
        if zeros:
            for z, m in self.zeros():
                if on_circle(z):
                    raise ZeroOrPoleOnCircle(
                        "symbol %s has a zero at %r on the unit circle"
                        % (self, z))

    #
    # Evaluation
    #

    def __call__(self, t):
        t = np.asarray(t, dtype=np.complex128)
        out = self._num(t)
        for p, m in self._poles:
            out = out / (t - p) ** m
        return out

    #
    # Arithmetic
    #

    def __mul__(self, other):
        if np.isscalar(other):
            return RationalSymbol._make(self._num * other, self._poles)
        other = _tosymbol(other)
        if other is NotImplemented:
            return other
        return RationalSymbol._make(self._num * other._num,
                                    self._poles + other._poles)

    __rmul__ = __mul__

    def __add__(self, other):
        other = _tosymbol(other)
        if other is NotImplemented:
            return other
        if self.iszero():
            return other
        if other.iszero():
            return self
        union, need_self, need_other = _common_poles(self._poles,
                                                     other._poles)
        num = (self._num * LaurentPolynomial.from_roots(need_self) +
               other._num * LaurentPolynomial.from_roots(need_other))
        return RationalSymbol._make(num, union)

    __radd__ = __add__

    def __neg__(self):
        return RationalSymbol._make(-self._num, self._poles)

    def __sub__(self, other):
        other = _tosymbol(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def inverse(self):
        """Return ``1 / self``."""
        if self.iszero():
            raise ZeroDivisionError("cannot invert the zero symbol")
        lead = self.lead()
        num = LaurentPolynomial.from_roots(
            [p for p, m in self._poles for _ in range(m)],
            lead=1.0 / lead, offset=-self._num.offset)
        return RationalSymbol._make(num, list(self.zeros()))

    def __truediv__(self, other):
        if np.isscalar(other):
            return self * (1.0 / other)
        other = _tosymbol(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    __div__ = __truediv__

    def __rtruediv__(self, other):
        return self.inverse() * other

    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        if int(n) != n:
            raise ValueError("only integer powers supported")
        base = self if n >= 0 else self.inverse()
        out = RationalSymbol.monomial(0)
        for _ in range(abs(int(n))):
            out = out * base
        return out

    def shift(self, k):
        """Return ``t**k`` times this symbol."""
        return RationalSymbol._make(self._num.shift(k), self._poles)

    #
    # Comparison
    #

    def equals(self, other, tol=1e-9):
        """Whether two symbols agree, by cross-multiplication."""
        other = _tosymbol(other)
        left = self._num * other.den
        right = other._num * self.den
        scale = max(1.0, left.magnitude(), right.magnitude())
        diff = left - right
        return diff.iszero() or diff.magnitude() <= tol * scale

    def __eq__(self, other):
        other = _tosymbol(other)
        if other is NotImplemented:
            return False
        return self.equals(other)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def max_deviation(self, other, points=None):
        """Largest pointwise difference to `other` on circle samples."""
        if points is None:
            points = circle_points(defaults.sample_points, shift=0.1)
        other = _tosymbol(other)
        return float(np.max(np.abs(self(points) - other(points))))

    #
    # Serialization
    #

    def to_json(self):
        out = {"num": self._num.to_json()}
        if self._poles:
            out["den"] = self.den.to_json()
        return out

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ProblemFileError(
                "a symbol must be a JSON object, got %r" % (data,))
        unknown = set(data) - set(["num", "den"])
        if unknown:
            raise ProblemFileError(
                "unknown keys in symbol: %s" % ", ".join(sorted(unknown)))
        if "num" not in data:
            raise ProblemFileError("a symbol needs a 'num' entry")
        num = LaurentPolynomial.from_json(data["num"])
        den = data.get("den")
        if den is not None:
            den = LaurentPolynomial.from_json(den)
        return cls(num, den)

    def __repr__(self):
        return "RationalSymbol(%s)" % self

    def __str__(self):
        if not self._poles:
            return str(self._num)
        return "(%s)/(%s)" % (self._num, self.den)


class PoleDecomposition(object):
    """Partial fraction decomposition of a rational symbol.

    The symbol equals ``laurent_part`` plus, for every pole term
    ``(p, m, coeffs)``, the sum ``coeffs[j-1] / (t - p)**j`` for
    ``j = 1..m``.  Pole terms are sorted by modulus.

    """

    def __init__(self, laurent_part, pole_terms):
        self.laurent_part = laurent_part
        self.pole_terms = pole_terms

    def inner_terms(self):
        return [pt for pt in self.pole_terms if abs(pt[0]) < 1]

    def outer_terms(self):
        return [pt for pt in self.pole_terms if abs(pt[0]) > 1]

    def __call__(self, t):
        t = np.asarray(t, dtype=np.complex128)
        out = self.laurent_part(t)
        for p, m, coeffs in self.pole_terms:
            for j, c in enumerate(coeffs, 1):
                out = out + c / (t - p) ** j
        return out

    def coefficients(self, lo, hi):
        """Fourier coefficients for exponents ``lo..hi``.

        Every pole term is expanded as a geometric-type series towards
        the side of the circle where it is analytic: in negative powers
        for poles inside the disk, in nonnegative powers outside.
        """
        n = np.arange(lo, hi + 1)
        out = self.laurent_part.coefficient_range(lo, hi)
        for p, m, coeffs in self.pole_terms:
            for j, c in enumerate(coeffs, 1):
                if c == 0:
                    continue
                if abs(p) < 1:
                    # t**-j * sum_k binom(k+j-1, j-1) p**k t**-k
                    mask = n <= -j
                    k = -n[mask] - j
                    out[mask] += c * binom(k + j - 1, j - 1) * p ** k
                else:
                    # (-p)**-j * sum_k binom(k+j-1, j-1) (t/p)**k
                    mask = n >= 0
                    k = n[mask]
                    out[mask] += (c * (-p) ** (-j) *
                                  binom(k + j - 1, j - 1) * p ** (-k))
        return out

    def to_symbol(self, laurent_part, terms):
        """Re-sum a Laurent polynomial and a subset of pole terms."""
        out = RationalSymbol._make(laurent_part, ())
        for p, m, coeffs in terms:
            out = out + _pole_term_symbol(p, m, coeffs)
        return out


#
# Operations on symbols
#

def tilde(g):
    """Return ``g(1/t)``."""
    g = _tosymbol(g)
    if g.iszero():
        return g
    scale = 1.0 + 0j
    total = 0
    for p, m in g.poles:
        scale *= (-p) ** m
        total += m
    num = g.num.reflect().shift(total) * (1.0 / scale)
    return RationalSymbol._make(num, [(1.0 / p, m) for p, m in g.poles])


def circle_conjugate(g):
    """Return the symbol whose values on the circle are ``conj(g(t))``.

    On ``|t| = 1`` one has ``conj(g(t)) = gbar(1/t)``, where `gbar`
    has conjugated coefficients.
    """
    g = _tosymbol(g)
    gbar = RationalSymbol._make(g.num.conj(),
                                [(np.conj(p), m) for p, m in g.poles])
    return tilde(gbar)


def flip_j(g):
    """Return ``t**-1 g(1/t)``."""
    return tilde(g).shift(-1)


def partial_fractions(g):
    """Return the `PoleDecomposition` of `g`.

    Raises
    ------
    PoleOnCircle
        If a pole lies within `defaults.circle_tolerance` of the circle.

    """
    g = _tosymbol(g)
    g.check_circle()
    if g.iszero():
        return PoleDecomposition(LaurentPolynomial(), [])
    e = g.num.offset
    n = np.array(g.num.coeffs)
    poles = list(g.poles)
    if e >= 0:
        numer = np.concatenate([np.zeros(e, dtype=np.complex128), n])
    else:
        numer = n
        poles.append((0j, -e))
    if not poles:
        return PoleDecomposition(g.num, [])
    droots = [p for p, m in poles for _ in range(m)]
    quo, _ = npoly.polydiv(numer, npoly.polyfromroots(droots))
    laurent = LaurentPolynomial(quo)
    terms = []
    for i, (p, m) in enumerate(poles):
        others = [q - p for k, (q, mq) in enumerate(poles) if k != i
                  for _ in range(mq)]
        top = _taylor_shift(numer, p, m)
        bottom = (npoly.polyfromroots(others) if others
                  else np.array([1.0 + 0j]))
        bottom = np.concatenate([bottom, np.zeros(m, dtype=np.complex128)])
        c = _series_divide(top, bottom[:m], m)
        # c[k] multiplies (t - p)**(k - m)
        coeffs = [complex(c[m - j]) for j in range(1, m + 1)]
        if p == 0:
            laurent = laurent + LaurentPolynomial(
                dict((-j, coeffs[j - 1]) for j in range(1, m + 1)))
        else:
            terms.append((p, m, coeffs))
    terms.sort(key=lambda pt: (abs(pt[0]), np.angle(pt[0])))
    return PoleDecomposition(laurent, terms)


def fourier_coefficients(g, lo, hi):
    """Return the Fourier coefficients of `g` for exponents ``lo..hi``.

    Examples
    --------
    >>> fourier_coefficients(RationalSymbol(1, [-2, 1]), 0, 2).real.tolist()
    [-0.5, -0.25, -0.125]

    """
    return partial_fractions(g).coefficients(lo, hi)


def project_p(g):
    """Riesz projection: keep the nonnegative Fourier coefficients."""
    dec = partial_fractions(g)
    lp = dec.laurent_part
    if lp.iszero() or lp.high < 0:
        keep = LaurentPolynomial()
    else:
        keep = LaurentPolynomial(lp.coefficient_range(0, lp.high))
    return dec.to_symbol(keep, dec.outer_terms())


def project_q(g):
    """Complementary projection ``Q = I - P``: keep negative coefficients."""
    dec = partial_fractions(g)
    lp = dec.laurent_part
    if lp.iszero() or lp.offset >= 0:
        keep = LaurentPolynomial()
    else:
        keep = LaurentPolynomial(lp.coefficient_range(lp.offset, -1),
                                 offset=lp.offset)
    return dec.to_symbol(keep, dec.inner_terms())


#
# Private helpers
#

def _tolaurent(obj):
    if isinstance(obj, LaurentPolynomial):
        return obj
    if np.isscalar(obj):
        return LaurentPolynomial([obj])
    return LaurentPolynomial(obj)


def _tosymbol(obj):
    if isinstance(obj, RationalSymbol):
        return obj
    if isinstance(obj, LaurentPolynomial):
        return RationalSymbol._make(obj, ())
    if np.isscalar(obj):
        return RationalSymbol._make(LaurentPolynomial([obj]), ())
    value = getattr(obj, "value", None)
    if isinstance(value, RationalSymbol):
        return value
    return NotImplemented


def _roots(lp):
    """Merged nonzero roots of a Laurent polynomial."""
    roots = lp.roots()
    if not np.all(np.isfinite(roots)):
        raise RootFindingFailure("root solver returned non-finite roots "
                                 "for %s" % lp)
    return merge_roots(roots, coeffs=lp.coeffs)


def _canonical(num, poles):
    """Merge pole clusters and cancel common numerator roots."""
    if num.iszero():
        return LaurentPolynomial(), ()
    expanded = [complex(p) for p, m in poles for _ in range(m)]
    merged = merge_roots(expanded) if expanded else []
    tol = defaults.cancel_tolerance
    out = []
    for p, m in merged:
        while m > 0 and len(num.coeffs) > 1 and num.relative_value(p) <= tol:
            num = num.deflate(p)
            m -= 1
        if m > 0:
            out.append((p, m))
    return num, tuple(out)


def _common_poles(left, right):
    """Union of two pole lists with the factors each side lacks."""
    tol = defaults.root_tolerance
    union = [[p, m, m, 0] for p, m in left]
    for q, mq in right:
        for entry in union:
            if abs(entry[0] - q) < tol:
                entry[3] = mq
                entry[1] = max(entry[1], mq)
                break
        else:
            union.append([q, mq, 0, mq])
    need_left, need_right = [], []
    for p, m, ml, mr in union:
        need_left.extend([p] * (m - ml))
        need_right.extend([p] * (m - mr))
    return [(p, m) for p, m, ml, mr in union], need_left, need_right


def _taylor_shift(coeffs, p, order):
    """First `order` Taylor coefficients of the polynomial at `p`."""
    out = np.zeros(order, dtype=np.complex128)
    # Repeated synthetic division by (t - p) yields the derivatives
    work = np.array(coeffs, dtype=np.complex128)
    for k in range(order):
        if len(work) == 0:
            break
        quo, rem = npoly.polydiv(work, np.array([-p, 1.0]))
        out[k] = rem[0] if len(rem) else 0
        if len(work) == 1:
            break
        work = quo
    return out


def _series_divide(top, bottom, order):
    """Truncated power series quotient ``top / bottom``."""
    out = np.zeros(order, dtype=np.complex128)
    b0 = bottom[0]
    for k in range(order):
        acc = top[k]
        for i in range(1, min(k, len(bottom) - 1) + 1):
            acc -= bottom[i] * out[k - i]
        out[k] = acc / b0
    return out


def _pole_term_symbol(p, m, coeffs):
    """Rational symbol ``sum_j coeffs[j-1] / (t - p)**j``."""
    num = LaurentPolynomial()
    base = LaurentPolynomial([-p, 1.0])
    for j, c in enumerate(coeffs, 1):
        num = num + (base ** (m - j)) * c
    return RationalSymbol._make(num, [(p, m)])
