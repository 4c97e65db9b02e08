########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Toeplitz, Hankel and related operators on rational Hardy elements.

The operators act on rational functions without poles in the closed
unit disk.  Every composition is carried out as a chain of exact
projections of rational symbols; the finite section matrices at the
end of the module are only used as an independent check.
"""

from __future__ import absolute_import

import logging

import numpy as np
from scipy import linalg

from thsolve.errors import NotHardy, IndexPositive, IndexNegative
from thsolve.symbol import (
    project_p, project_q, flip_j, circle_conjugate,
    fourier_coefficients, _tosymbol)
from thsolve.utils import complex_to_pair

LOGGER = logging.getLogger(__name__)


class HardyElement(object):
    """A rational function analytic in the closed unit disk.

    Parameters
    ----------
    value : RationalSymbol, LaurentPolynomial or scalar
        The function.  It may not have negative powers of `t` nor poles
        with modulus ``<= 1 + defaults.circle_tolerance``.

    Raises
    ------
    NotHardy
        If `value` is not analytic in the closed disk.

    """

    def __init__(self, value=0.0):
        value = _tosymbol(value)
        if value is NotImplemented:
            raise TypeError("cannot build a Hardy element from %r" % (value,))
        if not value.is_hardy():
            raise NotHardy("%s is not analytic in the closed unit disk"
                           % value)
        self.value = value

    def iszero(self):
        return self.value.iszero()

    def taylor_coefficients(self, n):
        """Return the first `n` Taylor coefficients."""
        if n <= 0:
            return np.zeros(0, dtype=np.complex128)
        return fourier_coefficients(self.value, 0, n - 1)

    def __call__(self, t):
        return self.value(t)

    def __add__(self, other):
        return HardyElement(self.value + as_hardy(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return HardyElement(self.value - as_hardy(other).value)

    def __neg__(self):
        return HardyElement(-self.value)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return HardyElement(self.value * scalar)

    __rmul__ = __mul__

    def shift(self, k):
        """Return ``t**k`` times this element (`k` must keep it analytic)."""
        return HardyElement(self.value.shift(k))

    def equals(self, other, tol=1e-9):
        return self.value.equals(as_hardy(other).value, tol)

    def to_json(self):
        return self.value.to_json()

    def __repr__(self):
        return "HardyElement(%s)" % self.value

    def __str__(self):
        return str(self.value)


def as_hardy(obj):
    """Return `obj` as a `HardyElement`."""
    if isinstance(obj, HardyElement):
        return obj
    return HardyElement(obj)


def _symbol(obj):
    if isinstance(obj, HardyElement):
        return obj.value
    return _tosymbol(obj)


def _base(fact):
    # Accept both plain and matching factorizations
    return getattr(fact, "base", fact)


#
# Operators
#

def toeplitz_apply(a, f):
    """Return ``T(a) f = P(a f)``."""
    return HardyElement(project_p(_tosymbol(a) * as_hardy(f).value))


def hankel_apply(b, f):
    """Return ``H(b) f = P(b Q(J f))``."""
    f = as_hardy(f)
    if f.iszero():
        return f
    return HardyElement(project_p(_tosymbol(b) * project_q(flip_j(f.value))))


def th_apply(a, b, f):
    """Return ``(T(a) + H(b)) f``.

    Examples
    --------
    >>> from thsolve.toplevel import monomial, polynomial
    >>> print(th_apply(monomial(-2), monomial(2), polynomial({8: 1, 6: 3})))
    t^6 + 3t^4

    """
    f = as_hardy(f)
    return HardyElement(toeplitz_apply(a, f).value +
                        hankel_apply(b, f).value)


def toeplitz_right_inverse_apply(fact, f):
    """Apply ``T(plus^-1) T(minus^-1) T(t^-index)`` to `f`.

    This is a right inverse of T(a) for a factorization of `a` with
    non-positive index.

    Raises
    ------
    IndexPositive
        If the factorization index is positive.

    """
    fact = _base(fact)
    if fact.index > 0:
        raise IndexPositive("right inverse needs index <= 0, got %d"
                            % fact.index)
    x = as_hardy(f).value.shift(-fact.index)
    x = project_p(fact.minus.inverse() * x)
    x = project_p(fact.plus.inverse() * x)
    return HardyElement(x)


def toeplitz_left_inverse_apply(fact, f):
    """Apply ``T(t^-index) T(plus^-1) T(minus^-1)`` to `f`.

    This is a left inverse of T(a) for a factorization of `a` with
    non-negative index.

    Raises
    ------
    IndexNegative
        If the factorization index is negative.

    """
    fact = _base(fact)
    if fact.index < 0:
        raise IndexNegative("left inverse needs index >= 0, got %d"
                            % fact.index)
    x = project_p(fact.minus.inverse() * as_hardy(f).value)
    x = project_p(fact.plus.inverse() * x)
    x = project_p(x.shift(-fact.index))
    return HardyElement(x)


def w_apply(c_fact, a_tilde_inv, phi):
    """Apply the operator mapping ker T(d) into ker(T(a) + H(b)).

    With ``x = T_r^-1(c) T(a~^-1) phi`` the result is
    ``x - J Q(c x) + J Q(a~^-1 phi)``.
    """
    phi = as_hardy(phi)
    if phi.iszero():
        return phi
    c_fact = _base(c_fact)
    c = c_fact.reconstruct()
    a_tilde_inv = _tosymbol(a_tilde_inv)
    x = toeplitz_right_inverse_apply(
        c_fact, toeplitz_apply(a_tilde_inv, phi)).value
    out = (x - flip_j(project_q(c * x)) +
           flip_j(project_q(a_tilde_inv * phi.value)))
    return HardyElement(out)


def inner_product(f, g):
    """Return the circle pairing ``integral f conj(g) |dt|``.

    It equals ``2 pi sum_k f_k conj(g_k)`` and is computed exactly as
    the zeroth Fourier coefficient of ``f * conj(g)``.
    """
    prod = _symbol(f) * circle_conjugate(_symbol(g))
    return complex(2 * np.pi * fourier_coefficients(prod, 0, 0)[0])


def l2_norm(g):
    """The l2 norm of the Fourier coefficients of `g`."""
    g = _symbol(g)
    if g.iszero():
        return 0.0
    return float(np.sqrt(max(inner_product(g, g).real, 0.0) / (2 * np.pi)))


def residual_norm(a, b, phi, f):
    """The l2 norm of the coefficients of ``(T(a) + H(b)) phi - f``."""
    return l2_norm(th_apply(a, b, phi).value - as_hardy(f).value)


#
# Finite sections (verification oracle)
#

class FiniteSectionMatrix(object):
    """The leading ``N x N`` block of the matrix of ``T(a) + H(b)``.

    Entry ``(j, k)`` is ``a_{j-k} + b_{j+k+1}``.
    """

    def __init__(self, entries):
        self.entries = np.asarray(entries, dtype=np.complex128)
        self.order = self.entries.shape[0]

    def __array__(self, dtype=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def dot(self, vec):
        return self.entries.dot(vec)

    def to_json(self):
        return [[complex_to_pair(v) for v in row] for row in self.entries]


def finite_section(a, b, N):
    """Assemble the `FiniteSectionMatrix` of order `N`."""
    N = int(N)
    if N < 1:
        raise ValueError("finite section order must be >= 1, got %d" % N)
    ac = fourier_coefficients(a, -(N - 1), N - 1)
    bc = fourier_coefficients(b, 1, 2 * N - 1)
    j, k = np.indices((N, N))
    return FiniteSectionMatrix(ac[j - k + N - 1] + bc[j + k])


def finite_section_solve(a, b, f, N):
    """Least squares solution of the order `N` finite section system."""
    A = finite_section(a, b, N).entries
    rhs = as_hardy(f).taylor_coefficients(N)
    x, res, rank, sv = linalg.lstsq(A, rhs)
    LOGGER.debug("finite section of order %d has rank %d", N, rank)
    return x


def null_space_dimension(a, b, N, degree=None, tol=1e-6):
    """Numerical nullity of the finite section restricted to low degrees.

    Only the first `degree` columns (default ``N - 8``) are used, which
    keeps the truncation of high degree columns out of the count.
    """
    A = finite_section(a, b, N).entries
    if degree is None:
        degree = N - 8
    degree = max(1, min(int(degree), N))
    s = linalg.svdvals(A[:, :degree])
    if len(s) == 0 or s[0] == 0:
        return degree
    return int(degree - np.sum(s > tol * s[0]))


def oracle_compare(a, b, f, particular, kernel, N, degree=16):
    """Compare a closed-form solution with the finite section solution.

    The least squares solution of the order `N` system is matched with
    ``particular + sum_k r_k kernel_k`` on the first `degree` Taylor
    coefficients, choosing the `r_k` that fit best.

    Returns
    -------
    dict
        ``deviation`` (largest coefficient deviation, None when there is
        no particular solution), ``null_space_dimension`` and ``order``.

    """
    degree = max(1, min(int(degree), int(N)))
    out = {"order": int(N),
           "null_space_dimension": null_space_dimension(a, b, N)}
    if particular is None:
        out["deviation"] = None
        return out
    x = finite_section_solve(a, b, f, N)[:degree]
    diff = x - as_hardy(particular).taylor_coefficients(degree)
    if kernel:
        K = np.column_stack([as_hardy(e).taylor_coefficients(degree)
                             for e in kernel])
        r = linalg.lstsq(K, diff)[0]
        diff = diff - K.dot(r)
    out["deviation"] = float(np.max(np.abs(diff))) if len(diff) else 0.0
    return out
