########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Laurent polynomials with complex coefficients.
"""

from __future__ import absolute_import

import numpy as np
from numpy.polynomial import polynomial as npoly

from thsolve.errors import ProblemFileError
from thsolve.utils import (
    to_ndarray, complex_to_pair, pair_to_complex, format_complex)


class LaurentPolynomial(object):
    """A finite sum ``sum_k c_k t**k`` with integer exponents `k`.

    Parameters
    ----------
    coeffs : sequence or dict
        Either the coefficients for consecutive exponents starting at
        `offset`, or a mapping from exponent to coefficient.
    offset : int
        The exponent of ``coeffs[0]`` when `coeffs` is a sequence.

    Notes
    -----
    Instances are immutable.  Coefficients below the magnitude floor
    (see `thsolve.defaults.magnitude_floor`) are pruned on construction,
    so the stored coefficient array starts and ends with a nonzero entry.
    The zero polynomial has an empty coefficient array and offset 0.

    """

    def __init__(self, coeffs=(), offset=0):
        if isinstance(coeffs, dict):
            if coeffs:
                lo = min(int(k) for k in coeffs)
                hi = max(int(k) for k in coeffs)
                dense = np.zeros(hi - lo + 1, dtype=np.complex128)
                for k, v in coeffs.items():
                    dense[int(k) - lo] += v
            else:
                lo, dense = 0, ()
            coeffs, offset = dense, lo
        arr, lead = to_ndarray(coeffs)
        self._coeffs = arr
        self._coeffs.flags.writeable = False
        self._offset = int(offset) + lead if len(arr) else 0

    @classmethod
    def monomial(cls, k, coeff=1.0):
        """Return ``coeff * t**k``."""
        return cls([coeff], offset=k)

    @classmethod
    def from_roots(cls, roots, lead=1.0, offset=0):
        """Return ``lead * t**offset * prod(t - r)`` over `roots`."""
        if len(roots) == 0:
            return cls([lead], offset=offset)
        return cls(lead * npoly.polyfromroots(roots), offset=offset)

    #
    # Basic accessors
    #

    @property
    def coeffs(self):
        """Coefficient array, from the lowest exponent upwards."""
        return self._coeffs

    @property
    def offset(self):
        """Lowest exponent with a nonzero coefficient."""
        return self._offset

    @property
    def high(self):
        """Highest exponent with a nonzero coefficient."""
        return self._offset + len(self._coeffs) - 1

    def iszero(self):
        return len(self._coeffs) == 0

    def terms(self):
        """Return the nonzero terms as an exponent -> coefficient dict."""
        return dict((self._offset + i, complex(c))
                    for i, c in enumerate(self._coeffs) if c != 0)

    def coefficient(self, n):
        """Return the coefficient of ``t**n``."""
        i = n - self._offset
        if 0 <= i < len(self._coeffs):
            return complex(self._coeffs[i])
        return 0j

    def coefficient_range(self, lo, hi):
        """Return the coefficients for exponents ``lo..hi`` (inclusive)."""
        out = np.zeros(max(hi - lo + 1, 0), dtype=np.complex128)
        if self.iszero() or hi < lo:
            return out
        a = max(lo, self._offset)
        b = min(hi, self.high)
        if a <= b:
            out[a - lo:b - lo + 1] = self._coeffs[a - self._offset:
                                                  b - self._offset + 1]
        return out

    def magnitude(self):
        """Largest coefficient magnitude (0 for the zero polynomial)."""
        if self.iszero():
            return 0.0
        return float(np.abs(self._coeffs).max())

    #
    # Arithmetic
    #

    def __add__(self, other):
        other = _aslaurent(other)
        if other is NotImplemented:
            return other
        if self.iszero():
            return other
        if other.iszero():
            return self
        lo = min(self._offset, other._offset)
        hi = max(self.high, other.high)
        out = self.coefficient_range(lo, hi) + other.coefficient_range(lo, hi)
        return LaurentPolynomial(out, offset=lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(-self._coeffs, offset=self._offset)

    def __sub__(self, other):
        other = _aslaurent(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if np.isscalar(other):
            return LaurentPolynomial(self._coeffs * other, offset=self._offset)
        other = _aslaurent(other)
        if other is NotImplemented:
            return other
        if self.iszero() or other.iszero():
            return LaurentPolynomial()
        return LaurentPolynomial(np.convolve(self._coeffs, other._coeffs),
                                 offset=self._offset + other._offset)

    __rmul__ = __mul__

    def __pow__(self, n):
        if int(n) != n or n < 0:
            raise ValueError("only non-negative integer powers supported")
        out = LaurentPolynomial([1.0])
        for _ in range(int(n)):
            out = out * self
        return out

    def shift(self, k):
        """Return ``t**k`` times this polynomial."""
        if self.iszero():
            return self
        return LaurentPolynomial(self._coeffs, offset=self._offset + k)

    def reflect(self):
        """Return the polynomial evaluated at ``1/t``."""
        if self.iszero():
            return self
        return LaurentPolynomial(self._coeffs[::-1], offset=-self.high)

    def conj(self):
        """Return the polynomial with conjugated coefficients."""
        return LaurentPolynomial(np.conj(self._coeffs), offset=self._offset)

    def deflate(self, root):
        """Divide by ``t - root`` (``root != 0``), dropping the remainder."""
        if self.iszero() or len(self._coeffs) == 1:
            raise ValueError("cannot deflate a monomial by a nonzero root")
        quo, _ = npoly.polydiv(self._coeffs, np.array([-root, 1.0]))
        return LaurentPolynomial(quo, offset=self._offset)

    def relative_value(self, z):
        """Return ``|p(z)| / sum_k |c_k| |z|**k`` (0 for the zero poly)."""
        if self.iszero():
            return 0.0
        powers = np.abs(z) ** np.arange(len(self._coeffs))
        scale = np.sum(np.abs(self._coeffs) * powers)
        if scale == 0:
            return 0.0
        return abs(npoly.polyval(z, self._coeffs)) / scale

    def roots(self):
        """Return the nonzero roots of the polynomial part.

        The roots are those of ``p(t) / t**offset``, computed as the
        eigenvalues of the companion matrix.
        """
        if len(self._coeffs) <= 1:
            return np.zeros(0, dtype=np.complex128)
        return npoly.polyroots(self._coeffs)

    def __call__(self, t):
        t = np.asarray(t, dtype=np.complex128)
        if self.iszero():
            return np.zeros_like(t)
        return npoly.polyval(t, self._coeffs) * t ** self._offset

    def allclose(self, other, atol=1e-10):
        """Coefficient-wise comparison within `atol`."""
        diff = self - _aslaurent(other)
        return diff.iszero() or diff.magnitude() <= atol

    def __eq__(self, other):
        other = _aslaurent(other)
        if other is NotImplemented:
            return False
        return self.allclose(other, atol=0)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    #
    # Serialization
    #

    def to_json(self):
        """Return a JSON mapping exponent (string) -> [re, im]."""
        return dict((str(k), complex_to_pair(v))
                    for k, v in sorted(self.terms().items()))

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ProblemFileError(
                "a Laurent polynomial must be a JSON object, got %r" % (data,))
        terms = {}
        for k, v in data.items():
            try:
                exp = int(k)
            except (TypeError, ValueError):
                raise ProblemFileError("exponent %r is not an integer" % (k,))
            terms[exp] = pair_to_complex(v)
        return cls(terms)

    def __repr__(self):
        return "LaurentPolynomial(%s)" % self

    def __str__(self):
        if self.iszero():
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "t"
            else:
                mono = "t^%d" % k
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(format_complex(c) + mono)
        return " + ".join(parts).replace("+ -", "- ")


def _aslaurent(obj):
    if isinstance(obj, LaurentPolynomial):
        return obj
    if np.isscalar(obj):
        return LaurentPolynomial([obj])
    return NotImplemented
