########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Utility functions (mostly private).
"""

from __future__ import absolute_import

import numpy as np
from scipy.linalg import svdvals
from scipy.special import binom

from thsolve.defaults import defaults
from thsolve.errors import ProblemFileError


def circle_points(n, shift=0.0):
    """Return `n` equispaced points on the unit circle.

    A nonzero `shift` (in radians) rotates the nodes away from the real
    axis, which avoids sampling exactly at symmetric points.
    """
    theta = 2 * np.pi * np.arange(n) / n + shift
    return np.exp(1j * theta)


def random_circle_points(n, seed=0):
    """Return `n` pseudo-random points on the unit circle."""
    rng = np.random.RandomState(seed)
    return np.exp(2j * np.pi * rng.uniform(size=n))


def to_ndarray(array, floor=None):
    """Convert a sequence of coefficients into a trimmed complex ndarray.

    Returns ``(coeffs, lead)``, where `lead` is the number of leading
    (low order) entries dropped.  Entries below the magnitude floor,
    relative to max(1, largest magnitude), are zeroed first.
    """
    array = np.array(array, dtype=np.complex128).ravel()
    if not array.flags.contiguous:
        array = array.copy()
    if floor is None:
        floor = defaults.magnitude_floor
    if len(array) == 0:
        return array, 0
    scale = max(1.0, np.abs(array).max())
    array = np.where(np.abs(array) <= floor * scale, 0, array)
    nz = np.flatnonzero(array)
    if len(nz) == 0:
        return np.zeros(0, dtype=np.complex128), 0
    return array[nz[0]:nz[-1] + 1].copy(), int(nz[0])


def taylor_coefficients(coeffs, z, order):
    """First `order` Taylor coefficients at `z` of a polynomial.

    `coeffs` lists the coefficients from the constant term upwards.
    """
    coeffs = np.asarray(coeffs)
    i = np.arange(len(coeffs))
    out = np.zeros(order, dtype=np.result_type(coeffs, z, float))
    for k in range(min(order, len(coeffs))):
        out[k] = np.sum(binom(i[k:], k) * coeffs[k:] * z ** (i[k:] - k))
    return out


def is_multiple_root(coeffs, z, m, tol=None):
    """Whether `z` is an `m`-fold root of the polynomial with `coeffs`.

    The Taylor coefficients of order below `m` at `z` must vanish
    relative to the same sums taken over coefficient magnitudes.
    """
    if tol is None:
        tol = defaults.multiplicity_tolerance
    if m <= 1:
        return True
    values = np.abs(taylor_coefficients(coeffs, complex(z), m))
    scales = taylor_coefficients(np.abs(coeffs), abs(z), m)
    return bool(np.all(values <= tol * scales))


# Eigenvalues of a companion matrix spread an m-fold root over a disk
# of radius about eps**(1/m) times its modulus
_SPREAD = 1e-12


def _cluster_radius(m, center, tol):
    return max(tol, _SPREAD ** (1.0 / m)) * max(1.0, abs(center))


def _multiple_root_clusters(roots, coeffs, tol):
    """Greedily take the largest group of roots forming one multiple root."""
    pool = np.array(roots, dtype=np.complex128)
    clusters = []
    while len(pool):
        best = None
        for seed in pool:
            dist = np.abs(pool - seed)
            order = np.argsort(dist, kind="stable")
            sizes = np.arange(2, len(pool) + 1)
            radii = np.array([_cluster_radius(m, seed, tol) for m in sizes])
            fits = sizes[dist[order[sizes - 1]] <= 2.5 * radii]
            for m in fits[::-1]:
                if best is not None and m <= len(best):
                    break
                members = order[:m]
                center = pool[members].mean()
                spread = np.max(np.abs(pool[members] - center))
                if (spread <= _cluster_radius(m, center, tol) and
                        is_multiple_root(coeffs, center, m)):
                    best = members
                    break
        if best is None:
            # Only simple roots are left
            clusters.extend([complex(r)] for r in pool)
            break
        clusters.append([complex(r) for r in pool[np.sort(best)]])
        pool = np.delete(pool, best)
    return clusters


def cluster_roots(roots, tol=None, coeffs=None):
    """Group `roots` into lists of members that belong to one root.

    Without `coeffs`, members closer than `tol` to a peer are grouped.
    With the coefficients of the polynomial the roots were computed
    from, the nearest `m` roots also form one cluster when they fit in
    the disk an eigenvalue solver spreads an `m`-fold root over and the
    polynomial vanishes to order `m` at their mean.
    """
    if tol is None:
        tol = defaults.root_tolerance
    if coeffs is not None:
        return _multiple_root_clusters(roots, coeffs, tol)
    clusters = []
    for r in (complex(r) for r in roots):
        for cl in clusters:
            if any(abs(r - m) < tol for m in cl):
                cl.append(r)
                break
        else:
            clusters.append([r])
    return clusters


def merge_roots(roots, tol=None, coeffs=None):
    """Group `roots` into clusters, see `cluster_roots`.

    Returns a list of ``(location, multiplicity)`` pairs.  The location
    of a cluster is the mean of its members, which is much more
    accurate than any single member for a multiple root.
    """
    clusters = cluster_roots(roots, tol, coeffs)
    out = [(complex(np.mean(cl)), len(cl)) for cl in clusters]
    # Deterministic ordering: by modulus, then by argument
    out.sort(key=lambda rm: (round(abs(rm[0]), 12), np.angle(rm[0])))
    return out


def on_circle(z, tol=None):
    """Whether `z` lies within `tol` of the unit circle."""
    if tol is None:
        tol = defaults.circle_tolerance
    return abs(abs(z) - 1) < tol


def complex_to_pair(z):
    """Return the JSON representation ``[re, im]`` of a complex number."""
    z = complex(z)
    return [float(z.real), float(z.imag)]


def pair_to_complex(value):
    """Parse a JSON coefficient, either ``[re, im]`` or a plain number."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ProblemFileError(
                "coefficients must be [re, im] pairs, got %r" % (value,))
        re, im = value
    else:
        re, im = value, 0.0
    try:
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise ProblemFileError("cannot read %r as a coefficient" % (value,))


def format_complex(z, digits=6):
    """Return a compact human readable string for a complex number."""
    z = complex(z)
    if abs(z.imag) <= 10 ** -digits * max(1.0, abs(z.real)):
        return "%.*g" % (digits, z.real)
    if abs(z.real) <= 10 ** -digits * max(1.0, abs(z.imag)):
        return "%.*gj" % (digits, z.imag)
    return "(%.*g%+.*gj)" % (digits, z.real, digits, z.imag)


def numerical_rank(matrix, tol):
    """Rank of `matrix` from its singular values, relative to the largest."""
    matrix = np.atleast_2d(matrix)
    if matrix.size == 0:
        return 0
    s = svdvals(matrix)
    if len(s) == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))
