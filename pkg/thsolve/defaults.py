########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Defaults for different thsolve parameters.
"""

from __future__ import absolute_import

from contextlib import contextmanager


class Defaults(object):
    """Class to tailor the setters and getters of default values."""

    _tolerances = ('magnitude_floor', 'circle_tolerance', 'root_tolerance',
                   'multiplicity_tolerance', 'cancel_tolerance',
                   'matching_tolerance', 'signature_tolerance',
                   'condition_tolerance',
                   'residual_tolerance', 'rank_tolerance',
                   'infeasibility_tolerance')

    def __init__(self):
        self.choices = {}

        # Choices setup
        self.choices['out_format'] = ("json", "text")

    def check_choices(self, name, value):
        if value not in self.choices[name]:
            raise ValueError(
                "'%s' is incorrect value for '%s' default" % (value, name))

    def check_tolerance(self, name, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ValueError(
                "'%s' default must be a real number, got %r" % (name, value))
        if not value > 0 or value >= 1:
            raise ValueError(
                "'%s' default must lie in (0, 1), got %r" % (name, value))
        return value

    def getall(self):
        """Return all the defaults as a dictionary."""
        out = dict((name, getattr(self, name)) for name in self._tolerances)
        out['sample_points'] = self.sample_points
        out['out_format'] = self.out_format
        return out

    #
    # Properties start here...
    #

    @property
    def magnitude_floor(self):
        return self.__magnitude_floor

    @magnitude_floor.setter
    def magnitude_floor(self, value):
        self.__magnitude_floor = self.check_tolerance('magnitude_floor', value)

    @property
    def circle_tolerance(self):
        return self.__circle_tolerance

    @circle_tolerance.setter
    def circle_tolerance(self, value):
        self.__circle_tolerance = self.check_tolerance(
            'circle_tolerance', value)

    @property
    def root_tolerance(self):
        return self.__root_tolerance

    @root_tolerance.setter
    def root_tolerance(self, value):
        self.__root_tolerance = self.check_tolerance('root_tolerance', value)

    @property
    def multiplicity_tolerance(self):
        return self.__multiplicity_tolerance

    @multiplicity_tolerance.setter
    def multiplicity_tolerance(self, value):
        self.__multiplicity_tolerance = self.check_tolerance(
            'multiplicity_tolerance', value)

    @property
    def cancel_tolerance(self):
        return self.__cancel_tolerance

    @cancel_tolerance.setter
    def cancel_tolerance(self, value):
        self.__cancel_tolerance = self.check_tolerance(
            'cancel_tolerance', value)

    @property
    def matching_tolerance(self):
        return self.__matching_tolerance

    @matching_tolerance.setter
    def matching_tolerance(self, value):
        self.__matching_tolerance = self.check_tolerance(
            'matching_tolerance', value)

    @property
    def signature_tolerance(self):
        return self.__signature_tolerance

    @signature_tolerance.setter
    def signature_tolerance(self, value):
        self.__signature_tolerance = self.check_tolerance(
            'signature_tolerance', value)

    @property
    def condition_tolerance(self):
        return self.__condition_tolerance

    @condition_tolerance.setter
    def condition_tolerance(self, value):
        self.__condition_tolerance = self.check_tolerance(
            'condition_tolerance', value)

    @property
    def residual_tolerance(self):
        return self.__residual_tolerance

    @residual_tolerance.setter
    def residual_tolerance(self, value):
        self.__residual_tolerance = self.check_tolerance(
            'residual_tolerance', value)

    @property
    def rank_tolerance(self):
        return self.__rank_tolerance

    @rank_tolerance.setter
    def rank_tolerance(self, value):
        self.__rank_tolerance = self.check_tolerance('rank_tolerance', value)

    @property
    def infeasibility_tolerance(self):
        return self.__infeasibility_tolerance

    @infeasibility_tolerance.setter
    def infeasibility_tolerance(self, value):
        self.__infeasibility_tolerance = self.check_tolerance(
            'infeasibility_tolerance', value)

    @property
    def sample_points(self):
        return self.__sample_points

    @sample_points.setter
    def sample_points(self, value):
        if int(value) != value or value < 8:
            raise ValueError(
                "'sample_points' default must be an integer >= 8, got %r"
                % (value,))
        self.__sample_points = int(value)

    @property
    def out_format(self):
        return self.__out_format

    @out_format.setter
    def out_format(self, value):
        self.check_choices('out_format', value)
        self.__out_format = value


defaults = Defaults()


# Default values start here...

defaults.magnitude_floor = 1e-12
"""Coefficients whose magnitude is below `magnitude_floor` times
max(1, largest magnitude) are pruned from Laurent polynomials.

"""

defaults.circle_tolerance = 1e-8
"""A root `z` with ``abs(abs(z) - 1) < circle_tolerance`` is considered
to lie on the unit circle.  Symbols with such zeros or poles are
refused.

"""

defaults.root_tolerance = 1e-7
"""Roots closer to each other than `root_tolerance` are merged into a
single root of higher multiplicity.  Polynomial roots also merge over
the wider disk an eigenvalue solver spreads a multiple root over, see
`multiplicity_tolerance`.

"""

defaults.multiplicity_tolerance = 1e-10
"""A cluster of `m` polynomial roots is one root of multiplicity `m`
when the first `m - 1` Taylor coefficients at its mean vanish to this
relative accuracy.

"""

defaults.cancel_tolerance = 1e-9
"""A numerator vanishes at a pole when its value there, relative to the
sum of the magnitudes of its terms, is below `cancel_tolerance`.

"""

defaults.matching_tolerance = 1e-8
"""Maximum deviation at circle sample points accepted by the matching
checks ``a*a~ = b*b~`` and ``g*g~ = 1``.

"""

defaults.signature_tolerance = 1e-6
"""Maximum distance of ``plus(0)`` from +1 or -1 for a matching
function.

"""

defaults.condition_tolerance = 1e-9
"""A solvability condition holds when its value is below this times
the Cauchy-Schwarz bound of its pairing.

"""

defaults.residual_tolerance = 1e-8
"""Residual l2 norm below which a candidate solves the equation.

"""

defaults.rank_tolerance = 1e-9
"""Relative singular value threshold for rank decisions in the
shifted-case constraint system.

"""

defaults.infeasibility_tolerance = 1e-7
"""The shifted-case constraint system is infeasible when its least
squares residual exceeds this.

"""

defaults.sample_points = 64
"""Number of circle points used by pointwise verifications.

"""

defaults.out_format = "json"
"""The format of the command line reports.  It can be 'json' or 'text'.

"""


@contextmanager
def defaults_ctx(**overrides):
    """Execute a context with some defaults.

    Any keyword must name an existing default; the previous values are
    restored on exit, even if the block raises.

    """
    orig = {}
    known = defaults.getall()
    try:
        for name, value in overrides.items():
            if value is None:
                continue
            if name not in known:
                raise ValueError("'%s' is not a thsolve default" % name)
            orig[name] = getattr(defaults, name)
            setattr(defaults, name, value)
        yield defaults
    finally:
        for name, value in orig.items():
            setattr(defaults, name, value)
