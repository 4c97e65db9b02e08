########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""
Unit tests for thsolve
======================

This package contains some modules which provide test cases for some
thsolve functionality.  They are collected by ``suite()``.
"""

from thsolve.tests.all import test, suite  # noqa
