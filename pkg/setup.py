########################################################################
#
# License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

import setuptools_scm  # noqa: F401
from sys import version_info as v

# Check this Python version is supported
if any([(3,) < v < (3, 7)]):
    raise Exception("Unsupported Python version %d.%d. Requires Python >= 3.7." % v[:2])

from setuptools import setup

setup(
    install_requires=['numpy', 'scipy'],
)
