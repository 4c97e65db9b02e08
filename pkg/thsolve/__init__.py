########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""
thsolve: closed-form Toeplitz plus Hankel solvers
=================================================

thsolve solves equations ``(T(a) + H(b)) phi = f`` on the Hardy space
of the unit circle when `a` and `b` are rational functions linked by
the matching condition ``a(t) a(1/t) = b(t) b(1/t)``.  The solutions
are given in closed form: a particular solution together with a basis
of the kernel, both again rational functions, obtained from scalar
Wiener-Hopf factorizations.

"""

from thsolve.defaults import defaults, defaults_ctx
from thsolve.errors import (
    THSolveError, NonFredholm, PoleOnCircle, ZeroOrPoleOnCircle,
    RootFindingFailure, NotMatching, SignatureIndeterminate, IndexPositive,
    IndexNegative, KappaNonpositive, WrongCase, NotHardy,
    ConstraintSystemSingular, ProblemFileError)
from thsolve.laurent import LaurentPolynomial
from thsolve.symbol import (
    RationalSymbol, PoleDecomposition, tilde, circle_conjugate,
    fourier_coefficients, project_p, project_q, flip_j, partial_fractions)
from thsolve.factorization import (
    WienerHopfFactorization, MatchingFactorization, winding_index,
    winding_number, factorize, matching_factorize, is_matching)
from thsolve.operators import (
    HardyElement, FiniteSectionMatrix, toeplitz_apply, hankel_apply,
    th_apply, toeplitz_right_inverse_apply, toeplitz_left_inverse_apply,
    w_apply, finite_section, inner_product, l2_norm, residual_norm,
    finite_section_solve, null_space_dimension)
from thsolve.solver import (
    MatchingPair, SubordinatedPair, KernelBasis, Condition,
    SolvabilityReport, SolutionSet, subordinated_pair, adjoint_pair,
    shift_pair, kernel_basis_functions, matrix_system_apply,
    matrix_system_solve, convert_matrix_to_th, convert_th_to_matrix,
    solve_case_pp, solve_case_nn, solve_case_pn, solve_case_np, solve)
from thsolve.problem import ProblemFile
from thsolve.toplevel import print_versions, symbol, monomial, polynomial

try:
    from thsolve.version import version as __version__
except ImportError:
    __version__ = "unknown"

try:
    from thsolve.tests import test
except ImportError:
    def test(*args, **kwargs):
        print("Could not import tests.")


def _get_git_description(path_):
    """ Get the output of git-describe when executed in a given path. """

    # imports in function because:
    # a) easier to refactor
    # b) clear they are only used here
    import subprocess
    import os
    import os.path as path

    # make an absolute path if required, for example when running in a clone
    if not path.isabs(path_):
        path_ = path.join(os.getcwd(), path_)
    try:
        label = subprocess.check_output(["git", "describe"], cwd=path_,
                                        stderr=subprocess.STDOUT).strip()
        return label.decode('ascii', 'replace')
    except OSError:  # in case git wasn't found
        pass
    except subprocess.CalledProcessError:  # not in git repo
        pass

git_description = _get_git_description(__path__[0])
