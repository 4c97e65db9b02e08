########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

"""Closed-form solutions of ``(T(a) + H(b)) phi = f``.

The pair ``(a, b)`` has to satisfy the matching condition
``a a~ = b b~``.  The equation is then linked to a triangular 2x2
Toeplitz system whose diagonal symbols are the matching functions

    c = a / b  and  d = b / a~,

the subordinated pair.  Factorizing `c` and `d` yields explicit right
or left inverses, so both the particular solution and a basis of the
kernel can be written down.  Which formulas apply depends on the signs
of the Fredholm indices ``kappa_c`` and ``kappa_d`` of T(c) and T(d):

  =====  ====================  ===========================================
  case   indices               outcome
  =====  ====================  ===========================================
  PP     kappa_c, kappa_d >= 0  always solvable, kernel from c and d
  NN     kappa_c, kappa_d <= 0  unique solution if the conditions hold
  PN     kappa_c > 0 > kappa_d  solvable if the d-side conditions hold
  NP     kappa_c < 0 < kappa_d  reduced to PP by shifting with t**n
  =====  ====================  ===========================================

The right-hand side of the matrix system is always taken as (2f, 0).
With this choice the NN and PN formulas may fail for an `f` for which
the equation is solvable; the report then says that the method does
not apply rather than that there is no solution.
"""

from __future__ import absolute_import

import logging

import numpy as np
from scipy import linalg

from thsolve.defaults import defaults
from thsolve.errors import (
    NotMatching, KappaNonpositive, WrongCase, ConstraintSystemSingular)
from thsolve.factorization import matching_factorize, zeros_poles
from thsolve.laurent import LaurentPolynomial
from thsolve.operators import (
    HardyElement, as_hardy, toeplitz_apply, toeplitz_right_inverse_apply,
    toeplitz_left_inverse_apply, w_apply, inner_product, l2_norm,
    residual_norm)
from thsolve.symbol import (
    RationalSymbol, tilde, circle_conjugate, project_p, project_q, flip_j,
    fourier_coefficients, _tosymbol)
from thsolve.utils import (
    circle_points, complex_to_pair, format_complex, numerical_rank)

LOGGER = logging.getLogger(__name__)


#
# Pairs
#

class MatchingPair(object):
    """A pair of symbols ``(a, b)`` with ``a a~ = b b~``.

    Raises
    ------
    ZeroOrPoleOnCircle
        If `a` or `b` has a zero or pole on the unit circle.
    NotMatching
        If the matching condition fails at circle sample points.

    """

    def __init__(self, a, b):
        self.a = _tosymbol(a)
        self.b = _tosymbol(b)
        zeros_poles(self.a)
        zeros_poles(self.b)
        t = circle_points(defaults.sample_points, shift=0.1)
        lhs = self.a(t) * self.a(1.0 / t)
        rhs = self.b(t) * self.b(1.0 / t)
        scale = max(1.0, float(np.max(np.abs(lhs))))
        dev = float(np.max(np.abs(lhs - rhs)))
        if dev > defaults.matching_tolerance * scale:
            raise NotMatching(
                "a*a~ and b*b~ differ by %.3g for a = %s, b = %s"
                % (dev, self.a, self.b))

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __repr__(self):
        return "MatchingPair(a=%s, b=%s)" % (self.a, self.b)


class SubordinatedPair(object):
    """The factorized matching functions ``c = a/b`` and ``d = b/a~``."""

    def __init__(self, pair, c, d, a_tilde_inv, c_fact, d_fact):
        self.pair = pair
        self.c = c
        self.d = d
        self.a_tilde_inv = a_tilde_inv
        self.c_fact = c_fact
        self.d_fact = d_fact

    @property
    def kappa_c(self):
        return self.c_fact.kappa

    @property
    def kappa_d(self):
        return self.d_fact.kappa

    @property
    def case(self):
        """Case tag chosen by the index signs (zeros prefer PP, then NN)."""
        kc, kd = self.kappa_c, self.kappa_d
        if kc >= 0 and kd >= 0:
            return "PP"
        if kc <= 0 and kd <= 0:
            return "NN"
        if kc > 0:
            return "PN"
        return "NP"

    def __repr__(self):
        return ("SubordinatedPair(c=%s, d=%s, kappa_c=%d, kappa_d=%d)"
                % (self.c, self.d, self.kappa_c, self.kappa_d))


def subordinated_pair(p):
    """Build and factorize the subordinated pair of `p`."""
    a_tilde_inv = tilde(p.a).inverse()
    c = p.a * p.b.inverse()
    d = p.b * a_tilde_inv
    sp = SubordinatedPair(p, c, d, a_tilde_inv,
                          matching_factorize(c), matching_factorize(d))
    LOGGER.debug("subordinated pair: kappa_c = %d, kappa_d = %d",
                 sp.kappa_c, sp.kappa_d)
    return sp


def adjoint_pair(p):
    """Pair of the adjoint operator: ``(conj a, conj b~)`` on the circle.

    Its subordinated pair consists of the circle conjugates of `d` and
    `c`, in this order.
    """
    return MatchingPair(circle_conjugate(p.a), circle_conjugate(tilde(p.b)))


def shift_pair(p, n):
    """Return the pair ``(t**-n a, t**n b)``.

    ``T(a) + H(b) = (T(t**-n a) + H(t**n b)) T(t**n)`` on Hardy elements.
    """
    return MatchingPair(p.a.shift(-n), p.b.shift(n))


#
# Kernel bases
#

def kernel_basis_functions(kappa, sigma, sign_variant):
    """Return the polynomials spanning ker T(g) after division by `plus`.

    For ``kappa = 2m`` they are ``t**(m-k-1) +- sigma t**(m+k)``,
    ``k = 0..m-1``, and for ``kappa = 2m+1`` they are
    ``t**(m+k) +- sigma t**(m-k)``, ``k = 0..m``.  A vanishing element
    (odd `kappa`, ``k = 0``) is left out.

    Parameters
    ----------
    kappa : int
        Positive Fredholm index.
    sigma : {1, -1}
        The factorization signature.
    sign_variant : {'plus', 'minus'}
        The sign written as ``+-`` above.

    Raises
    ------
    KappaNonpositive
        If `kappa` is smaller than 1.

    """
    if kappa < 1:
        raise KappaNonpositive("kernel generators need kappa >= 1, got %d"
                               % kappa)
    if sign_variant not in ("plus", "minus"):
        raise ValueError("sign_variant must be 'plus' or 'minus', got %r"
                         % (sign_variant,))
    s = (1 if sign_variant == "plus" else -1) * sigma
    m, odd = divmod(int(kappa), 2)
    out = []
    if odd:
        for k in range(m + 1):
            u = (LaurentPolynomial.monomial(m + k) +
                 LaurentPolynomial.monomial(m - k, s))
            if not u.iszero():
                out.append(u)
    else:
        for k in range(m):
            out.append(LaurentPolynomial.monomial(m - k - 1) +
                       LaurentPolynomial.monomial(m + k, s))
    return out


def raw_arity(kappa):
    """Number of generators written by the formulas, vanishing ones too."""
    if kappa < 1:
        return 0
    m, odd = divmod(int(kappa), 2)
    return m + odd


class KernelBasis(object):
    """Linearly independent elements spanning the computed kernel."""

    def __init__(self, elements=(), raw_arity=0, notes=()):
        self.elements = list(elements)
        self.raw_arity = raw_arity
        self.notes = list(notes)

    @property
    def arity(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self):
        return [e.to_json() for e in self.elements]


def _independent(elements, notes):
    """Drop elements that depend linearly on earlier ones."""
    if not elements:
        return elements
    n = max(32, 4 * len(elements) + 8)
    kept, vecs = [], []
    for e in elements:
        trial = vecs + [e.taylor_coefficients(n)]
        if numerical_rank(np.array(trial), defaults.rank_tolerance) == \
                len(trial):
            kept.append(e)
            vecs = trial
        else:
            LOGGER.warning("dropped dependent kernel generator %s", e)
            notes.append("dropped dependent kernel generator %s" % e)
    return kept


def _kernel_from_c(sp, notes):
    kappa = sp.kappa_c
    if kappa < 1:
        return [], 0
    gens = kernel_basis_functions(kappa, sp.c_fact.signature, "minus")
    if len(gens) < raw_arity(kappa):
        notes.append("identically zero generator dropped for kappa_c = %d"
                     % kappa)
    inv = sp.c_fact.base.plus.inverse()
    return [HardyElement(inv * u) for u in gens], raw_arity(kappa)


def _kernel_from_d(sp, notes):
    kappa = sp.kappa_d
    if kappa < 1:
        return [], 0
    gens = kernel_basis_functions(kappa, sp.d_fact.signature, "plus")
    if len(gens) < raw_arity(kappa):
        notes.append("identically zero generator dropped for kappa_d = %d"
                     % kappa)
    inv = sp.d_fact.base.plus.inverse()
    out = [w_apply(sp.c_fact, sp.a_tilde_inv, HardyElement(inv * u))
           for u in gens]
    return out, raw_arity(kappa)


#
# Reports and solution sets
#

class Condition(object):
    """One evaluated solvability condition (a pairing that must vanish).

    `scale` is the Cauchy-Schwarz bound ``2 pi ||f|| ||g||`` of the
    pairing of `f` with the test function `g`; the condition holds when
    the value is small against it.
    """

    def __init__(self, index, block, description, value, scale=1.0):
        self.index = index
        self.block = block
        self.description = description
        self.value = complex(value)
        self.scale = float(scale)

    def holds(self, tol=None):
        if tol is None:
            tol = defaults.condition_tolerance
        return abs(self.value) <= tol * self.scale

    def to_json(self):
        return {"index": self.index, "block": self.block,
                "test_function": self.description,
                "value": complex_to_pair(self.value),
                "scale": self.scale}

    def __repr__(self):
        return "Condition(j=%d, block=%d, value=%s)" % (
            self.index, self.block, format_complex(self.value))


class SolvabilityReport(object):
    """Evaluated conditions and the resulting verdicts.

    `method_applicable` tells whether the formulas produced a solution.
    `solvable` is True when a solution was produced, False when the
    equation is proven unsolvable and None when undecided.
    """

    def __init__(self, conditions=(), method_applicable=None,
                 solvable=None, notes=()):
        self.conditions = list(conditions)
        if method_applicable is None:
            method_applicable = all(c.holds() for c in self.conditions)
        self.method_applicable = method_applicable
        self.solvable = solvable
        self.notes = list(notes)

    def to_json(self):
        return {"conditions": [c.to_json() for c in self.conditions],
                "method_applicable": self.method_applicable,
                "solvable": self.solvable,
                "notes": self.notes}


class SolutionSet(object):
    """Particular solution plus kernel: ``particular + sum r_k kernel_k``.

    `particular` is None when the method does not apply or the equation
    is unsolvable.  In the NP case `shifted` holds the solution set of
    the shifted problem, `constraint_rank` the rank of the linear
    constraints on its kernel parameters and `constraint_residuals` the
    least squares residuals of these constraints.
    """

    def __init__(self, particular, kernel, case_tag, report,
                 residual=None, shifted=None, constraint_rank=None,
                 constraint_residuals=None):
        self.particular = particular
        self.kernel = kernel
        self.case_tag = case_tag
        self.report = report
        self.residual = residual
        self.shifted = shifted
        self.constraint_rank = constraint_rank
        self.constraint_residuals = constraint_residuals

    @property
    def arity(self):
        return self.kernel.arity

    def evaluate(self, params=()):
        """Return ``particular + sum_k params[k] * kernel[k]``."""
        if self.particular is None:
            raise ValueError("there is no particular solution to evaluate")
        params = list(params)
        if len(params) != self.arity:
            raise ValueError("expected %d kernel parameters, got %d"
                             % (self.arity, len(params)))
        out = self.particular.value
        for r, e in zip(params, self.kernel):
            out = out + e.value * complex(r)
        return HardyElement(out)

    def to_json(self):
        part = self.particular
        return {"case": self.case_tag,
                "particular": part.to_json() if part is not None else None,
                "kernel": self.kernel.to_json(),
                "arity": self.arity,
                "raw_arity": self.kernel.raw_arity,
                "residual": self.residual,
                "report": self.report.to_json()}


#
# Matrix system
#

def matrix_system_apply(Phi, Psi, sp):
    """Apply the triangular system ``T(V)`` with ``V = [[0, d], [-c, a~^-1]]``.

    Returns ``(P(d Psi), P(-c Phi + a~^-1 Psi))``.
    """
    Phi, Psi = as_hardy(Phi), as_hardy(Psi)
    first = project_p(sp.d * Psi.value)
    second = project_p(-(sp.c * Phi.value) + sp.a_tilde_inv * Psi.value)
    return HardyElement(first), HardyElement(second)


def _inverse(fact, f):
    # Right inverse when T(g) is onto, left inverse otherwise
    if fact.base.index <= 0:
        return toeplitz_right_inverse_apply(fact, f)
    return toeplitz_left_inverse_apply(fact, f)


def matrix_system_solve(sp, g, h):
    """Solve ``T(V) (Phi, Psi) = (g, h)`` by back substitution.

    The second row is ``T(c) Phi = T(a~^-1) Psi - h``.  Right inverses
    are used for non-negative indices and left inverses otherwise, so
    the result is a solution whenever the right-hand side lies in the
    image.

    Raises
    ------
    WrongCase
        If ``kappa_c < 0 < kappa_d``: the system is neither right nor
        left invertible by these formulas.

    """
    if sp.kappa_c < 0 < sp.kappa_d:
        raise WrongCase("matrix system with kappa_c < 0 < kappa_d "
                        "needs the shift reduction")
    Psi = _inverse(sp.d_fact, g)
    rhs = toeplitz_apply(sp.a_tilde_inv, Psi).value - as_hardy(h).value
    Phi = _inverse(sp.c_fact, HardyElement(rhs))
    return Phi, Psi


def convert_matrix_to_th(Phi, Psi, sp):
    """Return ``(Phi - J Q(c Phi) + J Q(a~^-1 Psi)) / 2``."""
    Phi, Psi = as_hardy(Phi), as_hardy(Psi)
    out = (Phi.value - flip_j(project_q(sp.c * Phi.value)) +
           flip_j(project_q(sp.a_tilde_inv * Psi.value)))
    return HardyElement(out * 0.5)


def convert_th_to_matrix(phi, psi, p):
    """Return ``(phi + psi, P(b~ (phi + psi) + a~ J(phi - psi)))``.

    If `phi` solves the equation for ``(a, b)`` and `psi` the one for
    ``(a, -b)`` with the same right-hand side `f`, the pair solves the
    matrix system with right-hand side ``(2f, 0)``.
    """
    phi, psi = as_hardy(phi), as_hardy(psi)
    s = phi.value + psi.value
    second = project_p(tilde(p.b) * s +
                       tilde(p.a) * flip_j(phi.value - psi.value))
    return HardyElement(s), HardyElement(second)


#
# Solvability conditions
#

def _d_conditions(sp, f):
    """Conditions making ``2f`` an image of T(d) when ``kappa_d < 0``."""
    out = []
    n = -sp.kappa_d
    if n <= 0:
        return out
    dm_inv = sp.d_fact.base.minus.inverse()
    coeffs = fourier_coefficients(dm_inv * f.value, 0, n - 1)
    # conj(d_minus^-1) t^j has the l2 norm of d_minus^-1
    scale = 2 * np.pi * l2_norm(f) * l2_norm(dm_inv)
    test = circle_conjugate(dm_inv)
    for j in range(n):
        value = 2 * np.pi * np.conj(coeffs[j])
        pairing = inner_product(test.shift(j), f)
        if abs(pairing - value) > 1e-6 * max(scale, abs(value)):
            LOGGER.warning("condition %d: pairing %s differs from "
                           "coefficient value %s", j, pairing, value)
        out.append(Condition(j, 1, "conj(d_minus^-1) t^%d" % j, value,
                             scale))
    return out


def _c_conditions(sp, f, notes):
    """Conditions making ``T(a~^-1) Psi`` an image of T(c) (NN case).

    The test functions are ``T_r^-1(conj d) T(conj a~^-1)`` applied to
    ``conj(c_minus^-1) t^j``, with the factorization of ``conj d`` taken
    from the subordinated pair of the adjoint operator.
    """
    out = []
    n = -sp.kappa_c
    if n <= 0:
        return out
    adj = subordinated_pair(adjoint_pair(sp.pair))
    dbar = circle_conjugate(sp.d)
    mismatch = adj.c.max_deviation(dbar)
    if mismatch > 1e-8:
        LOGGER.warning("adjoint subordinated pair deviates from conj(d) "
                       "by %.3g", mismatch)
        notes.append("adjoint factorization deviates from conj(d) by %.3g"
                     % mismatch)
    cm_inv_bar = circle_conjugate(sp.c_fact.base.minus.inverse())
    ati_bar = circle_conjugate(sp.a_tilde_inv)
    f_norm = l2_norm(f)
    for j in range(n):
        u = HardyElement(cm_inv_bar.shift(j))
        w = toeplitz_right_inverse_apply(adj.c_fact,
                                         toeplitz_apply(ati_bar, u))
        value = inner_product(w, f)
        out.append(Condition(
            j, 2, "T_r^-1(conj d) T(conj a~^-1) conj(c_minus^-1) t^%d" % j,
            value, 2 * np.pi * f_norm * l2_norm(w)))
    return out


_NOT_APPLICABLE = ("method not applicable: (2f, 0) is not in the image of "
                   "the matrix system; the equation itself may still be "
                   "solvable")


def _check_case(sp, case):
    if sp.case != case:
        raise WrongCase("indices kappa_c = %d, kappa_d = %d do not belong "
                        "to case %s" % (sp.kappa_c, sp.kappa_d, case))


def _particular(sp, f):
    Phi, Psi = matrix_system_solve(sp, f * 2.0, HardyElement(0.0))
    return convert_matrix_to_th(Phi, Psi, sp)


def solve_case_pp(sp, f):
    """Solve when both indices are non-negative (always solvable)."""
    if not (sp.kappa_c >= 0 and sp.kappa_d >= 0):
        raise WrongCase("case PP needs kappa_c, kappa_d >= 0, got %d, %d"
                        % (sp.kappa_c, sp.kappa_d))
    f = as_hardy(f)
    notes = []
    kc, rc = _kernel_from_c(sp, notes)
    kd, rd = _kernel_from_d(sp, notes)
    kernel = KernelBasis(_independent(kc + kd, notes), rc + rd)
    report = SolvabilityReport(method_applicable=True, solvable=True,
                               notes=notes)
    return SolutionSet(_particular(sp, f), kernel, "PP", report)


def solve_case_nn(sp, f):
    """Solve when both indices are non-positive (unique solution)."""
    if not (sp.kappa_c <= 0 and sp.kappa_d <= 0):
        raise WrongCase("case NN needs kappa_c, kappa_d <= 0, got %d, %d"
                        % (sp.kappa_c, sp.kappa_d))
    f = as_hardy(f)
    notes = []
    conditions = _d_conditions(sp, f) + _c_conditions(sp, f, notes)
    report = SolvabilityReport(conditions, notes=notes)
    if not report.method_applicable:
        report.notes.append(_NOT_APPLICABLE)
        return SolutionSet(None, KernelBasis(), "NN", report)
    report.solvable = True
    return SolutionSet(_particular(sp, f), KernelBasis(), "NN", report)


def solve_case_pn(sp, f):
    """Solve when ``kappa_c > 0 > kappa_d``."""
    _check_case(sp, "PN")
    f = as_hardy(f)
    notes = []
    report = SolvabilityReport(_d_conditions(sp, f), notes=notes)
    kc, rc = _kernel_from_c(sp, report.notes)
    kernel = KernelBasis(_independent(kc, report.notes), rc)
    if not report.method_applicable:
        report.notes.append(_NOT_APPLICABLE)
        return SolutionSet(None, kernel, "PN", report)
    report.solvable = True
    return SolutionSet(_particular(sp, f), kernel, "PN", report)


def solve_case_np(sp, p, f):
    """Solve when ``kappa_c < 0 < kappa_d`` by a shift reduction.

    With ``n = ceil(-kappa_c / 2)`` the shifted pair
    ``(t**-n a, t**n b)`` falls into case PP.  Solutions of the shifted
    equation whose first `n` Taylor coefficients vanish are exactly
    ``t**n phi`` for the solutions `phi` of the original equation, so
    imposing these coefficients as linear constraints either yields all
    solutions or proves that there is none.

    Raises
    ------
    ConstraintSystemSingular
        If the constraint system cannot be solved numerically.

    """
    _check_case(sp, "NP")
    f = as_hardy(f)
    n = (-sp.kappa_c + 1) // 2
    shifted_pair = shift_pair(p, n)
    inner = solve_case_pp(subordinated_pair(shifted_pair), f)
    LOGGER.debug("NP case: shift n = %d, shifted kernel arity %d",
                 n, inner.arity)

    notes = ["reduced by the shift t^%d to case %s" % (n, inner.case_tag)]
    rhs = -inner.particular.taylor_coefficients(n)
    if inner.arity:
        M = np.column_stack([e.taylor_coefficients(n) for e in inner.kernel])
    else:
        M = np.zeros((n, 0), dtype=np.complex128)
    if M.shape[1]:
        r, _, rank, _ = linalg.lstsq(M, rhs, cond=defaults.rank_tolerance)
        combos = linalg.null_space(M, rcond=defaults.rank_tolerance)
    else:
        r, rank = np.zeros(0, dtype=np.complex128), 0
        combos = np.zeros((0, 0), dtype=np.complex128)
    if not np.all(np.isfinite(r)):
        raise ConstraintSystemSingular(
            "constraint system of the shift reduction has no finite "
            "solution", residuals=rhs)
    residuals = M.dot(r) - rhs
    res = float(np.max(np.abs(residuals))) if n else 0.0
    notes.append("constraint system: %d equations, %d unknowns, rank %d, "
                 "residual %.3g" % (n, M.shape[1], rank, res))

    kernel = []
    for col in combos.T:
        e = RationalSymbol(0.0)
        for coef, elem in zip(col, inner.kernel):
            e = e + elem.value * complex(coef)
        kernel.append(HardyElement(project_p(e.shift(-n))))
    kernel = KernelBasis(_independent(kernel, notes), len(kernel))

    if res > defaults.infeasibility_tolerance:
        notes.append("the shifted solutions never vanish to order %d: "
                     "the equation has no solution" % n)
        report = SolvabilityReport(method_applicable=True, solvable=False,
                                   notes=notes)
        phi = None
    else:
        psi = inner.evaluate(r)
        phi = HardyElement(project_p(psi.value.shift(-n)))
        report = SolvabilityReport(method_applicable=True, solvable=True,
                                   notes=notes)
    return SolutionSet(phi, kernel, "NP", report, shifted=inner,
                       constraint_rank=int(rank),
                       constraint_residuals=residuals)


def solve(a, b, f):
    """Solve ``(T(a) + H(b)) phi = f``.

    Parameters
    ----------
    a, b : RationalSymbol
        A matching pair of symbols.
    f : RationalSymbol or HardyElement
        Right-hand side, analytic in the closed unit disk.

    Returns
    -------
    SolutionSet
        The solution family with its report and, when a particular
        solution was produced, the l2 norm of its residual.

    Raises
    ------
    NotMatching, ZeroOrPoleOnCircle, NotHardy

    Examples
    --------
    >>> from thsolve.toplevel import monomial, polynomial
    >>> sol = solve(monomial(-2), monomial(2), polynomial({6: 1, 4: 3}))
    >>> print(sol.particular)
    t^8 + 3t^6
    >>> sol.arity
    2

    """
    p = MatchingPair(a, b)
    f = as_hardy(f)
    sp = subordinated_pair(p)
    case = sp.case
    LOGGER.debug("dispatching to case %s", case)
    if case == "PP":
        out = solve_case_pp(sp, f)
    elif case == "NN":
        out = solve_case_nn(sp, f)
    elif case == "PN":
        out = solve_case_pn(sp, f)
    else:
        out = solve_case_np(sp, p, f)
    if out.particular is not None:
        out.residual = residual_norm(p.a, p.b, out.particular, f)
        if out.residual >= defaults.residual_tolerance:
            LOGGER.warning("residual %.3g of the particular solution "
                           "exceeds the tolerance", out.residual)
            out.report.notes.append("residual %.3g exceeds tolerance %.3g"
                                    % (out.residual,
                                       defaults.residual_tolerance))
    return out
