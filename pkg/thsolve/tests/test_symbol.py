########################################################################
#
#       License: BSD
#       Created: October 16, 2026
#       Author:  The thsolve developers
#
########################################################################

from __future__ import absolute_import

import doctest
import importlib

import numpy as np
from numpy.testing import assert_allclose

from thsolve.tests import common
from thsolve.tests.common import TestCase, unittest, skipUnless
from thsolve import (
    LaurentPolynomial, RationalSymbol, PoleOnCircle, ProblemFileError,
    tilde, circle_conjugate, fourier_coefficients, project_p, project_q,
    flip_j, partial_fractions, monomial, polynomial, symbol)
from thsolve.utils import merge_roots, cluster_roots, is_multiple_root


class laurentTest(TestCase):

    def test00a(self):
        """Building from a sequence and from a dict."""
        p = LaurentPolynomial([0, 0, 3, 0, 1], offset=2)
        q = LaurentPolynomial({6: 1, 4: 3})
        self.assertEqual(p, q)
        self.assertEqual(p.offset, 4)
        self.assertEqual(p.high, 6)
        self.assertEqual(p.terms(), {4: 3, 6: 1})

    def test00b(self):
        """Coefficients below the magnitude floor are pruned."""
        p = LaurentPolynomial([1e-14, 1, 1e-13j])
        self.assertEqual(p.offset, 1)
        self.assertEqual(len(p.coeffs), 1)
        self.assertTrue(LaurentPolynomial([1e-15]).iszero())

    def test01a(self):
        """Arithmetic."""
        p = LaurentPolynomial({-1: 1, 1: 2})
        q = LaurentPolynomial({0: 1, 1: -1})
        self.assertEqual(p + q, LaurentPolynomial({-1: 1, 0: 1, 1: 1}))
        self.assertEqual(p - p, LaurentPolynomial())
        self.assertEqual(p * q, LaurentPolynomial({-1: 1, 0: -1, 1: 2,
                                                   2: -2}))
        self.assertEqual(2 * q, LaurentPolynomial([2, -2]))
        self.assertEqual(q ** 2, LaurentPolynomial([1, -2, 1]))

    def test01b(self):
        """Shift, reflection and conjugation."""
        p = LaurentPolynomial({-1: 1j, 2: 3})
        self.assertEqual(p.shift(2), LaurentPolynomial({1: 1j, 4: 3}))
        self.assertEqual(p.reflect(), LaurentPolynomial({1: 1j, -2: 3}))
        self.assertEqual(p.conj(), LaurentPolynomial({-1: -1j, 2: 3}))

    def test01c(self):
        """Deflation by a root."""
        p = LaurentPolynomial.from_roots([2, -0.5], lead=3, offset=-1)
        q = p.deflate(2)
        self.assertTrue(q.allclose(LaurentPolynomial({-1: 1.5, 0: 3})))
        self.assertRaises(ValueError, LaurentPolynomial([2]).deflate, 1.0)

    def test02a(self):
        """Coefficient ranges outside the support are zero."""
        p = LaurentPolynomial({-2: 1, 1: 5})
        assert_allclose(p.coefficient_range(-3, 2), [0, 1, 0, 0, 5, 0])
        self.assertEqual(p.coefficient(7), 0)

    def test03a(self):
        """Evaluation."""
        p = LaurentPolynomial({-1: 1, 2: 1})
        t = np.exp(1j * np.array([0.1, 2.0]))
        assert_allclose(p(t), 1 / t + t ** 2)

    def test04a(self):
        """JSON form has sorted string exponents and [re, im] pairs."""
        p = LaurentPolynomial({6: 1, -1: 2j})
        self.assertEqual(p.to_json(), {"-1": [0.0, 2.0], "6": [1.0, 0.0]})
        self.assertEqual(LaurentPolynomial.from_json(p.to_json()), p)
        self.assertEqual(LaurentPolynomial.from_json({"2": 3}),
                         LaurentPolynomial({2: 3}))

    def test04b(self):
        """Malformed JSON polynomials are rejected."""
        self.assertRaises(ProblemFileError, LaurentPolynomial.from_json,
                          {"x": [1, 0]})
        self.assertRaises(ProblemFileError, LaurentPolynomial.from_json,
                          {"1": [1, 0, 0]})
        self.assertRaises(ProblemFileError, LaurentPolynomial.from_json, [])

    def test05a(self):
        """String representation."""
        self.assertEqual(str(LaurentPolynomial({8: 1, 6: 3})), "t^8 + 3t^6")
        self.assertEqual(str(LaurentPolynomial({1: 1, 2: -1})), "-t^2 + t")
        self.assertEqual(str(LaurentPolynomial()), "0")


class rationalTest(TestCase):

    def test00a(self):
        """Canonical form: monic denominator, power of t in numerator."""
        g = symbol([0, 0, 1], {2: 2, 3: -4})     # t^2 / (2t^2 - 4t^3)
        self.assertEqual(len(g.poles), 1)
        assert_allclose(g.poles[0][0], 0.5)
        self.assertEqual(g.num.offset, 0)
        self.assertTrue(g.equals(symbol(-0.25, [-0.5, 1])))

    def test00b(self):
        """Common roots cancel."""
        g = symbol([-1, 0, 1], [-1, 1])
        self.assertTrue(g.ispolynomial())
        self.assertTrue(g.num.allclose(LaurentPolynomial([1, 1])))

    def test00c(self):
        """A zero denominator is rejected."""
        self.assertRaises(ZeroDivisionError, symbol, 1, 0)

    def test01a(self):
        """Arithmetic agrees with pointwise arithmetic."""
        f = symbol([1, 2], [3, 1])
        g = symbol([0, 1j], [-0.5, 1])
        t = np.exp(1j * np.linspace(0, 6, 7))
        assert_allclose((f + g)(t), f(t) + g(t))
        assert_allclose((f - g)(t), f(t) - g(t))
        assert_allclose((f * g)(t), f(t) * g(t))
        assert_allclose((f / g)(t), f(t) / g(t))
        assert_allclose((f ** -2)(t), f(t) ** -2)
        assert_allclose((1 - f)(t), 1 - f(t))

    def test01b(self):
        """Sums over shared poles keep a single denominator factor."""
        f = symbol(1, [-2, 1])
        g = f + f
        self.assertEqual(g.poles, f.poles)
        self.assertTrue((f - f).iszero())

    def test01c(self):
        """Inverse of a symbol."""
        g = symbol([1, 2], {1: 3, 2: 1})
        self.assertTrue((g * g.inverse()).equals(1))
        self.assertRaises(ZeroDivisionError, symbol(0).inverse)

    def test02a(self):
        """Equality by cross-multiplication."""
        self.assertEqual(symbol([1, 1], [2, 2]), symbol(0.5))
        self.assertNotEqual(symbol([1, 1]), symbol([1, 2]))

    def test03a(self):
        """JSON with and without denominator."""
        g = symbol([1, 2], [-3, 1])
        self.assertEqual(RationalSymbol.from_json(g.to_json()), g)
        self.assertEqual(RationalSymbol.from_json({"num": {"0": [2, 0]}}),
                         symbol(2))
        self.assertNotIn("den", monomial(2).to_json())

    def test03b(self):
        """Unknown keys in JSON symbols are rejected."""
        self.assertRaises(ProblemFileError, RationalSymbol.from_json,
                          {"num": {"0": 1}, "denominator": {"0": 1}})
        self.assertRaises(ProblemFileError, RationalSymbol.from_json,
                          {"den": {"0": 1}})

    def test04a(self):
        """A fourfold zero, and the fourfold pole of the inverse."""
        g = symbol(LaurentPolynomial.from_roots([0.5] * 4 + [-2]))
        zeros = g.zeros()
        self.assertEqual([m for z, m in zeros], [4, 1])
        assert_allclose([z for z, m in zeros], [0.5, -2], atol=1e-10)
        inv = g.inverse()
        self.assertEqual(sorted(m for p, m in inv.poles), [1, 4])
        self.assertTrue((g * inv).equals(1))

    def test04b(self):
        """Close but distinct zeros are kept apart."""
        g = symbol(LaurentPolynomial.from_roots([0.5, 0.5 + 1e-4, 2]))
        self.assertEqual([m for z, m in g.zeros()], [1, 1, 1])


class involutionTest(TestCase):

    def test00a(self):
        """tilde of monomials and of 2t+1."""
        self.assertEqual(tilde(monomial(2)), monomial(-2))
        self.assertEqual(tilde(symbol([1, 2])), symbol({-1: 2, 0: 1}))
        self.assertEqual(tilde(symbol([1, 2])), symbol([2, 1], [0, 1]))

    def test00b(self):
        """tilde, flip_j and circle_conjugate are involutions."""
        g = symbol([3, 0, 1], [-5, 2])
        self.assertEqual(tilde(tilde(g)), g)
        h = symbol([1, 1], [-3, 1])
        self.assertEqual(flip_j(flip_j(h)), h)
        k = symbol([1j, 2], [0.3 - 0.2j, 1])
        self.assertEqual(circle_conjugate(circle_conjugate(k)), k)

    def test01a(self):
        """circle_conjugate gives conjugate boundary values."""
        self.assertEqual(circle_conjugate(monomial(1)), monomial(-1))
        g = symbol([1, 2], [0, 2])
        cg = circle_conjugate(g)
        self.assertEqual(cg, symbol([2, 1], 2))
        self.assertLess(common.sample_deviation(
            lambda t: np.conj(g(t)), cg), 1e-12)

    def test01b(self):
        """Real symmetric symbols are fixed by circle_conjugate."""
        g = symbol({-1: 1, 0: 3, 1: 1})
        self.assertEqual(circle_conjugate(g), g)

    def test02a(self):
        """flip_j examples."""
        self.assertEqual(flip_j(polynomial({8: 1, 6: 3})),
                         polynomial({-9: 1, -7: 3}))
        self.assertEqual(flip_j(symbol(1)), monomial(-1))


class fourierTest(TestCase):

    def test00a(self):
        """Coefficients of 2t/(2t+1) on [-3, 0]."""
        g = symbol([0, 2], [1, 2])
        assert_allclose(fourier_coefficients(g, -3, 0),
                        [-0.125, 0.25, -0.5, 1], atol=1e-14)

    def test00b(self):
        """Coefficients of t^5 and 1/(t-2)."""
        assert_allclose(fourier_coefficients(monomial(5), 0, 6),
                        [0, 0, 0, 0, 0, 1, 0])
        assert_allclose(fourier_coefficients(symbol(1, [-2, 1]), 0, 2),
                        [-0.5, -0.25, -0.125], atol=1e-14)

    def test00c(self):
        """A pole on the circle is refused."""
        self.assertRaises(PoleOnCircle, fourier_coefficients,
                          symbol(1, [-1, 1]), 0, 3)
        self.assertRaises(PoleOnCircle, project_p, symbol(1, [1j, 1]))

    def test00d(self):
        """Examples in the docstrings run as written."""
        for name in ("symbol", "factorization", "operators", "solver",
                     "toplevel"):
            module = importlib.import_module("thsolve." + name)
            failed, attempted = doctest.testmod(module)
            self.assertEqual(failed, 0, name)

    def test01a(self):
        """Double poles inside and outside the disk."""
        g = symbol(1, LaurentPolynomial.from_roots([0.5, 0.5]))
        assert_allclose(fourier_coefficients(g, -12, 4),
                        common.quadrature_coefficients(g, -12, 4),
                        atol=1e-12)
        h = symbol([1, 1], LaurentPolynomial.from_roots([2, 2, -3]))
        assert_allclose(fourier_coefficients(h, -4, 12),
                        common.quadrature_coefficients(h, -4, 12),
                        atol=1e-12)


class projectionTest(TestCase):

    def test00a(self):
        """P of Laurent polynomials."""
        g = monomial(-2) * polynomial({8: 1, 6: 3})
        self.assertEqual(project_p(g), polynomial({6: 1, 4: 3}))
        self.assertTrue(project_p(polynomial({-7: 1, -5: 3})).iszero())

    def test00b(self):
        """Q of Laurent polynomials and analytic symbols."""
        self.assertEqual(project_q(polynomial({-4: 1, 2: 1})), monomial(-4))
        self.assertTrue(project_q(symbol([1, 1], [-3, 1])).iszero())

    def test00c(self):
        """Q of 2t/(2t+1) is -1/(2t+1)."""
        g = symbol([0, 2], [1, 2])
        q = project_q(g)
        self.assertEqual(q, symbol(-1, [1, 2]))
        self.assertEqual(q, g - 1)

    def test01a(self):
        """Split of 1/((t-2)(t-1/2))."""
        g = symbol(1, LaurentPolynomial.from_roots([2, 0.5]))
        p, q = project_p(g), project_q(g)
        self.assertEqual(p, symbol(2. / 3, [-2, 1]))
        self.assertEqual(q, symbol(-2. / 3, [-0.5, 1]))
        self.assertEqual(p + q, g)
        assert_allclose(fourier_coefficients(p, -6, -1), 0, atol=1e-14)
        assert_allclose(fourier_coefficients(q, 0, 6), 0, atol=1e-14)


class partialFractionsTest(TestCase):

    def test00a(self):
        """Residues of 1/((t-2)(t-1/2))."""
        g = symbol(1, LaurentPolynomial.from_roots([2, 0.5]))
        dec = partial_fractions(g)
        self.assertTrue(dec.laurent_part.iszero())
        self.assertEqual(len(dec.pole_terms), 2)
        (p1, m1, c1), (p2, m2, c2) = dec.pole_terms
        assert_allclose([p1, p2], [0.5, 2])
        self.assertEqual((m1, m2), (1, 1))
        assert_allclose([c1[0], c2[0]], [-2. / 3, 2. / 3])
        self.assertLess(common.sample_deviation(dec, g), 1e-12)

    def test00b(self):
        """Polynomials have no pole terms."""
        dec = partial_fractions(polynomial({-2: 1, 3: 4}))
        self.assertEqual(dec.pole_terms, [])
        self.assertEqual(dec.laurent_part, LaurentPolynomial({-2: 1, 3: 4}))

    def test00c(self):
        """A double pole."""
        g = symbol(1, LaurentPolynomial.from_roots([2, 2]))
        dec = partial_fractions(g)
        self.assertEqual(len(dec.pole_terms), 1)
        p, m, coeffs = dec.pole_terms[0]
        self.assertEqual(m, 2)
        assert_allclose(coeffs, [0, 1], atol=1e-12)

    def test00d(self):
        """A triple pole: 1/(t-3)^3 has coefficients -C(k+2, 2)/3^(k+3)."""
        g = symbol(1, LaurentPolynomial.from_roots([3, 3, 3]))
        self.assertEqual(len(g.poles), 1)
        self.assertEqual(g.poles[0][1], 3)
        assert_allclose(g.poles[0][0], 3, atol=1e-10)
        k = np.arange(12)
        exact = -(k + 2) * (k + 1) / 2.0 / 3.0 ** (k + 3)
        assert_allclose(fourier_coefficients(g, 0, 11), exact, rtol=1e-10)
        assert_allclose(fourier_coefficients(g, -5, -1), 0, atol=1e-14)

    def test01a(self):
        """Improper symbols with negative powers of t."""
        g = symbol({-2: 1, 4: 1}, [-0.5j, 1])
        dec = partial_fractions(g)
        self.assertLess(common.sample_deviation(dec, g), 1e-10)
        self.assertTrue(dec.laurent_part.offset < 0)


class rootsTest(TestCase):

    def test00a(self):
        """Eigenvalue spread around multiple roots is merged."""
        coeffs = LaurentPolynomial.from_roots([2, 2, -0.4, -0.4, -0.4]).coeffs
        roots = np.polynomial.polynomial.polyroots(coeffs)
        merged = merge_roots(roots, coeffs=coeffs)
        self.assertEqual([m for z, m in merged], [3, 2])
        assert_allclose([z for z, m in merged], [-0.4, 2], atol=1e-8)

    def test00b(self):
        """Without coefficients only roots closer than the tolerance merge."""
        self.assertEqual([len(cl) for cl in cluster_roots([1, 1 + 1e-9, 2])],
                         [2, 1])
        self.assertEqual(len(cluster_roots([1, 1 + 1e-4, 2])), 3)

    def test00c(self):
        """Multiplicity from vanishing Taylor coefficients."""
        coeffs = LaurentPolynomial.from_roots([1.5, 1.5]).coeffs
        self.assertTrue(is_multiple_root(coeffs, 1.5, 2))
        self.assertFalse(is_multiple_root(coeffs, 1.5, 3))
        self.assertFalse(is_multiple_root(coeffs, 1.4, 2))


class randomTest():

    def test00a(self):
        """Fourier coefficients agree with quadrature."""
        rng = np.random.RandomState(1)
        for i in range(self.count):
            g = common.random_symbol(rng)
            assert_allclose(fourier_coefficients(g, -10, 10),
                            common.quadrature_coefficients(g, -10, 10),
                            atol=1e-9)

    def test01a(self):
        """P + Q = I, P and Q are complementary projections."""
        rng = np.random.RandomState(2)
        for i in range(self.count):
            g = common.random_symbol(rng)
            p, q = project_p(g), project_q(g)
            self.assertTrue((p + q).equals(g, 1e-8))
            self.assertTrue(project_p(p).equals(p, 1e-8))
            self.assertTrue(project_q(q).equals(q, 1e-8))
            self.assertLess(project_p(q).num.magnitude(), 1e-8)

    def test02a(self):
        """Partial fractions re-sum to the symbol."""
        rng = np.random.RandomState(3)
        for i in range(self.count):
            g = common.random_symbol(rng, nzeros=4, npoles=4)
            dec = partial_fractions(g)
            self.assertLess(common.sample_deviation(dec, g),
                            1e-8 * common.sample_max(g))


class randomLightTest(randomTest, TestCase):
    count = 10


@skipUnless(common.heavy, "not --heavy")
class randomHeavyTest(randomTest, TestCase):
    count = 200


class repeatedRootsTest():

    def test00a(self):
        """Multiple zeros and poles keep their multiplicities."""
        rng = np.random.RandomState(4)
        for i in range(self.count):
            g, mzeros, mpoles = common.random_repeated_symbol(rng)
            self.assertEqual(sorted(m for p, m in g.poles), mpoles)
            self.assertEqual(sorted(m for z, m in g.zeros()), mzeros)
            self.assertEqual(sorted(m for p, m in g.inverse().poles), mzeros)

    def test00b(self):
        """Fourier coefficients with multiple poles agree with quadrature."""
        rng = np.random.RandomState(5)
        for i in range(self.count):
            g = common.random_repeated_symbol(rng)[0]
            quad = common.quadrature_coefficients(g, -10, 10)
            assert_allclose(fourier_coefficients(g, -10, 10), quad,
                            atol=1e-9 * max(1.0, np.max(np.abs(quad))))


class repeatedRootsLightTest(repeatedRootsTest, TestCase):
    count = 10


@skipUnless(common.heavy, "not --heavy")
class repeatedRootsHeavyTest(repeatedRootsTest, TestCase):
    count = 200


if __name__ == '__main__':
    unittest.main(verbosity=2)
