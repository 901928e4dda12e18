from django.test import SimpleTestCase

from klr.algebra import KLRAlgebra
from klr.cyclotomic import (
    CycloAlgebra,
    block_idempotent,
    cyclo_dim_check,
    cyclo_mackey_check,
    cyclo_normal_form,
    cyclo_truncated_dim,
    double_coset_representatives,
    ef_coefficient_check,
    highest_weight_dim_check,
    ideal_quotient_dim,
    mackey_decomp_check,
    symmetrizer_corner_check,
)
from klr.polyrep import graded_component
from klr.qseries import ONE, Q, LaurentPolynomial, RationalFunction, alpha, cyclotomic_dim
from klr.quiver import Weight

from .values import A1, A2


class TestCycloAlgebra(SimpleTestCase):
    def test_negative_level(self):
        with self.assertRaises(ValueError):
            CycloAlgebra(-1)

    def test_only_jordan_quiver(self):
        """Quotients are built on the one-loop quiver only."""
        with self.assertRaises(ValueError):
            CycloAlgebra(1, KLRAlgebra(A1))

    def test_basis_size(self):
        """The basis of R^Lambda(n) has n! a^n words."""
        for a, n, size in ((1, 3, 6), (2, 2, 8), (3, 1, 3)):
            with self.subTest(a=a, n=n):
                self.assertEqual(len(CycloAlgebra(a).basis(n)), size)
        self.assertEqual(CycloAlgebra(0).basis(2), [])

    def test_dots_vanish_at_the_level(self):
        """x_1^a = 0 and x_2^a = tau_1 x_1^a tau_1 = 0."""
        cyclo = CycloAlgebra(2)
        self.assertTrue(cyclo.evaluate_diagram("x(1) x(1)", 2).is_zero())
        self.assertTrue(cyclo.evaluate_diagram("x(2) x(2)", 2).is_zero())
        self.assertFalse(cyclo.evaluate_diagram("x(1) x(2)", 2).is_zero())

    def test_normal_form_of_words(self):
        """tau_1 x_1 tau_1 = x_2 survives at level 2 and vanishes at level 1."""
        for level, expected in ((2, "x(2)"), (1, None)):
            cyclo = CycloAlgebra(level)
            word, _ = cyclo.algebra.parse_word("t(1) x(1) t(1)")
            element = cyclo_normal_form(word, cyclo, 2)
            with self.subTest(level=level):
                if expected is None:
                    self.assertTrue(element.is_zero())
                else:
                    self.assertEqual(element, cyclo.evaluate_diagram(expected, 2))

    def test_multiply_reduces(self):
        cyclo = CycloAlgebra(1)
        x = cyclo.algebra.dot(1, cyclo.weight(1))
        self.assertTrue(cyclo.multiply(cyclo.identity(1), x).is_zero())

    def test_graded_dimensions(self):
        """Dim R^Lambda(n) = n! ((1-q^2a)/(1-q^2))^n."""
        for a, n in ((1, 2), (1, 3), (2, 1), (2, 2)):
            cyclo = CycloAlgebra(a)
            one = cyclo.identity(n)
            with self.subTest(a=a, n=n):
                self.assertEqual(cyclo_truncated_dim(one, one, cyclo), cyclotomic_dim(a, n))
                self.assertEqual(cyclo.spanned_dim(n), cyclotomic_dim(a, n))

    def test_empty_weight(self):
        self.assertEqual(CycloAlgebra(0).spanned_dim(0), ONE)

    def test_corner_of_symmetrizer(self):
        """e_2 R^Lambda(2) e_2 at level 1 is one-dimensional."""
        cyclo = CycloAlgebra(1)
        e = block_idempotent(cyclo.algebra, "i", 0, 2)
        self.assertEqual(cyclo.graded_dim(e, e), ONE)


class TestIdealQuotients(SimpleTestCase):
    def test_jordan_quotients(self):
        """The ideal of x_1^a, computed in R(n), leaves n! ((1-q^2a)/(1-q^2))^n."""
        for a, n in ((1, 2), (1, 3), (2, 1), (2, 2)):
            with self.subTest(a=a, n=n):
                self.assertEqual(CycloAlgebra(a).quotient_dim(n, 8), cyclotomic_dim(a, n))

    def test_level_zero(self):
        self.assertTrue(CycloAlgebra(0).quotient_dim(2, 8).is_zero())
        self.assertEqual(CycloAlgebra(0).quotient_dim(0, 8), ONE)

    def test_loopless_vertex(self):
        """tau x_1 - x_2 tau = 1 puts 1 in the ideal of x_1, although 1 and tau carry no dots."""
        algebra = KLRAlgebra(A1)
        self.assertTrue(ideal_quotient_dim(algebra, 1, 2, 4).is_zero())
        self.assertEqual(ideal_quotient_dim(algebra, 1, 1, 4), ONE)

        weight, sequence = Weight({"i": 2}), ("i", "i")
        dotless = [
            key
            for degree in (-2, 0)
            for key in graded_component(algebra, weight, sequence, sequence, degree)
            if not any(key[0])
        ]
        self.assertEqual(len(dotless), 2)

    def test_needs_one_vertex(self):
        with self.assertRaises(ValueError):
            ideal_quotient_dim(KLRAlgebra(A2), 1, 2, 4)


class TestDimensionChecks(SimpleTestCase):
    def test_cyclotomic_dimensions(self):
        for a, n in ((1, 3), (2, 2)):
            with self.subTest(a=a, n=n):
                self.assertTrue(cyclo_dim_check(a, n, 8))

    def test_highest_weight(self):
        self.assertTrue(highest_weight_dim_check(1, 3, 6))
        self.assertTrue(highest_weight_dim_check(0, 2, 6))

    def test_symmetrizer_corner(self):
        self.assertTrue(symmetrizer_corner_check(2, 8))


class TestMackeyDecomposition(SimpleTestCase):
    def test_double_cosets(self):
        self.assertEqual(len(double_coset_representatives(2, 3)), 3)

    def test_jordan_algebra(self):
        for n, ell, t in ((0, 1, 1), (1, 1, 1), (2, 1, 1), (1, 2, 2)):
            with self.subTest(n=n, ell=ell, t=t):
                self.assertTrue(mackey_decomp_check(n, ell, t, 8))

    def test_vanishing_functor(self):
        with self.assertRaises(ValueError):
            mackey_decomp_check(0, 2, 1, 4)

    def test_cyclotomic_quotient(self):
        for n in (1, 2):
            with self.subTest(n=n):
                self.assertTrue(cyclo_mackey_check(2, n, 1, 1))


class TestCommutationCoefficients(SimpleTestCase):
    def test_coefficients(self):
        for a in (1, 2, 3):
            with self.subTest(a=a):
                self.assertTrue(ef_coefficient_check(3, 3, a))

    def test_first_coefficient(self):
        """alpha_1 = (q^-a - q^a)/(1 - q^2) with K_i = q^a."""
        for a in (1, 2, 3):
            with self.subTest(a=a):
                self.assertEqual(alpha(1, a), RationalFunction(Q**-a - Q**a, ONE - Q**2))

    def test_level_one_coefficients(self):
        """beta_p = 1 at level 1, so alpha_p = q^-p."""
        for p in range(1, 5):
            with self.subTest(p=p):
                self.assertEqual(alpha(p, 1), RationalFunction(LaurentPolynomial.monomial(-p)))

    def test_rejects_level_zero(self):
        with self.assertRaises(ValueError):
            ef_coefficient_check(1, 1, 0)

    def test_scalar_level_one(self):
        """At level 1 the span of 1 in R^Lambda(1) is a single line."""
        self.assertEqual(CycloAlgebra(1).spanned_dim(1), LaurentPolynomial.constant(1))
