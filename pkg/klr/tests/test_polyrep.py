from django.test import SimpleTestCase

from klr.algebra import KLRAlgebra
from klr.choices import DimensionMethod
from klr.polyrep import (
    PolynomialRepresentation,
    algebra_dim,
    artin_exponents,
    elements_equal,
    graded_component,
    graded_dim,
    truncated_dim,
)
from klr.qseries import ONE, Q, RationalFunction, center_dim
from klr.quiver import Weight
from klr.suites import random_word

from .values import A1, A2, JORDAN, JORDAN_A1, TWO_LOOP, fake


class TestPolynomialAction(SimpleTestCase):
    def setUp(self):
        fake.seed_instance(11)

    def test_random_words_agree_with_normal_forms(self):
        """A word and its normal form act identically on random polynomials."""
        for quiver in (A1, A2, JORDAN, TWO_LOOP, JORDAN_A1):
            algebra = KLRAlgebra(quiver)
            for _ in range(10):
                weight = Weight.from_sequence(
                    fake.random_element(quiver.vertices) for _ in range(fake.random_int(1, 3))
                )
                word = random_word(weight, fake, 5)
                representation = PolynomialRepresentation(algebra, weight)
                for _ in range(3):
                    vector = representation.random_vector(fake)
                    with self.subTest(quiver=quiver.vertices, word=word):
                        self.assertTrue(representation.word_agrees(word, vector))

    def test_elements_equal(self):
        """tau_1 x_1 and x_2 tau_1 + 1 are the same element."""
        algebra = KLRAlgebra(A1)
        two = Weight({"i": 2})
        first = algebra.evaluate_diagram("x(1) t(1)", two)
        second = algebra.evaluate_diagram("t(1) x(2)", two) + algebra.identity(two)
        self.assertTrue(elements_equal(first, second))
        self.assertFalse(elements_equal(first, algebra.identity(two)))

    def test_elements_equal_needs_one_weight(self):
        algebra = KLRAlgebra(A1)
        with self.assertRaises(ValueError):
            elements_equal(algebra.identity(Weight({"i": 1})), algebra.identity(Weight({"i": 2})))


class TestGradedComponents(SimpleTestCase):
    def test_nil_hecke_components(self):
        """1 R(2i) 1 has one word in degree -2 and three in degree 0."""
        algebra = KLRAlgebra(A1)
        weight = Weight({"i": 2})
        sequence = ("i", "i")
        self.assertEqual(len(graded_component(algebra, weight, sequence, sequence, -2)), 1)
        self.assertEqual(len(graded_component(algebra, weight, sequence, sequence, 0)), 3)
        self.assertEqual(len(graded_component(algebra, weight, sequence, sequence, 1)), 0)

    def test_algebra_dim(self):
        """Dim R(i) = 1/(1-q^2) and Dim R(2i) = (q^-2 + 1)/(1-q^2)^2 in the nil-Hecke case."""
        algebra = KLRAlgebra(A1)
        self.assertEqual(algebra_dim(algebra, Weight({"i": 1})), RationalFunction(ONE, ONE - Q**2))
        self.assertEqual(
            algebra_dim(algebra, Weight({"i": 2})),
            RationalFunction(Q**-2 + ONE, (ONE - Q**2) * (ONE - Q**2)),
        )

    def test_artin_exponents(self):
        """There are n! Artin monomials for n strands of one colour."""
        self.assertEqual(len(artin_exponents(("i",) * 3)), 6)
        self.assertEqual(len(artin_exponents(("i", "j", "i"))), 2)


class TestTruncatedDimensions(SimpleTestCase):
    def test_methods_agree(self):
        """The direct and coinvariant computations give the same series."""
        cases = [
            (A1, ("i", "i")),
            (A2, ("i", "j")),
            (JORDAN, ("i", "i")),
            (TWO_LOOP, ("i", "i")),
        ]
        for quiver, sequence in cases:
            algebra = KLRAlgebra(quiver)
            weight = Weight.from_sequence(sequence)
            one = algebra.identity(weight)
            with self.subTest(quiver=quiver.vertices):
                direct = truncated_dim(one, one, 8, DimensionMethod.DIRECT)
                coinvariant = truncated_dim(one, one, 8, DimensionMethod.COINVARIANT)
                self.assertTrue(direct.agrees_with(coinvariant))
                self.assertTrue(coinvariant.agrees_with(algebra_dim(algebra, weight).expand(8)))

    def test_divided_power_corner(self):
        """e_(i,2) R(2i) e_(i,2) has the graded dimension of the center."""
        algebra = KLRAlgebra(A1)
        e = algebra.divided_power_idempotent("i", 2)
        self.assertEqual(graded_dim(e, e), center_dim(2))

    def test_jordan_symmetrizer_corner(self):
        algebra = KLRAlgebra(JORDAN)
        e = algebra.symmetrizer("i", 2)
        self.assertTrue(truncated_dim(e, e, 10).agrees_with(center_dim(2).expand(10)))

    def test_non_idempotent_rejected(self):
        """Truncations need idempotents of degree 0."""
        algebra = KLRAlgebra(A1)
        two = Weight({"i": 2})
        with self.assertRaises(ValueError):
            truncated_dim(algebra.dot(1, two), algebra.identity(two), 4)

    def test_unknown_method(self):
        algebra = KLRAlgebra(A1)
        one = algebra.identity(Weight({"i": 1}))
        with self.assertRaises(ValueError):
            truncated_dim(one, one, 4, "guess")
