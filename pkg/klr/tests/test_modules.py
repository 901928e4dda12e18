from django.test import SimpleTestCase

from klr import linalg
from klr.algebra import KLRAlgebra
from klr.modules import (
    CharacterVector,
    character,
    delta_restrict,
    epsilon,
    nil_hecke_module,
    one_dimensional_module,
    specht_klr_module,
    trivial_module,
    underlined_sequences,
)
from klr.qseries import ONE, LaurentPolynomial, qfactorial
from klr.quiver import Weight
from klr.suites import expected_jordan_characters

from .values import A1, A2, JORDAN, TWO_LOOP


class TestSpechtModules(SimpleTestCase):
    def setUp(self):
        self.algebra = KLRAlgebra(JORDAN)

    def test_characters_for_three_strands(self):
        """Ch S^lambda for the partitions of 3 on the Jordan quiver."""
        for shape, expected in expected_jordan_characters().items():
            with self.subTest(shape=shape):
                module = specht_klr_module(self.algebra, "i", shape)
                self.assertEqual(character(module), expected)

    def test_dots_act_by_zero(self):
        module = specht_klr_module(self.algebra, "i", (2, 1))
        for k in (1, 2, 3):
            self.assertTrue(linalg.matrices_equal(module.dot(k), module.operators.zero()))

    def test_needs_one_loop(self):
        """Specht modules only exist on I0 vertices."""
        with self.assertRaises(ValueError):
            specht_klr_module(KLRAlgebra(A1), "i", (2,))


class TestNilHeckeModules(SimpleTestCase):
    def setUp(self):
        self.algebra = KLRAlgebra(A1)

    def test_graded_dimension_is_qfactorial(self):
        """V(i^n) has graded dimension [n]!."""
        for n in range(1, 4):
            with self.subTest(n=n):
                module = nil_hecke_module(self.algebra, "i", n)
                self.assertEqual(
                    LaurentPolynomial(module.operators.graded_dimension()), qfactorial(n)
                )

    def test_character(self):
        """The only sequence of 2i carries the whole module."""
        module = nil_hecke_module(self.algebra, "i", 2)
        self.assertEqual(character(module)[(("i", 1), ("i", 1))], qfactorial(2))

    def test_epsilon_and_restriction(self):
        module = nil_hecke_module(self.algebra, "i", 3)
        self.assertEqual(epsilon(module, "i"), 3)
        restricted = delta_restrict(module, "i", 1)
        self.assertEqual(restricted.dimension, module.dimension)

    def test_restriction_out_of_range(self):
        module = nil_hecke_module(self.algebra, "i", 2)
        with self.assertRaises(ValueError):
            delta_restrict(module, "i", 3)

    def test_shift_and_direct_sum(self):
        """M{1} + M has the graded dimension (1 + q) [2]!."""
        module = nil_hecke_module(self.algebra, "i", 2)
        total = module.shift(1).direct_sum(module)
        expected = (ONE + LaurentPolynomial.monomial(1)) * qfactorial(2)
        self.assertEqual(LaurentPolynomial(total.operators.graded_dimension()), expected)

    def test_needs_loopless_vertex(self):
        with self.assertRaises(ValueError):
            nil_hecke_module(KLRAlgebra(JORDAN), "i", 2)


class TestSmallModules(SimpleTestCase):
    def test_trivial_module(self):
        """Two loops allow the one-dimensional module with all generators zero."""
        module = trivial_module(KLRAlgebra(TWO_LOOP), "i", 3)
        self.assertEqual(module.dimension, 1)
        self.assertEqual(epsilon(module, "i"), 3)

    def test_one_dimensional_module(self):
        algebra = KLRAlgebra(A2)
        module = one_dimensional_module(algebra, ("i", "j"))
        ch = character(module)
        self.assertEqual(ch[(("i", 1), ("j", 1))], ONE)
        self.assertTrue(ch[(("j", 1), ("i", 1))].is_zero())
        self.assertEqual(epsilon(module, "j"), 1)
        self.assertEqual(epsilon(module, "i"), 0)

    def test_relations_are_checked(self):
        """Zero dots and crossings break the dot slide on two loopless strands."""
        with self.assertRaises(ValueError):
            one_dimensional_module(KLRAlgebra(A1), ("i", "i"))

    def test_element_of_wrong_weight(self):
        algebra = KLRAlgebra(A2)
        module = one_dimensional_module(algebra, ("i", "j"))
        with self.assertRaises(ValueError):
            module.element_matrix(algebra.identity(Weight({"i": 1})))


class TestCharacterVectors(SimpleTestCase):
    def test_underlined_sequences(self):
        """Blocks of size two only appear for I0 vertices."""
        self.assertEqual(
            underlined_sequences(KLRAlgebra(JORDAN), Weight({"i": 2})),
            [(("i", 1), ("i", 1)), (("i", 2),)],
        )
        self.assertEqual(
            underlined_sequences(KLRAlgebra(A1), Weight({"i": 2})), [(("i", 1), ("i", 1))]
        )

    def test_zero_values_dropped(self):
        vector = CharacterVector({(("i", 1),): LaurentPolynomial()})
        self.assertEqual(vector, CharacterVector())
        self.assertEqual(str(vector), "0")

    def test_shift_and_sum(self):
        key = (("i", 1),)
        vector = CharacterVector({key: ONE})
        self.assertEqual((vector + vector.shift(2))[key], ONE + LaurentPolynomial.monomial(2))
