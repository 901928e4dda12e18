from fractions import Fraction

from django.test import SimpleTestCase

from klr import linalg


class TestMatrices(SimpleTestCase):
    def setUp(self):
        self.swap = linalg.matrix_from_columns([[0, 1], [1, 0]], 2)

    def test_equal_matrices(self):
        self.assertTrue(linalg.matrices_equal(linalg.identity(2), linalg.identity(2)))
        self.assertTrue(
            linalg.matrices_equal(self.swap * self.swap, linalg.identity(2)),
        )

    def test_different_entries(self):
        self.assertFalse(linalg.matrices_equal(self.swap, linalg.identity(2)))
        self.assertFalse(
            linalg.matrices_equal(linalg.scaled(linalg.identity(2), 2), linalg.identity(2))
        )

    def test_different_shapes(self):
        self.assertFalse(linalg.matrices_equal(linalg.identity(2), linalg.identity(3)))
        self.assertFalse(linalg.matrices_equal(linalg.zeros(2, 3), linalg.zeros(3, 2)))

    def test_zero_matrices(self):
        self.assertTrue(linalg.matrices_equal(linalg.zeros(2, 2), self.swap - self.swap))


class TestVectors(SimpleTestCase):
    def test_rank(self):
        """Sparse vectors keyed by words; the third is the sum of the first two."""
        vectors = [{"a": Fraction(1)}, {"b": Fraction(2)}, {"a": Fraction(1), "b": Fraction(2)}]
        self.assertEqual(linalg.rank(vectors), 2)
        self.assertEqual(linalg.rank([{}, {"a": Fraction(0)}]), 0)

    def test_express(self):
        basis = [{"a": Fraction(1)}, {"b": Fraction(1)}]
        self.assertEqual(
            linalg.express(basis, [{"a": Fraction(3), "b": Fraction(-1, 2)}]),
            [[Fraction(3), Fraction(-1, 2)]],
        )

    def test_express_outside_the_span(self):
        with self.assertRaises(ValueError):
            linalg.express([{"a": Fraction(1)}], [{"b": Fraction(1)}])
