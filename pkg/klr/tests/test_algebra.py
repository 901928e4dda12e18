from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from klr.algebra import KLRAlgebra, ProjectiveLabel, left_projective, right_projective
from klr.quiver import Weight
from klr.suites import random_word

from .values import A1, A2, JORDAN, TWO_LOOP, fake


class TestLocalRelations(SimpleTestCase):
    def setUp(self):
        self.nil_hecke = KLRAlgebra(A1)
        self.two = Weight({"i": 2})

    def test_nil_hecke_square(self):
        """tau_1^2 = 0 on two loopless strands of the same colour."""
        self.assertTrue(self.nil_hecke.evaluate_diagram("t(1) t(1)", self.two).is_zero())

    def test_dot_slide(self):
        """tau_1 x_1 = x_2 tau_1 + 1 on equal loopless colours."""
        left = self.nil_hecke.evaluate_diagram("e(i,i) x(1) t(1)")
        right = self.nil_hecke.evaluate_diagram("t(1) x(2)", self.two) + self.nil_hecke.idempotent(
            ("i", "i")
        )
        self.assertEqual(left, right)

    def test_nil_hecke_braid(self):
        """tau_1 tau_2 tau_1 = tau_2 tau_1 tau_2 on three strands."""
        three = Weight({"i": 3})
        self.assertEqual(
            self.nil_hecke.evaluate_diagram("t(1) t(2) t(1)", three),
            self.nil_hecke.evaluate_diagram("t(2) t(1) t(2)", three),
        )

    def test_jordan_square(self):
        """With one loop tau_1^2 = 1 and crossings have degree 0."""
        algebra = KLRAlgebra(JORDAN)
        square = algebra.evaluate_diagram("t(1) t(1)", self.two)
        self.assertEqual(square, algebra.identity(self.two))
        self.assertEqual(algebra.crossing(1, self.two).degree(), 0)

    def test_two_loop_square(self):
        """With two loops tau_1^2 = -(x_1 - x_2)^2."""
        algebra = KLRAlgebra(TWO_LOOP)
        x11 = algebra.evaluate_diagram("x(1) x(1)", self.two)
        x12 = algebra.evaluate_diagram("x(1) x(2)", self.two)
        x22 = algebra.evaluate_diagram("x(2) x(2)", self.two)
        expected = 2 * x12 - x11 - x22
        self.assertEqual(algebra.evaluate_diagram("t(1) t(1)", self.two), expected)
        self.assertEqual(algebra.crossing(1, self.two).degree(), 2)

    def test_distinct_colours_square(self):
        """tau_1^2 1_(ij) = Q_ij(x_1, x_2) has degree 2 for one arrow."""
        algebra = KLRAlgebra(A2)
        weight = Weight({"i": 1, "j": 1})
        difference = algebra.evaluate_diagram("e(i,j) x(1)") - algebra.evaluate_diagram(
            "e(i,j) x(2)"
        )
        square = algebra.evaluate_diagram("e(i,j) t(1) t(1)")
        self.assertIn(square, [difference, -difference])
        self.assertEqual(algebra.crossing(1, weight).degrees(), {1})

    def test_braid_correction(self):
        """On 1_(iji) the braid relation picks up a multiple of the idempotent."""
        algebra = KLRAlgebra(A2)
        one = algebra.idempotent(("i", "j", "i"))
        difference = algebra.evaluate_diagram("e(i,j,i) t(1) t(2) t(1)") - algebra.evaluate_diagram(
            "e(i,j,i) t(2) t(1) t(2)"
        )
        self.assertIn(difference, [one, -one])

    def test_degrees(self):
        """Dots have degree 2 and loopless equal crossings degree -2."""
        self.assertEqual(self.nil_hecke.dot(1, self.two).degree(), 2)
        self.assertEqual(self.nil_hecke.crossing(1, self.two).degree(), -2)


class TestElementAlgebra(SimpleTestCase):
    def setUp(self):
        fake.seed_instance(7)

    def _random_element(self, algebra: KLRAlgebra, weight: Weight):
        return algebra.normal_form(random_word(weight, fake, 4), weight)

    def test_associativity(self):
        """(ab)c = a(bc) on random words."""
        for quiver in (A1, A2, JORDAN, TWO_LOOP):
            algebra = KLRAlgebra(quiver)
            weight = Weight.from_sequence(quiver.vertices[:1] * 2 + quiver.vertices[-1:])
            for _ in range(5):
                a, b, c = (self._random_element(algebra, weight) for _ in range(3))
                with self.subTest(quiver=quiver.vertices, a=str(a)):
                    self.assertEqual((a * b) * c, a * (b * c))

    def test_psi_is_an_anti_involution(self):
        """psi(psi(a)) = a and psi(ab) = psi(b) psi(a)."""
        for quiver in (A1, A2, JORDAN):
            algebra = KLRAlgebra(quiver)
            weight = Weight.from_sequence(quiver.vertices * 2)
            for _ in range(5):
                a, b = self._random_element(algebra, weight), self._random_element(algebra, weight)
                with self.subTest(quiver=quiver.vertices, a=str(a), b=str(b)):
                    self.assertEqual(a.psi().psi(), a)
                    self.assertEqual((a * b).psi(), b.psi() * a.psi())

    def test_identity_is_neutral(self):
        algebra = KLRAlgebra(A2)
        weight = Weight({"i": 2, "j": 1})
        a = self._random_element(algebra, weight)
        self.assertEqual(algebra.identity(weight) * a, a)
        self.assertEqual(a * algebra.identity(weight), a)

    def test_tensor_of_idempotents(self):
        algebra = KLRAlgebra(A2)
        self.assertEqual(
            algebra.idempotent(("i",)).tensor(algebra.idempotent(("j",))),
            algebra.idempotent(("i", "j")),
        )


class TestIdempotents(SimpleTestCase):
    def test_divided_powers(self):
        """e_(i,m) is an idempotent of degree 0."""
        algebra = KLRAlgebra(A1)
        for m in range(1, 5):
            with self.subTest(m=m):
                e = algebra.divided_power_idempotent("i", m)
                self.assertEqual(e * e, e)
                self.assertEqual(e.degree(), 0)

    def test_symmetrizer(self):
        """The Jordan symmetrizer is an idempotent."""
        algebra = KLRAlgebra(JORDAN)
        for n in range(1, 4):
            with self.subTest(n=n):
                e = algebra.symmetrizer("i", n)
                self.assertEqual(e * e, e)

    def test_wrong_vertex_class(self):
        """Divided powers need I+ and symmetrizers need I0."""
        with self.assertRaises(ValueError):
            KLRAlgebra(JORDAN).divided_power_idempotent("i", 2)
        with self.assertRaises(ValueError):
            KLRAlgebra(A1).symmetrizer("i", 2)

    def test_projective_labels(self):
        """<i^(3)> = 3 and the projectives carry the shift -<i>."""
        algebra = KLRAlgebra(A1)
        label = ProjectiveLabel((("i", 3),))
        self.assertEqual(label.weight, Weight({"i": 3}))
        self.assertEqual(label.shift(algebra), 3)
        self.assertEqual(right_projective(algebra, label).shift, -3)
        self.assertEqual(
            left_projective(algebra, label).idempotent, label.idempotent(algebra).psi()
        )

    def test_sigma_presentation(self):
        for quiver, n in ((JORDAN, 2), (JORDAN, 3), (TWO_LOOP, 2)):
            with self.subTest(loops=quiver.loops, n=n):
                self.assertTrue(KLRAlgebra(quiver).sigma_presentation_check(Weight({"i": n})))


class TestWordSyntax(SimpleTestCase):
    def setUp(self):
        self.algebra = KLRAlgebra(A2)

    def test_unknown_token(self):
        """Unknown tokens are reported under `word` with their position."""
        with self.assertRaises(ValidationError) as context:
            self.algebra.parse_word("e(i,j) y(1)")
        self.assertIn("word", context.exception.message_dict)
        self.assertIn("position 2", context.exception.message_dict["word"][0])

    def test_unknown_vertex(self):
        with self.assertRaises(ValidationError):
            self.algebra.parse_word("e(i,k)")

    def test_missing_index(self):
        with self.assertRaises(ValidationError):
            self.algebra.parse_word("x(a)")

    def test_word_order(self):
        """Tokens are read bottom to top and returned in product order."""
        word, positions = self.algebra.parse_word("e(i,j) t(1)")
        self.assertEqual([str(kind) for kind, _ in word], ["t", "e"])
        self.assertEqual(positions, [2, 1])

    def test_incomposable_word(self):
        """Two different idempotents in a row do not compose."""
        with self.assertRaises(ValueError):
            self.algebra.evaluate_diagram("e(i,j) e(j,i)")

    def test_crossing_moves_idempotent(self):
        """t(1) carries e(i,j) at the bottom to e(j,i) on top."""
        element = self.algebra.evaluate_diagram("e(i,j) t(1) e(j,i)")
        self.assertFalse(element.is_zero())
        self.assertEqual(element.targets(), {("j", "i")})

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            self.algebra.evaluate_diagram("e(i,j) x(3)")
