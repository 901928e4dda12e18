from unittest.mock import patch

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from klr.algebra import KLRAlgebra, ProjectiveLabel
from klr.k0 import (
    K0Vector,
    UMinusMonomial,
    bar,
    block_crossing,
    center_dim_check,
    centralizer_dim,
    character_rank,
    commute_intertwiner_check,
    frobenius_consistency,
    gamma,
    gamma_combination,
    jordan_characters,
    kl_form,
    kl_form_exact,
    monomials,
    pairing_agreement_check,
    parse_monomial,
    projective_specht_unitriangular,
    rho_pairing,
    serre_check,
    serre_sides,
)
from klr.qseries import ONE, Q, LaurentPolynomial, RationalFunction, center_dim
from klr.quiver import Weight

from .values import A1, A1_A1, A2, JORDAN, JORDAN_A1, JORDAN_PLUS_A1, TWO_LOOP


class TestMonomials(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(parse_monomial("f(i) f(j,2)").atoms, (("i", 1), ("j", 2)))
        self.assertEqual(parse_monomial("1"), UMinusMonomial())
        self.assertEqual(str(parse_monomial("f(i,2) f(j)")), "f(i,2) f(j)")

    def test_unknown_generator(self):
        """Bad tokens are reported under `monomial`."""
        with self.assertRaises(ValidationError) as context:
            parse_monomial("f(i) g(j)")
        self.assertIn("monomial", context.exception.message_dict)

    def test_two_loops_have_no_divided_powers(self):
        with self.assertRaises(ValidationError):
            parse_monomial("f(i,2)").validate(TWO_LOOP.cartan())

    def test_weight(self):
        self.assertEqual(parse_monomial("f(i) f(j) f(i,2)").weight, Weight({"i": 3, "j": 1}))

    def test_enumeration(self):
        """Monomials up to height 2: f(i), f(i) f(i) and f(i,2), without f(i,2) for I-."""
        self.assertEqual(len(monomials(A1.cartan(), 2)), 3)
        self.assertEqual(len(monomials(TWO_LOOP.cartan(), 2)), 2)


class TestBilinearForm(SimpleTestCase):
    def test_generator_norm(self):
        """{f_i, f_i} = 1/(1-q^2) on I+ and I-."""
        for quiver in (A1, TWO_LOOP):
            with self.subTest(loops=quiver.loops):
                self.assertEqual(
                    rho_pairing(quiver.cartan(), parse_monomial("f(i)"), parse_monomial("f(i)")),
                    RationalFunction(ONE, ONE - Q**2),
                )

    def test_square_of_generator(self):
        """{f_i^2, f_i^2} = (1 + q^-2)/(1-q^2)^2."""
        x = parse_monomial("f(i) f(i)")
        self.assertEqual(
            rho_pairing(A1.cartan(), x, x),
            RationalFunction(ONE + Q**-2, (ONE - Q**2) * (ONE - Q**2)),
        )

    def test_divided_power_norm(self):
        """{f_i^(2), f_i^(2)} = 1/((1-q^2)(1-q^4))."""
        x = parse_monomial("f(i,2)")
        self.assertEqual(rho_pairing(A1.cartan(), x, x), center_dim(2))
        self.assertEqual(rho_pairing(JORDAN.cartan(), x, x), center_dim(2))

    def test_twist_across_an_arrow(self):
        """{f_i f_j, f_j f_i} = q/(1-q^2)^2 when a_ij = -1."""
        self.assertEqual(
            rho_pairing(A2.cartan(), parse_monomial("f(i) f(j)"), parse_monomial("f(j) f(i)")),
            RationalFunction(Q, (ONE - Q**2) * (ONE - Q**2)),
        )

    def test_different_weights(self):
        value = rho_pairing(A2.cartan(), parse_monomial("f(i)"), parse_monomial("f(j)"))
        self.assertTrue(value.is_zero())


class TestKhovanovLaudaForm(SimpleTestCase):
    def test_exact_value_matches_bilinear_form(self):
        algebra = KLRAlgebra(A2)
        x, y = parse_monomial("f(i) f(j)"), parse_monomial("f(j) f(i)")
        cartan = algebra.cartan
        self.assertEqual(
            kl_form_exact(algebra, gamma(cartan, x), gamma(cartan, y)),
            rho_pairing(cartan, x, y),
        )

    def test_divided_power_norm(self):
        """([P_i^(2)], [P_i^(2)]) = 1/((1-q^2)(1-q^4)) through q^12."""
        label = ProjectiveLabel((("i", 2),))
        series = kl_form(KLRAlgebra(A1), label, label, 12)
        self.assertTrue(series.agrees_with(center_dim(2).expand(12)))

    def test_pairings_agree(self):
        """{x, y} = (Gamma x, Gamma y) on small monomials of equal weight."""
        for quiver in (A1, A2, JORDAN, JORDAN_A1):
            algebra = KLRAlgebra(quiver)
            candidates = monomials(algebra.cartan, 2)
            for x in candidates:
                for y in candidates:
                    if x.weight != y.weight:
                        continue
                    with self.subTest(quiver=quiver.vertices, x=str(x), y=str(y)):
                        self.assertTrue(pairing_agreement_check(algebra, x, y, 10))

    def test_different_weights_raise(self):
        with self.assertRaises(ValueError):
            pairing_agreement_check(
                KLRAlgebra(A2), parse_monomial("f(i)"), parse_monomial("f(j)"), 4
            )


class TestK0Vectors(SimpleTestCase):
    def test_shift_and_bar(self):
        label = ProjectiveLabel((("i", 1),))
        vector = K0Vector({label: ONE}).shift(2)
        self.assertEqual(vector.terms[label], LaurentPolynomial.monomial(2))
        self.assertEqual(bar(vector).terms[label], LaurentPolynomial.monomial(-2))
        self.assertEqual(vector.weights(), {Weight({"i": 1})})

    def test_cancellation(self):
        label = ProjectiveLabel((("i", 1),))
        vector = K0Vector({label: ONE}) + K0Vector({label: -ONE})
        self.assertEqual(vector, K0Vector())

    def test_gamma_of_a_combination(self):
        """Each monomial goes to its projective label with the same coefficient."""
        cartan = A1.cartan()
        vector = gamma_combination(
            cartan,
            {parse_monomial("f(i) f(i)"): ONE, parse_monomial("f(i,2)"): Q + Q**-1},
        )
        self.assertEqual(
            vector.terms,
            {
                ProjectiveLabel((("i", 1), ("i", 1))): ONE,
                ProjectiveLabel((("i", 2),)): Q + Q**-1,
            },
        )

    def test_bar_rejects_other_types(self):
        with self.assertRaises(TypeError):
            bar(3)


class TestSerreRelations(SimpleTestCase):
    def test_sides_for_a2(self):
        """m = 2: i^(2) j + j i^(2) against i j i."""
        even, odd = serre_sides(KLRAlgebra(A2), "i", "j", 1)
        self.assertEqual(
            even,
            [ProjectiveLabel((("j", 1), ("i", 2))), ProjectiveLabel((("i", 2), ("j", 1)))],
        )
        self.assertEqual(odd, [ProjectiveLabel((("i", 1), ("j", 1), ("i", 1)))])

    def test_serre_a2(self):
        self.assertTrue(serre_check(KLRAlgebra(A2), "i", "j", 1, 8))

    def test_serre_with_loop_vertex(self):
        """A vertex with one loop next to a loopless one."""
        self.assertTrue(serre_check(KLRAlgebra(JORDAN_A1), "j", "i", 1, 8))

    def test_needs_loopless_vertex(self):
        with self.assertRaises(ValueError):
            serre_sides(KLRAlgebra(JORDAN_A1), "i", "j", 1)


class TestCommutingBlocks(SimpleTestCase):
    def test_block_crossings_invert(self):
        for quiver, n in ((A1_A1, 1), (A1_A1, 2), (JORDAN_PLUS_A1, 2)):
            with self.subTest(quiver=quiver.vertices, n=n):
                self.assertTrue(commute_intertwiner_check(KLRAlgebra(quiver), "i", "j", n, 1))

    def test_products_are_the_idempotents(self):
        algebra = KLRAlgebra(A1_A1)
        crossing = block_crossing(algebra, "i", 1, "j", 1)
        flip = block_crossing(algebra, "j", 1, "i", 1)
        self.assertEqual(crossing * flip, algebra.idempotent(("i", "j")))
        self.assertEqual(flip * crossing, algebra.idempotent(("j", "i")))

    def test_scalar_multiple_is_rejected(self):
        """3 tau composed with its flip is 3 e, which is not the idempotent."""
        scales = iter((3, 1))

        def scaled_crossing(*args):
            return next(scales) * block_crossing(*args)

        with patch("klr.k0.block_crossing", side_effect=scaled_crossing):
            self.assertFalse(commute_intertwiner_check(KLRAlgebra(A1_A1), "i", "j"))

    def test_needs_orthogonal_vertices(self):
        with self.assertRaises(ValueError):
            commute_intertwiner_check(KLRAlgebra(A2), "i", "j")


class TestCenters(SimpleTestCase):
    def test_centralizer_in_degree_zero(self):
        self.assertEqual(centralizer_dim(KLRAlgebra(A1), Weight({"i": 2}), 0), 1)

    def test_center_dimensions(self):
        for quiver, weight in ((A1, Weight({"i": 2})), (JORDAN, Weight({"i": 2}))):
            with self.subTest(quiver=quiver.vertices, weight=str(weight)):
                self.assertTrue(center_dim_check(KLRAlgebra(quiver), weight, 6))


class TestJordanCharacters(SimpleTestCase):
    def setUp(self):
        self.algebra = KLRAlgebra(JORDAN)

    def test_characters_are_independent(self):
        """The characters of the Specht modules of S_n are linearly independent."""
        for n in range(1, 5):
            with self.subTest(n=n):
                characters = jordan_characters(self.algebra, "i", n).values()
                self.assertEqual(character_rank(characters), len(characters))

    def test_projective_pairing(self):
        self.assertTrue(projective_specht_unitriangular(self.algebra, "i", 4))

    def test_frobenius_consistency(self):
        for shape in ((2, 1), (2, 2), (3, 1)):
            with self.subTest(shape=shape):
                self.assertTrue(frobenius_consistency(self.algebra, "i", shape))
