from fractions import Fraction

from django.test import SimpleTestCase

from klr.qseries import (
    ONE,
    Q,
    LaurentPolynomial,
    RationalFunction,
    TruncatedSeries,
    alpha,
    beta,
    center_dim,
    cyclotomic_dim,
    gauss_binom,
    gauss_identity_check,
    nu,
    pochhammer,
    qfactorial,
    qint,
)


class TestLaurentPolynomial(SimpleTestCase):
    def test_zero_coefficients_are_dropped(self):
        """Coefficients equal to zero do not change equality."""
        self.assertEqual(LaurentPolynomial({0: 1, 3: 0}), ONE)
        self.assertTrue(LaurentPolynomial({2: 0}).is_zero())

    def test_arithmetic(self):
        """Products and sums of monomials collect exponents."""
        value = (Q + 1) * (Q - 1)
        self.assertEqual(value, LaurentPolynomial({2: 1, 0: -1}))
        self.assertEqual(Q**-2, LaurentPolynomial.monomial(-2))

    def test_bar_and_shift(self):
        """bar sends q to q^-1 and shift multiplies by q^k."""
        value = LaurentPolynomial({-1: 2, 3: Fraction(1, 2)})
        self.assertEqual(value.bar(), LaurentPolynomial({1: 2, -3: Fraction(1, 2)}))
        self.assertEqual(value.shift(2), LaurentPolynomial({1: 2, 5: Fraction(1, 2)}))

    def test_valuation_of_zero_raises(self):
        """The zero polynomial has no valuation."""
        with self.assertRaises(ValueError):
            LaurentPolynomial().valuation()

    def test_string_form(self):
        """Terms are written from the highest exponent down."""
        self.assertEqual(str(LaurentPolynomial({2: 1, 0: -1})), "q^2 - 1")


class TestQuantumNumbers(SimpleTestCase):
    def test_qint_is_balanced(self):
        """[3] = q^2 + 1 + q^-2 and is bar invariant."""
        self.assertEqual(qint(3), LaurentPolynomial({2: 1, 0: 1, -2: 1}))
        for n in range(1, 7):
            with self.subTest(n=n):
                self.assertEqual(qint(n).bar(), qint(n))
                self.assertEqual(qint(n).evaluate_at_one(), n)

    def test_qint_rejects_nonpositive(self):
        """qint needs n >= 1."""
        with self.assertRaises(ValueError):
            qint(0)

    def test_qfactorial(self):
        """[3]! = q^3 + 2q + 2q^-1 + q^-3."""
        self.assertEqual(qfactorial(0), ONE)
        self.assertEqual(qfactorial(3), LaurentPolynomial({3: 1, 1: 2, -1: 2, -3: 1}))

    def test_gauss_binom(self):
        """The non-balanced bracket [4, 2] = 1 + q + 2q^2 + q^3 + q^4."""
        self.assertEqual(gauss_binom(4, 2), LaurentPolynomial({0: 1, 1: 1, 2: 2, 3: 1, 4: 1}))
        self.assertEqual(gauss_binom(5, 0), ONE)

    def test_gauss_binom_rejects_large_m(self):
        """m > n is a precondition violation."""
        with self.assertRaises(ValueError):
            gauss_binom(2, 3)

    def test_pascal_identity(self):
        """[n+1, m] = q^m [n, m] + [n, m-1]."""
        for n in range(1, 13):
            for m in range(1, n + 1):
                with self.subTest(n=n, m=m):
                    self.assertEqual(
                        gauss_binom(n + 1, m),
                        LaurentPolynomial.monomial(m) * gauss_binom(n, m) + gauss_binom(n, m - 1),
                    )

    def test_pochhammer(self):
        """(q^2; q)_2 = (1 - q^2)(1 - q^3)."""
        self.assertEqual(pochhammer(2, 2), (ONE - Q**2) * (ONE - Q**3))


class TestRationalFunction(SimpleTestCase):
    def test_canonical_form(self):
        """Common factors cancel so equal quotients compare equal."""
        first = RationalFunction(ONE - Q**2, ONE - Q)
        self.assertEqual(first, RationalFunction(ONE + Q))
        self.assertTrue(first.is_laurent())

    def test_zero_denominator(self):
        """A zero denominator is rejected."""
        with self.assertRaises(ValueError):
            RationalFunction(ONE, LaurentPolynomial())

    def test_expand(self):
        """1/(1-q^2) = 1 + q^2 + q^4 + ..."""
        series = RationalFunction(ONE, ONE - Q**2).expand(6)
        self.assertEqual(series.coefficients, {0: 1, 2: 1, 4: 1, 6: 1})

    def test_center_dim(self):
        """Dim of the symmetric polynomials in two variables starts 1, 1, 2, 2, 3."""
        series = center_dim(2).expand(8)
        self.assertEqual([series[d] for d in range(0, 9, 2)], [1, 1, 2, 2, 3])


class TestTruncatedSeries(SimpleTestCase):
    def test_agrees_with_uses_common_bound(self):
        """Coefficients above the smaller bound are ignored."""
        first = TruncatedSeries({0: 1, 2: 1, 4: 7}, 4)
        second = TruncatedSeries({0: 1, 2: 1}, 2)
        self.assertTrue(first.agrees_with(second))
        self.assertFalse(first.agrees_with(TruncatedSeries({0: 1, 4: 1}, 4)))

    def test_product_with_polynomial(self):
        """Multiplying by q^2 shifts the known range."""
        series = TruncatedSeries({0: 1, 2: 1}, 2) * LaurentPolynomial.monomial(2)
        self.assertEqual(series.bound, 4)
        self.assertEqual(series.coefficients, {2: 1, 4: 1})

    def test_coefficient_beyond_bound(self):
        """Reading past the bound is an error."""
        with self.assertRaises(IndexError):
            TruncatedSeries({0: 1}, 2)[3]


class TestCommutationCoefficients(SimpleTestCase):
    def test_gauss_identity(self):
        """1 - q^pa = sum_k q^ka [p, k] (q^a; q)_(p-k)."""
        for p in range(1, 7):
            for a in range(1, 5):
                with self.subTest(p=p, a=a):
                    self.assertTrue(gauss_identity_check(p, a))

    def test_alpha_matches_beta(self):
        """alpha_p q^pa = beta_p."""
        for p in range(1, 7):
            for a in range(1, 5):
                with self.subTest(p=p, a=a):
                    self.assertEqual(alpha(p, a) * LaurentPolynomial.monomial(p * a), beta(p, a))

    def test_beta_small_values(self):
        """beta(1, a) = 1 + q^2 + ... + q^(2a-2) and beta(0, a) = 1."""
        self.assertEqual(beta(0, 3), ONE)
        self.assertEqual(beta(1, 3), LaurentPolynomial({0: 1, 2: 1, 4: 1}))
        self.assertEqual(beta(2, 2), LaurentPolynomial({0: 1, 2: 1, 4: 1}))

    def test_nu(self):
        """nu_0 = 1 and nu_1 = 1/(1-q^2)."""
        self.assertEqual(nu(0), RationalFunction(ONE))
        self.assertEqual(nu(1), RationalFunction(ONE, ONE - Q**2))

    def test_cyclotomic_dim(self):
        """At q = 1 the dimension is a^n n!."""
        for a, n in ((1, 3), (2, 2), (3, 2)):
            with self.subTest(a=a, n=n):
                self.assertEqual(cyclotomic_dim(a, n).evaluate_at_one(), a**n * [1, 1, 2, 6][n])
        self.assertEqual(cyclotomic_dim(2, 1), LaurentPolynomial({0: 1, 2: 1}))
