import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Union

from sympy import QQ
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Coefficient = Union[int, Fraction]

# One-variable polynomial ring used for gcd computations of rational functions.
_Q_RING, _q = ring("q", QQ)


def _fraction(value) -> Fraction:
    """
    Converts an int, a Fraction or a sympy rational into a Fraction.
    :param value: number
    :return: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


class LaurentPolynomial:
    """
    An exact Laurent polynomial in the variable q.

    The polynomial is stored as a map from integer exponents to nonzero rational
    coefficients, so two values are equal iff their coefficient maps are equal.

    Methods:
    - monomial / constant: Alternative constructors.
    - valuation / degree: Lowest and highest exponent carrying a nonzero coefficient.
    - bar: The involution q -> q^-1.
    - substitute_power: The substitution q -> q^k.
    - truncate: The TruncatedSeries with the coefficients up to a bound.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[int, Coefficient] | None = None) -> None:
        cleaned = {}
        for exponent, coefficient in (coefficients or {}).items():
            coefficient = _fraction(coefficient)
            if coefficient:
                cleaned[int(exponent)] = coefficient
        self._coefficients = cleaned

    @classmethod
    def monomial(cls, exponent: int, coefficient: Coefficient = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, coefficient: Coefficient) -> "LaurentPolynomial":
        return cls({0: coefficient})

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coefficients)

    def __getitem__(self, exponent: int) -> Fraction:
        return self._coefficients.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coefficients

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no valuation")
        return min(self._coefficients)

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no degree")
        return max(self._coefficients)

    def is_polynomial(self) -> bool:
        return self.is_zero() or self.valuation() >= 0

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._coefficients.values())

    @classmethod
    def _coerce(cls, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coefficients)
        for exponent, coefficient in other._coefficients.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LaurentPolynomial(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._coefficients.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: dict[int, Fraction] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        if power < 0:
            if len(self._coefficients) != 1:
                raise ValueError("Only monomials can be raised to negative powers")
            ((exponent, coefficient),) = self._coefficients.items()
            return LaurentPolynomial({exponent * power: coefficient**power})
        result = LaurentPolynomial.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def bar(self) -> "LaurentPolynomial":
        return LaurentPolynomial({-e: c for e, c in self._coefficients.items()})

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({k * e: c for e, c in self._coefficients.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._coefficients.items()})

    def evaluate_at_one(self) -> Fraction:
        return sum(self._coefficients.values(), Fraction(0))

    def truncate(self, bound: int) -> "TruncatedSeries":
        low = self.valuation() if not self.is_zero() else bound
        return TruncatedSeries(
            {e: c for e, c in self._coefficients.items() if e <= bound}, bound, low
        )

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._coefficients.items())}

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exponent in sorted(self._coefficients, reverse=True):
            coefficient = self._coefficients[exponent]
            if exponent == 0:
                monomial = str(coefficient)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                if coefficient == 1:
                    monomial = power
                elif coefficient == -1:
                    monomial = f"-{power}"
                else:
                    monomial = f"{coefficient}*{power}"
            parts.append(monomial)
        return " + ".join(parts).replace("+ -", "- ")


Q = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial.constant(1)
ZERO = LaurentPolynomial()


def _to_ring(poly: LaurentPolynomial):
    """
    Converts a polynomial (nonnegative exponents) into an element of the sympy ring QQ[q].
    :param poly: LaurentPolynomial
    :return: PolyElement
    """
    return _Q_RING.from_dict(
        {(e,): QQ(c.numerator, c.denominator) for e, c in poly.coefficients.items()}
    )


def _from_ring(element) -> LaurentPolynomial:
    return LaurentPolynomial({m[0]: _fraction(c) for m, c in element.terms()})


class RationalFunction:
    """
    A reduced quotient of two Laurent polynomials in q.

    The pair is kept in a canonical form: the common factor is removed (gcd over QQ[q]),
    every power of q is moved into the numerator, and the constant term of the
    denominator is 1. Equality therefore compares the stored pairs.

    Attributes:
    - numerator (LaurentPolynomial): The numerator in canonical form.
    - denominator (LaurentPolynomial): A polynomial with constant term 1.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1) -> None:
        numerator = LaurentPolynomial._coerce(numerator)
        denominator = LaurentPolynomial._coerce(denominator)
        if denominator.is_zero():
            raise ValueError("Denominator of a rational function must be nonzero")

        if numerator.is_zero():
            self.numerator, self.denominator = ZERO, ONE
            return

        shift = numerator.valuation() - denominator.valuation()
        top = _to_ring(numerator.shift(-numerator.valuation()))
        bottom = _to_ring(denominator.shift(-denominator.valuation()))

        common = top.gcd(bottom)
        top, bottom = top.exquo(common), bottom.exquo(common)

        lowest = bottom[(0,)]
        top, bottom = top.quo_ground(lowest), bottom.quo_ground(lowest)

        self.numerator = _from_ring(top).shift(shift)
        self.denominator = _from_ring(bottom)

    @classmethod
    def _coerce(cls, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            return cls(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RationalFunction(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, power: int) -> "RationalFunction":
        if power < 0:
            return RationalFunction(self.denominator**-power, self.numerator**-power)
        return RationalFunction(self.numerator**power, self.denominator**power)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.numerator.bar(), self.denominator.bar())

    def as_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def expand(self, bound: int) -> "TruncatedSeries":
        """
        Expands the rational function as a power series in q up to q^bound.

        The canonical denominator has constant term 1, so the expansion always exists.
        :param bound: int
        :return: TruncatedSeries
        """
        if self.is_zero():
            return TruncatedSeries({}, bound, bound)
        low = self.numerator.valuation()
        depth = bound - low
        inverse: list[Fraction] = []
        for k in range(max(depth, -1) + 1):
            value = Fraction(1) if k == 0 else Fraction(0)
            for j in range(1, k + 1):
                value -= self.denominator[j] * inverse[k - j]
            inverse.append(value)

        coefficients: dict[int, Fraction] = {}
        for exponent, coefficient in self.numerator.coefficients.items():
            for k, value in enumerate(inverse):
                if exponent + k > bound:
                    break
                coefficients[exponent + k] = (
                    coefficients.get(exponent + k, 0) + coefficient * value
                )
        return TruncatedSeries(coefficients, bound, low)

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
        }

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.is_laurent():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


class TruncatedSeries:
    """
    A power series in q known exactly for exponents in [low, bound].

    Coefficients below ``low`` are zero; coefficients above ``bound`` are unknown.
    Arithmetic keeps the smallest bound that is still exact.
    """

    __slots__ = ("_coefficients", "bound", "low")

    def __init__(
        self,
        coefficients: Mapping[int, Coefficient],
        bound: int,
        low: int | None = None,
    ) -> None:
        cleaned = {}
        for exponent, coefficient in coefficients.items():
            coefficient = _fraction(coefficient)
            if coefficient and exponent <= bound:
                cleaned[int(exponent)] = coefficient
        self._coefficients = cleaned
        self.bound = bound
        if low is None:
            low = min(cleaned) if cleaned else bound
        self.low = min([low] + list(cleaned))

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coefficients)

    def __getitem__(self, exponent: int) -> Fraction:
        if exponent > self.bound:
            raise IndexError(f"Coefficient of q^{exponent} is beyond q^{self.bound}")
        return self._coefficients.get(exponent, Fraction(0))

    def retruncate(self, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self._coefficients, min(bound, self.bound), min(self.low, bound)
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        result = dict(self._coefficients)
        for exponent, coefficient in other._coefficients.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return TruncatedSeries(result, bound, min(self.low, other.low, bound))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            {e: -c for e, c in self._coefficients.items()}, self.bound, self.low
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, LaurentPolynomial):
            if other.is_zero():
                return TruncatedSeries({}, self.bound, self.low)
            bound = self.bound + other.valuation()
            other = TruncatedSeries(other.coefficients, bound - self.low)
        else:
            bound = min(self.bound + other.low, other.bound + self.low)
        result: dict[int, Fraction] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                if e1 + e2 <= bound:
                    result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return TruncatedSeries(result, bound, min(self.low + other.low, bound))

    __rmul__ = __mul__

    def agrees_with(self, other: "TruncatedSeries", bound: int | None = None) -> bool:
        """
        Compares two series on every exponent both of them know.
        :param other: TruncatedSeries
        :param bound: optional extra upper bound of the comparison
        :return: bool
        """
        limit = min(self.bound, other.bound)
        if bound is not None:
            limit = min(limit, bound)
        exponents = set(self._coefficients) | set(other._coefficients)
        return all(
            self._coefficients.get(e, 0) == other._coefficients.get(e, 0)
            for e in exponents
            if e <= limit
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self.bound, frozenset(self._coefficients.items())))

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "coefficients": {
                str(e): str(c) for e, c in sorted(self._coefficients.items())
            },
        }

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"

    def __str__(self) -> str:
        body = str(LaurentPolynomial(self._coefficients))
        return f"{body} + O(q^{self.bound + 1})"


def qint(n: int) -> LaurentPolynomial:
    """
    The balanced quantum integer [n] = (q^n - q^-n) / (q - q^-1).
    :param n: positive integer
    :return: LaurentPolynomial
    """
    if n <= 0:
        raise ValueError(f"qint needs a positive integer, got n={n}")
    return LaurentPolynomial({n - 1 - 2 * k: 1 for k in range(n)})


def qfactorial(n: int) -> LaurentPolynomial:
    if n < 0:
        raise ValueError(f"qfactorial needs a nonnegative integer, got n={n}")
    result = ONE
    for k in range(1, n + 1):
        result = result * qint(k)
    return result


def _one_minus_q_power(k: int) -> LaurentPolynomial:
    return ONE - LaurentPolynomial.monomial(k)


def pochhammer(a: int, n: int) -> LaurentPolynomial:
    """
    The q-Pochhammer symbol (q^a; q)_n = (1 - q^a)(1 - q^(a+1))...(1 - q^(a+n-1)).
    :param a: int >= 0
    :param n: int >= 0
    :return: LaurentPolynomial
    """
    if a < 0 or n < 0:
        raise ValueError(f"pochhammer needs a, n >= 0, got a={a}, n={n}")
    result = ONE
    for k in range(n):
        result = result * _one_minus_q_power(a + k)
    return result


@lru_cache(maxsize=None)
def gauss_binom(n: int, m: int) -> LaurentPolynomial:
    """
    The non-balanced Gaussian binomial coefficient, a polynomial in q.

    Computed as the exact quotient (1-q^n)...(1-q^(n-m+1)) / (1-q)...(1-q^m).
    :param n: int >= 0
    :param m: int, 0 <= m <= n
    :return: LaurentPolynomial
    """
    if n < 0 or m < 0:
        raise ValueError(f"gauss_binom needs n, m >= 0, got n={n}, m={m}")
    if m > n:
        raise ValueError(f"gauss_binom needs m <= n, got n={n}, m={m}")
    quotient = RationalFunction(pochhammer(n - m + 1, m), pochhammer(1, m))
    return quotient.as_laurent()


def beta(p: int, a: int) -> LaurentPolynomial:
    """
    Graded dimension of the truncated symmetric polynomials Z_p^a:
    gauss_binom(a + p - 1, p) with q replaced by q^2. beta(0, a) is 1.
    :param p: int >= 0
    :param a: int >= 1
    :return: LaurentPolynomial
    """
    if p < 0 or a < 1:
        raise ValueError(f"beta needs p >= 0 and a >= 1, got p={p}, a={a}")
    if p == 0:
        return ONE
    return gauss_binom(a + p - 1, p).substitute_power(2)


@lru_cache(maxsize=None)
def nu(k: int) -> RationalFunction:
    """1 / ((1 - q^2)(1 - q^4)...(1 - q^2k))"""
    if k < 0:
        raise ValueError(f"nu needs k >= 0, got k={k}")
    return RationalFunction(ONE, pochhammer(1, k).substitute_power(2))


@lru_cache(maxsize=None)
def alpha(p: int, a: int) -> RationalFunction:
    """
    The E-F commutation coefficient, by the recursion
    alpha_p = nu_p (q^-pa - q^pa) - sum_{k<p} nu_k q^ka alpha_{p-k}.
    :param p: int >= 1
    :param a: int >= 1
    :return: RationalFunction
    """
    if p < 1 or a < 1:
        raise ValueError(f"alpha needs p, a >= 1, got p={p}, a={a}")
    result = nu(p) * (LaurentPolynomial.monomial(-p * a) - LaurentPolynomial.monomial(p * a))
    for k in range(1, p):
        result = result - nu(k) * LaurentPolynomial.monomial(k * a) * alpha(p - k, a)
    return result


def gauss_identity_check(p: int, a: int) -> bool:
    """
    Checks 1 - q^pa == sum_{k<p} q^ka [p, k] (q^a; q)_{p-k} exactly.
    :param p: int >= 1
    :param a: int >= 1
    :return: bool
    """
    if p < 1 or a < 1:
        raise ValueError(f"gauss_identity_check needs p, a >= 1, got p={p}, a={a}")
    left = _one_minus_q_power(p * a)
    right = ZERO
    for k in range(p):
        right = right + LaurentPolynomial.monomial(k * a) * gauss_binom(p, k) * pochhammer(
            a, p - k
        )
    if left != right:
        logger.warning("Gauss identity fails for p=%s, a=%s: %s != %s", p, a, left, right)
    return left == right


def center_dim(*multiplicities: int) -> RationalFunction:
    """
    Graded dimension of a tensor product of symmetric polynomial algebras,
    prod_k prod_{c <= m_k} 1 / (1 - q^2c).
    :param multiplicities: the multiplicities m_k
    :return: RationalFunction
    """
    result = RationalFunction(ONE)
    for m in multiplicities:
        result = result * nu(m)
    return result


def cyclotomic_dim(a: int, n: int) -> LaurentPolynomial:
    """
    n! ((1 - q^2a) / (1 - q^2))^n, the graded dimension of a level-a Jordan quotient.
    :param a: int >= 0
    :param n: int >= 0
    :return: LaurentPolynomial
    """
    if a < 0 or n < 0:
        raise ValueError(f"cyclotomic_dim needs a, n >= 0, got a={a}, n={n}")
    level = LaurentPolynomial({2 * k: 1 for k in range(a)})
    return LaurentPolynomial.constant(factorial(n)) * level**n
