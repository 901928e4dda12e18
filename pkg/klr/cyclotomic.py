"""
Cyclotomic quotients R^Lambda(n) of the Jordan quiver, level a = Lambda(h_i).

With one loop every crossing has degree 0, tau_k^2 = 1 and dots slide through crossings,
so the two-sided ideal generated by x_1^a contains every x^r with some r_k >= a and
the quotient has the basis x^r tau_w with r_k < a.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Sequence

from klr import linalg
from klr import permutations as perms
from klr.algebra import Generator, KLRAlgebra, KLRElement, ProjectiveLabel, Terms
from klr.choices import DimensionMethod
from klr.polyrep import graded_component, truncated_dim
from klr.qseries import (
    ONE,
    LaurentPolynomial,
    RationalFunction,
    TruncatedSeries,
    alpha,
    beta,
    center_dim,
    cyclotomic_dim,
    nu,
)
from klr.quiver import QuiverDatum, Weight

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def jordan_quiver(vertex: str = "i") -> QuiverDatum:
    return QuiverDatum(vertices=(vertex,), loops=(1,))


def double_coset_representatives(n: int, ell: int) -> list[perms.Permutation]:
    """D_(n,ell) intersected with its inverse set; min(n, ell) + 1 elements."""
    return perms.double_coset_representatives(n, ell)


class CycloAlgebra:
    """
    R^Lambda(n) = R(n) / <x_1^a> for the Jordan quiver, all n at once.

    Attributes:
    - algebra (KLRAlgebra): The KLR algebra of the Jordan quiver.
    - level (int): a = Lambda(h_i).
    - vertex (str): The loop vertex i.

    Methods:
    - reduce: Drops the basis words with a dot exponent >= a.
    - normal_form: Normal form of a word in the quotient.
    - graded_dim: Exact graded dimension of e_L R^Lambda(n) e_R.
    - spanned_dim: Graded dimension of the span of all generator products.
    - quotient_dim: Graded dimension of R(n) modulo the ideal of x_1^a, computed in R(n).
    """

    def __init__(self, level: int, algebra: KLRAlgebra | None = None) -> None:
        if level < 0:
            raise ValueError(f"The level must be nonnegative, got a={level}")
        algebra = algebra or KLRAlgebra(jordan_quiver())
        quiver = algebra.quiver
        if len(quiver.vertices) != 1 or quiver.loops != (1,) or quiver.arrows:
            raise ValueError("Cyclotomic quotients are only implemented for the Jordan quiver")
        self.algebra = algebra
        self.level = level
        self.vertex = quiver.vertices[0]

    def weight(self, n: int) -> Weight:
        return Weight({self.vertex: n})

    def reduce(self, terms: Terms) -> Terms:
        return {key: value for key, value in terms.items() if all(r < self.level for r in key[0])}

    def element(self, n: int, terms: Terms) -> KLRElement:
        return self.algebra.element(self.weight(n), self.reduce(terms))

    def normal_form(self, word: Sequence[Generator], n: int) -> KLRElement:
        """
        The KLR normal form of a word followed by the cyclotomic reduction.
        :param word: generators in product order
        :param n: number of strands
        :return: KLRElement with every dot exponent below the level
        """
        element = self.algebra.normal_form(word, self.weight(n))
        return self.element(n, element.terms)

    def evaluate_diagram(self, text: str, n: int) -> KLRElement:
        word, positions = self.algebra.parse_word(text)
        element = self.algebra.normal_form(word, self.weight(n), positions)
        return self.element(n, element.terms)

    def multiply(self, left: KLRElement, right: KLRElement) -> KLRElement:
        n = left.weight.height
        return self.element(n, self.algebra.multiply_terms(left.terms, right.terms))

    def basis(self, n: int) -> list:
        """The words x^r tau_w 1_(i^n) with 0 <= r_k < a."""
        if self.level == 0 and n:
            return []
        source = (self.vertex,) * n
        exponents = [()]
        for _ in range(n):
            exponents = [r + (k,) for r in exponents for k in range(self.level)]
        return [(r, arr, source) for arr in perms.all_permutations(n) for r in exponents]

    def identity(self, n: int) -> KLRElement:
        return self.element(n, self.algebra.identity(self.weight(n)).terms)

    def graded_dim(self, left: KLRElement, right: KLRElement) -> LaurentPolynomial:
        """
        Dim(e_L R^Lambda(n) e_R): rank per degree of e_L b e_R over the basis words b.
        :param left: idempotent of R(n)
        :param right: idempotent of R(n)
        :return: LaurentPolynomial
        """
        if left.weight != right.weight:
            raise ValueError(f"Idempotents of weights {left.weight} and {right.weight}")
        n = left.weight.height
        if n == 0:
            return ONE
        multiply = self.algebra.multiply_terms
        by_degree: dict[int, list[Terms]] = {}
        for key in self.basis(n):
            vector = self.reduce(multiply(multiply(left.terms, {key: Fraction(1)}), right.terms))
            if vector:
                by_degree.setdefault(2 * sum(key[0]), []).append(vector)
        return LaurentPolynomial(
            {degree: linalg.rank(vectors) for degree, vectors in by_degree.items()}
        )

    def spanned_dim(self, n: int) -> LaurentPolynomial:
        """
        Graded dimension of the closure of {1} under left multiplication by every
        x_k and tau_k, computed without using the basis.
        """
        if n == 0:
            return ONE
        weight = self.weight(n)
        generators = [self.algebra.dot(k, weight).terms for k in range(1, n + 1)]
        generators += [self.algebra.crossing(k, weight).terms for k in range(1, n)]
        spans: dict[int, list[Terms]] = {}

        def admit(vector: Terms) -> bool:
            if not vector:
                return False
            degree = 2 * sum(next(iter(vector))[0])
            current = spans.setdefault(degree, [])
            if linalg.rank(current + [vector]) > len(current):
                current.append(vector)
                return True
            return False

        queue = [self.identity(n).terms]
        admit(queue[0])
        while queue:
            vector = queue.pop()
            for generator in generators:
                image = self.reduce(self.algebra.multiply_terms(generator, vector))
                if admit(image):
                    queue.append(image)
        return LaurentPolynomial({degree: len(vectors) for degree, vectors in spans.items()})

    def quotient_dim(self, n: int, bound: int) -> LaurentPolynomial:
        return ideal_quotient_dim(self.algebra, self.level, n, bound)


def ideal_quotient_dim(algebra: KLRAlgebra, level: int, n: int, bound: int) -> LaurentPolynomial:
    """
    Dim R(n i) / <x_1^level> in degrees <= bound for a quiver with the single vertex i.

    In each degree the two-sided ideal is spanned by the products b x_1^level b' of basis
    words, multiplied out in R(n i) with no reduction modulo the level.
    :param algebra: KLRAlgebra of a one-vertex quiver
    :param level: exponent of the generating dot
    :param n: number of strands
    :param bound: largest degree computed
    :return: LaurentPolynomial of the quotient dimensions
    """
    vertices = algebra.quiver.vertices
    if len(vertices) != 1:
        raise ValueError("The ideal of x_1^a is only computed for one-vertex quivers")
    if level < 0:
        raise ValueError(f"The level must be nonnegative, got a={level}")
    if n == 0:
        return ONE
    weight = Weight({vertices[0]: n})
    sequence = (vertices[0],) * n
    crossing_degrees = {
        algebra.degree_of_key(((0,) * n, arr, sequence)) for arr in perms.all_permutations(n)
    }
    low = min(crossing_degrees)
    generator = {((level,) + (0,) * (n - 1), perms.identity(n), sequence): Fraction(1)}
    multiply = algebra.multiply_terms

    def words(degree: int) -> list:
        return graded_component(algebra, weight, sequence, sequence, degree)

    left_products: dict = {}
    dims: dict[int, int] = {}
    for degree in range(low, bound + 1):
        basis = words(degree)
        if not basis:
            continue
        vectors = []
        for first in range(low, degree - 2 * level - low + 1):
            right_words = words(degree - 2 * level - first)
            for b in words(first) if right_words else ():
                if b not in left_products:
                    left_products[b] = multiply({b: Fraction(1)}, generator)
                for c in right_words:
                    product = multiply(left_products[b], {c: Fraction(1)})
                    if product:
                        vectors.append(product)
        quotient = len(basis) - linalg.rank(vectors)
        logger.debug("R(%s)/<x_1^%s> in degree %s: %s", n, level, degree, quotient)
        if quotient:
            dims[degree] = quotient
        elif crossing_degrees == {0}:
            # R(n)_(d+2) = sum_k x_k R(n)_d once every crossing has degree 0
            break
    return LaurentPolynomial(dims)



def cyclo_normal_form(word: Sequence[Generator], cyclo: CycloAlgebra, n: int) -> KLRElement:
    return cyclo.normal_form(word, n)


def cyclo_truncated_dim(
    left: KLRElement, right: KLRElement, cyclo: CycloAlgebra
) -> LaurentPolynomial:
    return cyclo.graded_dim(left, right)


def cyclo_dim_check(a: int, n: int, bound: int) -> bool:
    """
    R(n) modulo the ideal of x_1^a, computed in R(n), against the basis count and
    n! ((1-q^2a)/(1-q^2))^n degree by degree through q^bound.
    """
    cyclo = CycloAlgebra(a)
    quotient = cyclo.quotient_dim(n, bound)
    counted = LaurentPolynomial(_degree_counts(cyclo.basis(n)))
    expected = cyclotomic_dim(a, n)
    agree = all(quotient[d] == expected[d] == counted[d] for d in range(0, bound + 1))
    if not agree:
        logger.warning("R^Lambda(%s) at level %s: found %s, expected %s", n, a, quotient, expected)
    return agree


def _degree_counts(keys: list) -> dict[int, int]:
    counts: dict[int, int] = {}
    for r, _, _ in keys:
        counts[2 * sum(r)] = counts.get(2 * sum(r), 0) + 1
    return counts


def highest_weight_dim_check(a: int, n_max: int, bound: int) -> bool:
    """
    Dim R^Lambda(n) = n! ((1-q^2a)/(1-q^2))^n for every n <= n_max; at level 0 only
    R^Lambda(0) survives.
    """
    cyclo = CycloAlgebra(a)
    for n in range(n_max + 1):
        quotient = cyclo.quotient_dim(n, bound)
        if not quotient.truncate(bound).agrees_with(cyclotomic_dim(a, n).truncate(bound)):
            logger.warning("Level %s, n=%s: found %s", a, n, quotient)
            return False
    return True


def block_idempotent(algebra: KLRAlgebra, vertex: str, plain: int, block: int) -> KLRElement:
    """1_(i^plain) x e_(i,block) in R((plain + block) i)."""
    blocks = ((vertex, 1),) * plain + (((vertex, block),) if block else ())
    return ProjectiveLabel(blocks).idempotent(algebra)


def _series(value: LaurentPolynomial | RationalFunction, bound: int) -> TruncatedSeries:
    if isinstance(value, LaurentPolynomial):
        return value.truncate(bound)
    return value.expand(bound)


def _mackey_terms(n: int, ell: int, t: int) -> list[tuple[int, int, int, int]]:
    """(p, k, s, m) for the summands F_(t-p) E_(ell-p) x Z_p with k = n - ell + p >= 0."""
    m = n + t - ell
    return [(p, n - ell + p, t - p, m) for p in range(min(ell, t) + 1) if n - ell + p >= 0]


def mackey_decomp_check(
    n: int, ell: int, t: int, bound: int, method: str = DimensionMethod.COINVARIANT
) -> bool:
    """
    Dim (1_m x e_ell) R(n+t) (1_n x e_t) against
    sum_p C(m, k) Dim(R(s) e_s) Dim((1_k x e_(ell-p)) R(n)) Dim Z_p through q^bound.
    :param n: strands of the module the functors act on
    :param ell: size of the E block
    :param t: size of the F block
    :param bound: truncation D
    :param method: DimensionMethod value
    :return: bool
    """
    if n + t - ell < 0:
        raise ValueError(f"E_{ell} F_{t} vanishes on R({n})")
    algebra = KLRAlgebra(jordan_quiver())
    vertex = algebra.quiver.vertices[0]

    def dim(left: KLRElement, right: KLRElement) -> TruncatedSeries:
        if left.weight.height == 0:
            return TruncatedSeries({0: 1}, bound)
        return truncated_dim(left, right, bound, method)

    def identity(size: int) -> KLRElement:
        return block_idempotent(algebra, vertex, size, 0)

    m = n + t - ell
    expected = dim(
        block_idempotent(algebra, vertex, m, ell), block_idempotent(algebra, vertex, n, t)
    )
    total = TruncatedSeries({}, bound)
    for p, k, s, _ in _mackey_terms(n, ell, t):
        induced = dim(identity(s), block_idempotent(algebra, vertex, 0, s))
        restricted = dim(block_idempotent(algebra, vertex, k, ell - p), identity(n))
        term = induced * restricted * _series(center_dim(p), bound)
        total = total + term * LaurentPolynomial.constant(comb(m, k))
    agree = expected.agrees_with(total)
    if not agree:
        logger.warning("Mackey sum for n=%s, l=%s, t=%s: %s vs %s", n, ell, t, expected, total)
    return agree


def cyclo_mackey_check(a: int, n: int, ell: int, t: int, bound: int | None = None) -> bool:
    """
    The same decomposition inside R^Lambda with Dim Z_p^Lambda = beta(p, a); all
    dimensions are finite and compared exactly, or through q^bound when given.
    """
    if n + t - ell < 0:
        raise ValueError(f"E_{ell} F_{t} vanishes on R^Lambda({n})")
    cyclo = CycloAlgebra(a)
    algebra, vertex = cyclo.algebra, cyclo.vertex

    def identity(size: int) -> KLRElement:
        return block_idempotent(algebra, vertex, size, 0)

    m = n + t - ell
    expected = cyclo.graded_dim(
        block_idempotent(algebra, vertex, m, ell), block_idempotent(algebra, vertex, n, t)
    )
    total = LaurentPolynomial()
    for p, k, s, _ in _mackey_terms(n, ell, t):
        induced = cyclo.graded_dim(identity(s), block_idempotent(algebra, vertex, 0, s))
        restricted = cyclo.graded_dim(block_idempotent(algebra, vertex, k, ell - p), identity(n))
        total = total + induced * restricted * beta(p, a) * comb(m, k)
    if bound is None:
        agree = expected == total
    else:
        agree = expected.truncate(bound).agrees_with(total.truncate(bound))
    if not agree:
        logger.warning("Cyclotomic Mackey sum for a=%s, n=%s: %s vs %s", a, n, expected, total)
    return agree


def ef_coefficient_check(ell: int, t: int, a: int) -> bool:
    """
    For p <= min(ell, t): q^-pa beta_p satisfies
    sum_{k<p} nu_k K^k alpha_(p-k) = nu_p (K^-p - K^p) at K = q^a, and equals alpha_p.
    """
    if min(ell, t, a) < 1:
        raise ValueError(f"ef_coefficient_check needs l, t, a >= 1, got {ell}, {t}, {a}")
    candidates = {
        p: RationalFunction(beta(p, a) * LaurentPolynomial.monomial(-p * a))
        for p in range(1, min(ell, t) + 1)
    }
    for p, candidate in candidates.items():
        left = RationalFunction(0)
        for k in range(p):
            left = left + nu(k) * LaurentPolynomial.monomial(k * a) * candidates[p - k]
        right = nu(p) * (LaurentPolynomial.monomial(-p * a) - LaurentPolynomial.monomial(p * a))
        if left != right or candidate != alpha(p, a):
            logger.warning("Coefficient alpha_%s fails at level %s", p, a)
            return False
    return True


def symmetrizer_corner_check(m: int, bound: int) -> bool:
    """Dim(e_m R(m) e_m) = Dim Z_m through q^bound."""
    algebra = KLRAlgebra(jordan_quiver())
    e = block_idempotent(algebra, algebra.quiver.vertices[0], 0, m)
    return truncated_dim(e, e, bound).agrees_with(center_dim(m).expand(bound))
