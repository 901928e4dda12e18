"""
The polynomial representation of R(nu) and degree-by-degree linear algebra in R(nu).

The representation is the independent oracle for the normal-form engine: a word of
generators and its normal form must act identically on every PolyVector.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.rings import ring

from klr import permutations as perms
from klr.algebra import Generator, Key, KLRAlgebra, KLRElement, Terms
from klr.choices import DimensionMethod, GeneratorKind
from klr.linalg import independent_subset, rank, to_fraction, to_qq
from klr.qseries import LaurentPolynomial, RationalFunction, TruncatedSeries, center_dim
from klr.quiver import Weight

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@lru_cache(maxsize=None)
def polynomial_ring(n: int):
    """
    QQ[x1, ..., xn] with the lex order x1 > x2 > ... > xn.
    :param n: number of strands
    :return: (ring, tuple of generators)
    """
    names = ",".join(f"x{k}" for k in range(1, max(n, 1) + 1))
    result = ring(names, QQ)
    return result[0], tuple(result[1:])


class PolyVector:
    """
    An element of the polynomial representation: one polynomial per sequence.

    Attributes:
    - n (int): Number of strands.
    - components (dict): Map sequence -> PolyElement of polynomial_ring(n); zeros dropped.
    """

    __slots__ = ("n", "components")

    def __init__(self, n: int, components: dict | None = None) -> None:
        self.n = n
        self.components = {seq: f for seq, f in (components or {}).items() if f}

    @classmethod
    def monomial(
        cls, sequence: Sequence[str], exponents: Sequence[int], coefficient=1
    ) -> "PolyVector":
        sequence = tuple(sequence)
        poly_ring, _ = polynomial_ring(len(sequence))
        return cls(
            len(sequence),
            {sequence: poly_ring.from_dict({tuple(exponents): to_qq(Fraction(coefficient))})},
        )

    def __add__(self, other: "PolyVector") -> "PolyVector":
        components = dict(self.components)
        for seq, f in other.components.items():
            components[seq] = components[seq] + f if seq in components else f
        return PolyVector(self.n, components)

    def __neg__(self) -> "PolyVector":
        return PolyVector(self.n, {seq: -f for seq, f in self.components.items()})

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return self + (-other)

    def scale(self, value) -> "PolyVector":
        factor = to_qq(Fraction(value))
        return PolyVector(self.n, {seq: f * factor for seq, f in self.components.items()})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"{','.join(seq)}: {f}" for seq, f in sorted(self.components.items())]
        return "PolyVector({" + "; ".join(parts) + "})"


class PolynomialRepresentation:
    """
    The faithful representation of R(nu) on polynomials, one copy per sequence.

    On a component with colours (b, d) at strands k, k+1, tau_k acts by the divided
    difference when b = d is loopless, by (x_k - x_(k+1))^(h-1) s_k when b = d has h
    loops, and by (x_k - x_(k+1))^(h_bd) s_k into the swapped sequence when b != d.
    """

    def __init__(self, algebra: KLRAlgebra, weight: Weight) -> None:
        self.algebra = algebra
        self.weight = weight
        self.n = weight.height
        self.ring, self.gens = polynomial_ring(self.n)

    def swap(self, f, k: int):
        return self.ring.from_dict(
            {
                monomial[: k - 1] + (monomial[k], monomial[k - 1]) + monomial[k + 1 :]: c
                for monomial, c in f.terms()
            }
        )

    def divided_difference(self, f, k: int):
        """(f - s_k f) / (x_k - x_(k+1)); always a polynomial."""
        return (f - self.swap(f, k)).exquo(self.gens[k - 1] - self.gens[k])

    def _crossing(self, k: int, sequence: tuple[str, ...], f):
        quiver, cartan = self.algebra.quiver, self.algebra.cartan
        b, d = sequence[k - 1], sequence[k]
        difference = self.gens[k - 1] - self.gens[k]
        if b == d:
            if cartan.is_plus(b):
                return sequence, self.divided_difference(f, k)
            return sequence, difference ** (quiver.loop_count(b) - 1) * self.swap(f, k)
        swapped = perms.apply_letter(sequence, k)
        return swapped, difference ** quiver.arrow_count(b, d) * self.swap(f, k)

    def act(self, generator: Generator, vector: PolyVector) -> PolyVector:
        """
        Action of one generator.
        :param generator: (kind, argument) as in KLRAlgebra.normal_form
        :param vector: PolyVector
        :return: PolyVector
        """
        kind, argument = generator
        if kind == GeneratorKind.IDEMPOTENT:
            sequence = tuple(argument)
            return PolyVector(self.n, {s: f for s, f in vector.components.items() if s == sequence})
        if kind == GeneratorKind.DOT:
            x = self.gens[int(argument) - 1]
            return PolyVector(self.n, {s: x * f for s, f in vector.components.items()})
        if kind == GeneratorKind.CROSSING:
            result = PolyVector(self.n)
            for sequence, f in vector.components.items():
                target, image = self._crossing(int(argument), sequence, f)
                result = result + PolyVector(self.n, {target: image})
            return result
        raise ValueError(f"Unknown generator {kind!r}")

    def act_word(self, word: Sequence[Generator], vector: PolyVector) -> PolyVector:
        """A word in product order acts rightmost generator first."""
        for generator in reversed(list(word)):
            vector = self.act(generator, vector)
        return vector

    def element_act(self, element: KLRElement, vector: PolyVector) -> PolyVector:
        result = PolyVector(self.n)
        for (r, arr, src), coefficient in element.terms.items():
            f = vector.components.get(src)
            if f is None:
                continue
            image = PolyVector(self.n, {src: f})
            for letter in reversed(perms.reduced_word(arr)):
                image = self.act((GeneratorKind.CROSSING, letter), image)
            monomial = self.ring.from_dict({r: QQ(1)})
            image = PolyVector(self.n, {s: monomial * g for s, g in image.components.items()})
            result = result + image.scale(coefficient)
        return result

    def probe_bound(self, elements: Iterable[KLRElement], slack: int = 4) -> int:
        """
        E = 2 * crossings * (largest relation exponent) + largest dot exponent + slack.
        """
        elements = list(elements)
        crossings = max((e.max_crossings() for e in elements), default=0)
        dots = max((e.max_dot_exponent() for e in elements), default=0)
        return 2 * crossings * self.relation_exponent() + dots + slack

    def relation_exponent(self) -> int:
        quiver = self.algebra.quiver
        exponents = [1]
        for i in quiver.vertices:
            h = quiver.loop_count(i)
            if h:
                exponents.append(2 * h - 2)
            for j in quiver.vertices:
                if i != j:
                    exponents.append(quiver.arrow_count(i, j) + quiver.arrow_count(j, i))
        return max(exponents)

    def probes(self, sources: Iterable[tuple[str, ...]], bound: int) -> Iterable[PolyVector]:
        for sequence in sorted(set(sources)):
            for exponents in product(range(bound + 1), repeat=self.n):
                yield PolyVector.monomial(sequence, exponents)

    def random_vector(self, faker, terms: int = 3, max_exponent: int = 3) -> PolyVector:
        """
        A random PolyVector with small integer coefficients.
        :param faker: a seeded faker.Faker instance
        :param terms: number of monomials
        :param max_exponent: largest exponent of a variable
        :return: PolyVector
        """
        sequences = self.weight.sequences()
        result = PolyVector(self.n)
        for _ in range(terms):
            sequence = faker.random_element(sequences)
            exponents = tuple(faker.random_int(0, max_exponent) for _ in range(self.n))
            coefficient = faker.random_int(-5, 5) or 1
            result = result + PolyVector.monomial(sequence, exponents, coefficient)
        return result

    def elements_equal(self, first: KLRElement, second: KLRElement, slack: int = 4) -> bool:
        """
        Compares two elements by their normal forms and by their action on the probes.
        :param first: KLRElement
        :param second: KLRElement
        :param slack: the slack of the probe exponent bound
        :return: result of the normal-form comparison
        """
        if first.weight != second.weight:
            raise ValueError(
                f"Cannot compare elements of weights {first.weight} and {second.weight}"
            )
        primary = first.terms == second.terms
        bound = self.probe_bound([first, second], slack)
        sources = first.sources() | second.sources()
        oracle = all(
            self.element_act(first, probe) == self.element_act(second, probe)
            for probe in self.probes(sources, bound)
        )
        if primary != oracle:
            logger.warning(
                "Normal forms and polynomial action disagree on %s versus %s", first, second
            )
        return primary

    def word_agrees(self, word: Sequence[Generator], vector: PolyVector) -> bool:
        """The raw word and its normal form act identically on ``vector``."""
        element = self.algebra.normal_form(word, self.weight)
        return self.act_word(word, vector) == self.element_act(element, vector)


def act(
    algebra: KLRAlgebra, generator: Generator, vector: PolyVector, weight: Weight
) -> PolyVector:
    return PolynomialRepresentation(algebra, weight).act(generator, vector)


def element_act(element: KLRElement, vector: PolyVector) -> PolyVector:
    return PolynomialRepresentation(element.algebra, element.weight).element_act(element, vector)


def elements_equal(first: KLRElement, second: KLRElement, slack: int = 4) -> bool:
    return PolynomialRepresentation(first.algebra, first.weight).elements_equal(
        first, second, slack
    )


def exponent_vectors(n: int, total: int) -> list[tuple[int, ...]]:
    """All vectors of n nonnegative integers summing to ``total``."""
    if n == 0:
        return [()] if total == 0 else []
    result = []
    for bars in combinations(range(total + n - 1), n - 1):
        edges = (-1,) + bars + (total + n - 1,)
        result.append(tuple(edges[k + 1] - edges[k] - 1 for k in range(n)))
    return result


def graded_component(
    algebra: KLRAlgebra,
    weight: Weight,
    source: Sequence[str],
    target: Sequence[str],
    degree: int,
) -> list[Key]:
    """
    The basis words x^r tau_w 1_source of degree ``degree`` with top sequence ``target``.
    :param algebra: KLRAlgebra
    :param weight: Weight of both sequences
    :param source: bottom sequence j
    :param target: top sequence i
    :param degree: int
    :return: list of basis keys; its length is the dimension
    """
    source, target = tuple(source), tuple(target)
    if Weight.from_sequence(source) != weight or Weight.from_sequence(target) != weight:
        raise ValueError(f"Sequences {source}, {target} do not have weight {weight}")
    n = weight.height
    result = []
    for arr in perms.all_permutations(n):
        if perms.target(arr, source) != target:
            continue
        crossing = algebra.degree_of_key(((0,) * n, arr, source))
        rest = degree - crossing
        if rest < 0 or rest % 2:
            continue
        result.extend((r, arr, source) for r in exponent_vectors(n, rest // 2))
    return sorted(result)


def algebra_dim(algebra: KLRAlgebra, weight: Weight) -> RationalFunction:
    """
    Dim R(nu) from the basis: sum over (w, i) of q^deg(tau_w 1_i), times 1/(1-q^2)^n.
    """
    n = weight.height
    crossings: dict[int, int] = {}
    for sequence in weight.sequences():
        for arr in perms.all_permutations(n):
            d = algebra.degree_of_key(((0,) * n, arr, sequence))
            crossings[d] = crossings.get(d, 0) + 1
    polynomial = RationalFunction(LaurentPolynomial(crossings))
    dots = RationalFunction(1, LaurentPolynomial({0: 1, 2: -1}))
    return polynomial * dots**n


def colour_blocks(sequence: Sequence[str]) -> list[list[int]]:
    blocks: dict[str, list[int]] = {}
    for position, colour in enumerate(sequence):
        blocks.setdefault(colour, []).append(position)
    return [blocks[colour] for colour in sorted(blocks)]


@lru_cache(maxsize=None)
def symmetric_ideal(sequence: tuple[str, ...]) -> tuple:
    """
    Lex Groebner basis h_k(x_(p_k), ..., x_(p_m)), k = 1..m, of the ideal generated by
    the symmetric polynomials without constant term in the dots of each colour block.
    :param sequence: colours of the strands
    :return: tuple of PolyElements of polynomial_ring(len(sequence))
    """
    poly_ring, gens = polynomial_ring(len(sequence))
    basis = []
    for block in colour_blocks(sequence):
        for k in range(1, len(block) + 1):
            h = poly_ring.zero
            for chosen in combinations_with_replacement([gens[p] for p in block[k - 1 :]], k):
                term = poly_ring.one
                for x in chosen:
                    term *= x
                h += term
            basis.append(h)
    return tuple(basis)


def artin_exponents(sequence: Sequence[str]) -> list[tuple[int, ...]]:
    """
    Exponents r with r_(p_k) < k on the k-th position p_k of every colour block: a
    basis of the polynomials over the symmetric polynomials of each colour.
    """
    n = len(sequence)
    ranges = [range(1)] * n
    for block in colour_blocks(sequence):
        for k, position in enumerate(block, start=1):
            ranges[position] = range(k)
    return [tuple(r) for r in product(*ranges)]


class GradedTruncation:
    """
    Graded dimensions of e_L R(nu) e_R.

    R(nu) is free over its center Z with basis the words x^a tau_w 1_i with Artin
    exponents a, so Dim e_L R e_R = Dim(e_L Rbar e_R) Dim Z with Rbar = R / Z^+ R.

    Methods:
    - coinvariant_dim: Dim(e_L Rbar e_R) as a Laurent polynomial.
    - graded_dim: Dim(e_L R e_R) as a rational function.
    - truncated_dim: Its expansion through a degree bound, by either method.
    """

    def __init__(self, algebra: KLRAlgebra, weight: Weight) -> None:
        self.algebra = algebra
        self.weight = weight
        self.n = weight.height
        self.ring, self.gens = polynomial_ring(self.n)
        self._reduced: dict[tuple[tuple[int, ...], tuple[str, ...]], dict] = {}

    def _reduce_monomial(self, r: tuple[int, ...], sequence: tuple[str, ...]) -> dict:
        cached = self._reduced.get((r, sequence))
        if cached is None:
            remainder = self.ring.from_dict({r: QQ(1)}).rem(list(symmetric_ideal(sequence)))
            cached = {m: to_fraction(c) for m, c in remainder.terms()}
            self._reduced[(r, sequence)] = cached
        return cached

    def reduce(self, terms: Terms) -> Terms:
        """Image of a combination of basis words in Rbar."""
        result: Terms = {}
        for (r, arr, src), value in terms.items():
            top = perms.target(arr, src)
            for dots, coefficient in self._reduce_monomial(r, top).items():
                key = (dots, arr, src)
                total = result.get(key, 0) + value * coefficient
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return result

    def generators(self) -> list[Key]:
        """Words x^a tau_w 1_i with Artin exponents a for the top sequence."""
        keys = []
        for sequence in self.weight.sequences():
            for arr in perms.all_permutations(self.n):
                top = perms.target(arr, sequence)
                keys.extend((a, arr, sequence) for a in artin_exponents(top))
        return keys

    def _by_degree(self, vectors: Iterable[Terms]) -> dict[int, list[Terms]]:
        grouped: dict[int, list[Terms]] = {}
        for vector in vectors:
            if vector:
                degree = self.algebra.degree_of_key(next(iter(vector)))
                grouped.setdefault(degree, []).append(vector)
        return grouped

    def _check_idempotent(self, element: KLRElement, name: str) -> None:
        if element.weight != self.weight:
            raise ValueError(f"{name} has weight {element.weight}, expected {self.weight}")
        if element * element != element:
            raise ValueError(f"{name} is not an idempotent")
        if element.degrees() - {0}:
            raise ValueError(f"{name} is not of degree 0")

    def coinvariant_dim(self, left: KLRElement, right: KLRElement) -> LaurentPolynomial:
        """
        Dim(e_L Rbar e_R): a basis of Rbar e_R per degree, multiplied by e_L, then ranked.
        """
        self._check_idempotent(left, "e_L")
        self._check_idempotent(right, "e_R")
        multiply = self.algebra.multiply_terms
        cut_right = [
            self.reduce(multiply({key: Fraction(1)}, right.terms)) for key in self.generators()
        ]
        dimensions: dict[int, int] = {}
        for degree, vectors in sorted(self._by_degree(cut_right).items()):
            basis = independent_subset(vectors)
            images = [self.reduce(multiply(left.terms, vector)) for vector in basis]
            dimension = rank(images)
            if dimension:
                dimensions[degree] = dimension
            logger.debug("Degree %s of e_L Rbar e_R has dimension %s", degree, dimension)
        return LaurentPolynomial(dimensions)

    def graded_dim(self, left: KLRElement, right: KLRElement) -> RationalFunction:
        return RationalFunction(self.coinvariant_dim(left, right)) * center_dim(
            *self.weight.multiplicities()
        )

    def direct_dim(self, left: KLRElement, right: KLRElement, bound: int) -> TruncatedSeries:
        """
        Rank per degree of e_L R e_R built as the span of e_L x^a tau_w e_R together with
        every elementary symmetric polynomial of a colour times lower pieces.
        """
        self._check_idempotent(left, "e_L")
        self._check_idempotent(right, "e_R")
        multiply = self.algebra.multiply_terms
        generated = self._by_degree(
            multiply(multiply(left.terms, {key: Fraction(1)}), right.terms)
            for key in self.generators()
        )
        if not generated:
            return TruncatedSeries({}, bound)
        central = [
            (colour, k) for colour, m in self.weight.items() for k in range(1, m + 1)
        ]
        spans: dict[int, list[Terms]] = {}
        dimensions: dict[int, int] = {}
        for degree in range(min(generated), bound + 1):
            vectors = list(generated.get(degree, []))
            for colour, k in central:
                for vector in spans.get(degree - 2 * k, []):
                    vectors.append(self.central_multiply(vector, colour, k))
            spans[degree] = independent_subset(vectors)
            if spans[degree]:
                dimensions[degree] = len(spans[degree])
        return TruncatedSeries(dimensions, bound)

    def central_multiply(self, terms: Terms, colour: str, k: int) -> Terms:
        """Multiplication by the k-th elementary symmetric polynomial in the dots of ``colour``."""
        result: Terms = {}
        for (r, arr, src), value in terms.items():
            top = perms.target(arr, src)
            positions = [p for p, c in enumerate(top) if c == colour]
            for chosen in combinations(positions, k):
                dots = tuple(e + (1 if p in chosen else 0) for p, e in enumerate(r))
                key = (dots, arr, src)
                total = result.get(key, 0) + value
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return result

    def truncated_dim(
        self,
        left: KLRElement,
        right: KLRElement,
        bound: int,
        method: str = DimensionMethod.COINVARIANT,
    ) -> TruncatedSeries:
        """
        Dim(e_L R(nu) e_R) through q^bound.
        :param left: idempotent e_L
        :param right: idempotent e_R
        :param bound: truncation D
        :param method: DimensionMethod value
        :return: TruncatedSeries
        """
        if method == DimensionMethod.DIRECT:
            return self.direct_dim(left, right, bound)
        if method == DimensionMethod.COINVARIANT:
            return self.graded_dim(left, right).expand(bound)
        raise ValueError(f"Unknown dimension method {method!r}")


def truncated_dim(
    left: KLRElement,
    right: KLRElement,
    bound: int,
    method: str = DimensionMethod.COINVARIANT,
) -> TruncatedSeries:
    return GradedTruncation(left.algebra, left.weight).truncated_dim(left, right, bound, method)


def graded_dim(left: KLRElement, right: KLRElement) -> RationalFunction:
    return GradedTruncation(left.algebra, left.weight).graded_dim(left, right)
