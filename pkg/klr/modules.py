"""
Finite-dimensional graded R(nu)-modules given by generator matrices, and their characters.
"""

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from klr import linalg
from klr import permutations as perms
from klr.algebra import KLRAlgebra, KLRElement, ProjectiveLabel
from klr.polyrep import PolynomialRepresentation, artin_exponents, symmetric_ideal
from klr.qseries import LaurentPolynomial
from klr.quiver import Weight
from klr.symgrp import GradedOperatorModule, specht_module, validate_partition

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


def idempotent_label(sequence: Sequence[str]) -> str:
    return f"e({','.join(sequence)})"


def crossing_label(k: int, sequence: Sequence[str]) -> str:
    return f"t{k}@{','.join(sequence)}"


class KLRModule:
    """
    A graded R(nu)-module given by matrices of 1_i, x_k and tau_k 1_i.

    The KLR relations are checked as matrix identities on construction; a module
    violating one of them raises ValueError.

    Attributes:
    - algebra (KLRAlgebra): The algebra acting.
    - weight (Weight): nu.
    - operators (GradedOperatorModule): Degrees and generator matrices.
    """

    def __init__(
        self,
        algebra: KLRAlgebra,
        weight: Weight,
        degrees: list[int],
        idempotents: dict[tuple[str, ...], DomainMatrix],
        dots: dict[int, DomainMatrix],
        crossings: dict[tuple[int, tuple[str, ...]], DomainMatrix],
    ) -> None:
        self.algebra = algebra
        self.weight = weight
        n = weight.height
        size = len(degrees)
        cartan = algebra.cartan

        matrices, generator_degrees = {}, {}
        for sequence in weight.sequences():
            label = idempotent_label(sequence)
            matrices[label] = idempotents.get(sequence, linalg.zeros(size, size))
            generator_degrees[label] = 0
        for k in range(1, n + 1):
            matrices[f"x{k}"] = dots.get(k, linalg.zeros(size, size))
            generator_degrees[f"x{k}"] = 2
        for k in range(1, n):
            for sequence in weight.sequences():
                label = crossing_label(k, sequence)
                matrices[label] = crossings.get((k, sequence), linalg.zeros(size, size))
                generator_degrees[label] = cartan.crossing_degree(sequence[k - 1], sequence[k])
        self.operators = GradedOperatorModule(
            list(degrees), matrices, generator_degrees, self._relations()
        )

    @property
    def degrees(self) -> list[int]:
        return self.operators.degrees

    @property
    def dimension(self) -> int:
        return self.operators.dimension

    def idempotent(self, sequence: Sequence[str]) -> DomainMatrix:
        return self.operators.matrix(idempotent_label(tuple(sequence)))

    def dot(self, k: int) -> DomainMatrix:
        return self.operators.matrix(f"x{k}")

    def crossing(self, k: int, sequence: Sequence[str] | None = None) -> DomainMatrix:
        if sequence is not None:
            return self.operators.matrix(crossing_label(k, tuple(sequence)))
        total = self.operators.zero()
        for seq in self.weight.sequences():
            total = total + self.operators.matrix(crossing_label(k, seq))
        return total

    def polynomial_matrix(self, polynomial: dict[tuple[int, ...], Fraction]) -> DomainMatrix:
        return _polynomial_on(self.operators, polynomial)

    def element_matrix(self, element: KLRElement) -> DomainMatrix:
        """Matrix of sum c x^r tau_w 1_i acting on the module."""
        if element.weight != self.weight:
            raise ValueError(
                f"Element of weight {element.weight} cannot act on weight {self.weight}"
            )
        result = self.operators.zero()
        for (r, arr, src), coefficient in element.terms.items():
            term = self.idempotent(src)
            for letter in reversed(perms.reduced_word(arr)):
                term = self.crossing(letter) * term
            term = self.polynomial_matrix({r: Fraction(1)}) * term
            result = result + linalg.scaled(term, coefficient)
        return result

    def _relations(self) -> list:
        algebra, weight = self.algebra, self.weight
        n = weight.height
        sequences = weight.sequences()
        equal = linalg.matrices_equal

        def idempotents(module):
            total = module.zero()
            for s in sequences:
                total = total + module.matrix(idempotent_label(s))
            if not equal(total, module.identity()):
                return False
            return all(
                equal(
                    module.matrix(idempotent_label(s)) * module.matrix(idempotent_label(t)),
                    module.matrix(idempotent_label(s)) if s == t else module.zero(),
                )
                for s in sequences
                for t in sequences
            )

        def dots(module):
            for k in range(1, n + 1):
                x = module.matrix(f"x{k}")
                for s in sequences:
                    e = module.matrix(idempotent_label(s))
                    if not equal(x * e, e * x):
                        return False
                for ell in range(k + 1, n + 1):
                    y = module.matrix(f"x{ell}")
                    if not equal(x * y, y * x):
                        return False
            return True

        def crossings(module):
            for k in range(1, n):
                for s in sequences:
                    t = module.matrix(crossing_label(k, s))
                    e = module.matrix(idempotent_label(s))
                    swapped = module.matrix(idempotent_label(perms.apply_letter(s, k)))
                    if not (equal(t * e, t) and equal(swapped * t, t)):
                        return False
            return True

        def dot_slides(module):
            for k in range(1, n):
                for s in sequences:
                    t = module.matrix(crossing_label(k, s))
                    e = module.matrix(idempotent_label(s))
                    plus = s[k - 1] == s[k] and algebra.cartan.is_plus(s[k - 1])
                    for ell in range(1, n + 1):
                        moved = {k: k + 1, k + 1: k}.get(ell, ell)
                        difference = t * module.matrix(f"x{ell}") - module.matrix(f"x{moved}") * t
                        expected = module.zero()
                        if plus and ell == k:
                            expected = e
                        elif plus and ell == k + 1:
                            expected = linalg.scaled(e, -1)
                        if not equal(difference, expected):
                            return False
            return True

        def squares(module):
            for k in range(1, n):
                for s in sequences:
                    t = module.matrix(crossing_label(k, s))
                    back = module.matrix(crossing_label(k, perms.apply_letter(s, k)))
                    polynomial = algebra.square_polynomial(s[k - 1], s[k], k, n)
                    identity = module.matrix(idempotent_label(s))
                    expected = _polynomial_on(module, polynomial) * identity
                    if not equal(back * t, expected):
                        return False
            return True

        def braids(module):
            for k in range(1, n - 1):
                for s in sequences:
                    first = self._word_on(module, (k, k + 1, k), s)
                    second = self._word_on(module, (k + 1, k, k + 1), s)
                    polynomial = algebra.braid_polynomial(tuple(s[k - 1 : k + 2]), k, n)
                    identity = module.matrix(idempotent_label(s))
                    expected = _polynomial_on(module, polynomial) * identity
                    if not equal(first - second, expected):
                        return False
            return True

        def commutations(module):
            for k in range(1, n):
                for ell in range(k + 2, n):
                    for s in sequences:
                        if not equal(
                            self._word_on(module, (k, ell), s), self._word_on(module, (ell, k), s)
                        ):
                            return False
            return True

        return [
            ("idempotents", idempotents),
            ("dots commute", dots),
            ("crossings move idempotents", crossings),
            ("dot slides", dot_slides),
            ("quadratic relation", squares),
            ("braid relation", braids),
            ("far commutation", commutations),
        ]

    @staticmethod
    def _word_on(
        module: GradedOperatorModule, letters: Sequence[int], sequence: tuple[str, ...]
    ) -> DomainMatrix:
        """tau_(l1) ... tau_(lm) 1_sequence, rightmost letter first."""
        current = sequence
        result = module.matrix(idempotent_label(sequence))
        for letter in reversed(letters):
            result = module.matrix(crossing_label(letter, current)) * result
            current = perms.apply_letter(current, letter)
        return result

    def shift(self, m: int) -> "KLRModule":
        """M{m}: every degree raised by m."""
        return self._rebuild(
            [d + m for d in self.degrees], lambda label: self.operators.matrix(label)
        )

    def direct_sum(self, other: "KLRModule") -> "KLRModule":
        if other.weight != self.weight or other.algebra is not self.algebra:
            raise ValueError("Direct sums need modules over the same R(nu)")
        size = self.dimension

        def block(label):
            first = linalg.entries(self.operators.matrix(label))
            second = linalg.entries(other.operators.matrix(label))
            rows: dict[int, dict[int, Fraction]] = {}
            for (i, j), value in first.items():
                rows.setdefault(i, {})[j] = value
            for (i, j), value in second.items():
                rows.setdefault(i + size, {})[j + size] = value
            total = size + other.dimension
            columns = [[rows.get(i, {}).get(j, 0) for i in range(total)] for j in range(total)]
            return linalg.matrix_from_columns(columns, total)

        return self._rebuild(self.degrees + other.degrees, block)

    def _rebuild(self, degrees: list[int], matrix_of) -> "KLRModule":
        n = self.weight.height
        sequences = self.weight.sequences()
        return KLRModule(
            self.algebra,
            self.weight,
            degrees,
            {s: matrix_of(idempotent_label(s)) for s in sequences},
            {k: matrix_of(f"x{k}") for k in range(1, n + 1)},
            {(k, s): matrix_of(crossing_label(k, s)) for k in range(1, n) for s in sequences},
        )


def _polynomial_on(module: GradedOperatorModule, polynomial: dict) -> DomainMatrix:
    """Evaluates a polynomial in the dots, given as exponent vector -> coefficient."""
    result = module.zero()
    for exponent, coefficient in polynomial.items():
        term = module.identity()
        for k, power in enumerate(exponent, start=1):
            for _ in range(power):
                term = term * module.matrix(f"x{k}")
        result = result + linalg.scaled(term, coefficient)
    return result


def specht_klr_module(algebra: KLRAlgebra, i: str, shape: Sequence[int]) -> KLRModule:
    """
    S^lambda as an R(ni)-module for a vertex with one loop: tau_k acts as s_k and
    every dot acts by zero.
    :param algebra: KLRAlgebra
    :param i: vertex of I0
    :param shape: Partition of n
    :return: KLRModule concentrated in degree 0
    """
    if not algebra.cartan.is_zero(i):
        raise ValueError(f"Specht modules need a vertex with one loop, {i!r} is not in I0")
    shape = validate_partition(shape)
    n = sum(shape)
    specht = specht_module(shape)
    sequence = (i,) * n
    return KLRModule(
        algebra,
        Weight({i: n}),
        [0] * specht.dimension,
        {sequence: specht.identity()},
        {},
        {(k, sequence): specht.matrix(f"s{k}") for k in range(1, n)},
    )


def nil_hecke_module(algebra: KLRAlgebra, i: str, n: int) -> KLRModule:
    """
    V(i^n) for a loopless vertex: the coinvariant algebra of the divided-difference
    action, shifted by -n(n-1)/2 so that its graded dimension is [n]!.
    :param algebra: KLRAlgebra
    :param i: vertex of I+
    :param n: int >= 1
    :return: KLRModule
    """
    if not algebra.cartan.is_plus(i):
        raise ValueError(f"Nil-Hecke modules need a loopless vertex, {i!r} is not in I+")
    if n < 1:
        raise ValueError(f"nil_hecke_module needs n >= 1, got {n}")
    weight = Weight({i: n})
    sequence = (i,) * n
    representation = PolynomialRepresentation(algebra, weight)
    ideal = list(symmetric_ideal(sequence))
    basis = artin_exponents(sequence)
    index = {exponent: k for k, exponent in enumerate(basis)}
    shift = n * (n - 1) // 2

    def operator(transform) -> DomainMatrix:
        columns = []
        for exponent in basis:
            image = transform(representation.ring.from_dict({exponent: QQ(1)})).rem(ideal)
            column = [Fraction(0)] * len(basis)
            for monomial, coefficient in image.terms():
                column[index[monomial]] = linalg.to_fraction(coefficient)
            columns.append(column)
        return linalg.matrix_from_columns(columns, len(basis))

    gens = representation.gens
    return KLRModule(
        algebra,
        weight,
        [2 * sum(exponent) - shift for exponent in basis],
        {sequence: linalg.identity(len(basis))},
        {k: operator(lambda f, k=k: gens[k - 1] * f) for k in range(1, n + 1)},
        {
            (k, sequence): operator(lambda f, k=k: representation.divided_difference(f, k))
            for k in range(1, n)
        },
    )


def trivial_module(algebra: KLRAlgebra, i: str, n: int) -> KLRModule:
    """The one-dimensional V(i^n) for a vertex with two or more loops."""
    if not algebra.cartan.is_minus(i):
        raise ValueError(f"trivial_module needs a vertex of I-, {i!r} is not")
    sequence = (i,) * n
    return KLRModule(algebra, Weight({i: n}), [0], {sequence: linalg.identity(1)}, {}, {})


def one_dimensional_module(algebra: KLRAlgebra, sequence: Sequence[str]) -> KLRModule:
    """
    L(i) = C 1_i with dots and crossings acting by zero; a module when no two
    neighbouring letters of ``sequence`` can be swapped by a crossing of nonzero square.
    """
    sequence = tuple(sequence)
    return KLRModule(
        algebra, Weight.from_sequence(sequence), [0], {sequence: linalg.identity(1)}, {}, {}
    )


def underlined_sequences(algebra: KLRAlgebra, weight: Weight) -> list[tuple[tuple[str, int], ...]]:
    """
    Sequences of blocks (i, m) of total weight ``weight`` where m > 1 only for I0 vertices.
    """
    counts = dict(weight.items())
    result = []

    def extend(prefix: tuple, remaining: dict) -> None:
        if not any(remaining.values()):
            result.append(prefix)
            return
        for vertex in sorted(remaining):
            available = remaining[vertex]
            if not available:
                continue
            sizes = range(1, available + 1) if algebra.cartan.is_zero(vertex) else range(1, 2)
            for m in sizes:
                remaining[vertex] -= m
                extend(prefix + ((vertex, m),), remaining)
                remaining[vertex] += m

    extend((), counts)
    return sorted(result)


class CharacterVector:
    """
    A finitely supported map from underlined sequences to Laurent polynomials.
    """

    __slots__ = ("_values",)

    def __init__(self, values: dict | None = None) -> None:
        self._values = {key: value for key, value in (values or {}).items() if not value.is_zero()}

    @property
    def values(self) -> dict:
        return dict(self._values)

    def __getitem__(self, key) -> LaurentPolynomial:
        return self._values.get(tuple(key), LaurentPolynomial())

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        values = dict(self._values)
        for key, value in other._values.items():
            values[key] = values[key] + value if key in values else value
        return CharacterVector(values)

    def shift(self, m: int) -> "CharacterVector":
        return CharacterVector({key: value.shift(m) for key, value in self._values.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CharacterVector) and self._values == other._values

    __hash__ = None

    def to_json(self) -> dict:
        return {render_underlined(key): str(value) for key, value in sorted(self._values.items())}

    def __str__(self) -> str:
        if not self._values:
            return "0"
        parts = []
        for key, value in sorted(self._values.items()):
            coefficient = str(value)
            term = render_underlined(key)
            parts.append(term if coefficient == "1" else f"({coefficient}) {term}")
        return " + ".join(parts)


def render_underlined(blocks: Iterable[tuple[str, int]]) -> str:
    return " ".join(f"e({vertex},{m})" for vertex, m in blocks)


def character(module: KLRModule) -> CharacterVector:
    """
    Ch M = sum over underlined sequences of Dim(1_i M), 1_i being the tensor product of
    the symmetrizers of its blocks.
    :param module: KLRModule
    :return: CharacterVector
    """
    values = {}
    for blocks in underlined_sequences(module.algebra, module.weight):
        idempotent = ProjectiveLabel(blocks).idempotent(module.algebra)
        ranks = module.operators.graded_rank(module.element_matrix(idempotent))
        values[blocks] = LaurentPolynomial(ranks)
    return CharacterVector(values)


def restriction_projector(module: KLRModule, i: str, n: int) -> DomainMatrix:
    if n < 0 or n > module.weight[i]:
        raise ValueError(f"Cannot cut {n} strands of colour {i!r} from weight {module.weight}")
    projector = module.operators.zero()
    for sequence in module.weight.sequences():
        if n == 0 or sequence[-n:] == (i,) * n:
            projector = projector + module.idempotent(sequence)
    return projector


def delta_restrict(module: KLRModule, i: str, n: int) -> GradedOperatorModule:
    """
    (1_(nu - ni) x 1_(ni)) M with the actions of R(nu - ni) x R(ni) restricted to it.
    :param module: KLRModule
    :param i: vertex
    :param n: 0 <= n <= nu_i
    :return: GradedOperatorModule
    """
    projector = restriction_projector(module, i, n)
    height = module.weight.height
    junction = height - n
    kept = [s for s in module.weight.sequences() if n == 0 or s[-n:] == (i,) * n]
    labels = [idempotent_label(s) for s in kept]
    labels += [f"x{k}" for k in range(1, height + 1)]
    labels += [crossing_label(k, s) for k in range(1, height) if k != junction for s in kept]
    return module.operators.subquotient(projector, labels)


def epsilon(module: KLRModule, i: str) -> int:
    """max n with Delta_(i^n) M != 0."""
    for n in range(module.weight[i], -1, -1):
        if linalg.matrix_rank(restriction_projector(module, i, n)):
            return n
    return 0
