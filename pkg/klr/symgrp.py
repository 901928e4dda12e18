"""
Partitions, tableaux and Specht modules of the symmetric groups over QQ.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as orderings
from itertools import product
from math import factorial
from typing import Callable, Mapping, Sequence

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics.partitions import IntegerPartition
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions

from klr import linalg
from klr import permutations as perms

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def validate_partition(shape: Sequence[int]) -> Partition:
    shape = tuple(int(part) for part in shape)
    if any(part <= 0 for part in shape):
        raise ValueError(f"Parts of a partition must be positive, got {shape}")
    if any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
        raise ValueError(f"Parts of a partition must weakly decrease, got {shape}")
    return shape


def partitions_of(n: int) -> list[Partition]:
    """
    All partitions of n in decreasing lexicographic order.
    :param n: int >= 0
    :return: list of Partition
    """
    if n < 0:
        raise ValueError(f"partitions_of needs n >= 0, got {n}")
    result = []
    for multiplicities in partitions(n):
        parts = sorted(
            (part for part, count in multiplicities.items() for _ in range(count)),
            reverse=True,
        )
        result.append(tuple(parts))
    return sorted(result, reverse=True)


def transpose(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(IntegerPartition(list(shape)).conjugate)


def compositions_of(n: int, parts: int | None = None) -> list[tuple[int, ...]]:
    """
    Compositions of n into positive parts, optionally with a fixed number of parts.
    """
    if n == 0:
        return [()] if not parts else []
    result = []
    for cuts in product((False, True), repeat=n - 1):
        composition, size = [], 1
        for cut in cuts:
            if cut:
                composition.append(size)
                size = 1
            else:
                size += 1
        composition.append(size)
        if parts is None or len(composition) == parts:
            result.append(tuple(composition))
    return sorted(result)


def _check_composition(shape: Partition, composition: Sequence[int]) -> None:
    if any(c <= 0 for c in composition):
        raise ValueError(f"Composition entries must be positive, got {tuple(composition)}")
    if sum(composition) != sum(shape):
        raise ValueError(
            f"Composition {tuple(composition)} does not have the size {sum(shape)} of {shape}"
        )


@lru_cache(maxsize=None)
def _horizontal_strip_removals(shape: Partition, size: int) -> tuple[Partition, ...]:
    """Partitions mu with shape/mu a horizontal strip of ``size`` cells."""
    ranges = [
        range(shape[k + 1] if k + 1 < len(shape) else 0, shape[k] + 1) for k in range(len(shape))
    ]
    result = []
    for inner in product(*ranges):
        if sum(shape) - sum(inner) == size:
            result.append(tuple(part for part in inner if part))
    return tuple(result)


@lru_cache(maxsize=None)
def _kostka(shape: Partition, composition: tuple[int, ...]) -> int:
    if not composition:
        return 1 if not shape else 0
    return sum(
        _kostka(inner, composition[:-1])
        for inner in _horizontal_strip_removals(shape, composition[-1])
    )


def kostka(shape: Sequence[int], composition: Sequence[int]) -> int:
    """
    Number of semistandard tableaux of ``shape`` with content ``composition``,
    counted by peeling the largest letter off as a horizontal strip.
    :param shape: Partition
    :param composition: positive entries summing to |shape|
    :return: int
    """
    shape = validate_partition(shape)
    _check_composition(shape, composition)
    return _kostka(shape, tuple(composition))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """Standard Young tableaux of ``shape``, rows as tuples, in a fixed order."""
    shape = validate_partition(shape)
    n = sum(shape)
    if n == 0:
        return ((),)
    result = []
    for row, length in enumerate(shape):
        below = shape[row + 1] if row + 1 < len(shape) else 0
        if length > below:
            smaller = tuple(p - 1 if k == row else p for k, p in enumerate(shape))
            smaller = tuple(p for p in smaller if p)
            for tableau in standard_tableaux(smaller):
                rows = [list(r) for r in tableau] + [[]] * (len(shape) - len(tableau))
                rows[row] = rows[row] + [n]
                result.append(tuple(tuple(r) for r in rows))
    return tuple(sorted(result))


def _tabloid(tableau: Tableau) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(row)) for row in tableau)


def _columns(tableau: Tableau) -> list[list[int]]:
    width = len(tableau[0]) if tableau else 0
    return [[row[c] for row in tableau if len(row) > c] for c in range(width)]


def polytabloid(tableau: Tableau) -> dict:
    """
    e_T = sum over the column group of T of sign(sigma) {sigma T}.
    :param tableau: Tableau
    :return: map tabloid -> integer coefficient
    """
    columns = _columns(tableau)
    result: dict = {}
    for arrangement in product(*(list(orderings(range(len(c)))) for c in columns)):
        mapping, sign = {}, 1
        for column, order in zip(columns, arrangement):
            sign *= SymPermutation(list(order)).signature()
            for position, source in enumerate(order):
                mapping[column[position]] = column[source]
        image = _tabloid(tuple(tuple(mapping[e] for e in row) for row in tableau))
        result[image] = result.get(image, 0) + sign
    return {key: Fraction(value) for key, value in result.items() if value}


def _swap_entries(tableau: Tableau, k: int) -> Tableau:
    swap = {k: k + 1, k + 1: k}
    return tuple(tuple(swap.get(e, e) for e in row) for row in tableau)


@dataclass
class GradedOperatorModule:
    """
    A finite-dimensional graded vector space with one matrix per generator.

    Attributes:
    - degrees (list[int]): Degree of every basis vector.
    - matrices (dict): Map generator label -> DomainMatrix acting on columns.
    - generator_degrees (dict): Map generator label -> degree of that generator.
    - relations (list): Pairs (name, check) run on construction; a failing check
      raises ValueError.
    """

    degrees: list[int]
    matrices: dict
    generator_degrees: dict
    relations: list[tuple[str, Callable[["GradedOperatorModule"], bool]]] = field(
        default_factory=list
    )

    def __post_init__(self) -> None:
        size = len(self.degrees)
        for label, matrix in self.matrices.items():
            if matrix.shape != (size, size):
                raise ValueError(f"Matrix of {label} has shape {matrix.shape}, expected {size}")
            shift = self.generator_degrees.get(label, 0)
            for (i, j), value in linalg.entries(matrix).items():
                if self.degrees[i] != self.degrees[j] + shift:
                    raise ValueError(
                        f"Generator {label} does not shift degree by {shift} at entry ({i}, {j})"
                    )
        for name, check in self.relations:
            if not check(self):
                raise ValueError(f"Relation {name} does not hold in the module")

    @property
    def dimension(self) -> int:
        return len(self.degrees)

    def graded_dimension(self) -> dict[int, int]:
        result: dict[int, int] = {}
        for degree in self.degrees:
            result[degree] = result.get(degree, 0) + 1
        return result

    def identity(self) -> DomainMatrix:
        return linalg.identity(self.dimension)

    def zero(self) -> DomainMatrix:
        return linalg.zeros(self.dimension, self.dimension)

    def matrix(self, label) -> DomainMatrix:
        return self.matrices[label]

    def graded_rank(self, matrix: DomainMatrix) -> dict[int, int]:
        """Rank of a degree-0 operator on each homogeneous piece."""
        result = {}
        for degree in sorted(set(self.degrees)):
            columns = [k for k, d in enumerate(self.degrees) if d == degree]
            value = linalg.matrix_rank(linalg.restrict(matrix, range(self.dimension), columns))
            if value:
                result[degree] = value
        return result

    def subquotient(self, projector: DomainMatrix, labels: Sequence) -> "GradedOperatorModule":
        """
        The image of a degree-0 idempotent ``projector`` commuting with the generators
        ``labels``, with the restricted actions of those generators.
        """
        columns = linalg.independent_indices(
            [linalg.column(projector, j) for j in range(self.dimension)]
        )
        basis = [linalg.column(projector, j) for j in columns]
        degrees = [self.degrees[j] for j in columns]
        matrices = {}
        for label in labels:
            images = []
            for vector in basis:
                image = self.matrices[label] * linalg.matrix_from_columns(
                    [[vector.get(i, 0) for i in range(self.dimension)]], self.dimension
                )
                images.append(linalg.column(image, 0))
            matrices[label] = linalg.matrix_from_columns(
                linalg.express(basis, images), len(basis)
            )
        return GradedOperatorModule(
            degrees,
            matrices,
            {label: self.generator_degrees.get(label, 0) for label in labels},
        )


def word_matrix(module: GradedOperatorModule, word: Sequence[int], offset: int = 0) -> DomainMatrix:
    """Matrix of s_(w1 + offset) ... s_(wl + offset) on a Specht-type module."""
    result = module.identity()
    for letter in word:
        result = result * module.matrix(f"s{letter + offset}")
    return result


def coxeter_relations(n: int) -> list[tuple[str, Callable[[GradedOperatorModule], bool]]]:
    def squares(module):
        return all(
            linalg.matrices_equal(
                module.matrix(f"s{k}") * module.matrix(f"s{k}"), module.identity()
            )
            for k in range(1, n)
        )

    def braids(module):
        return all(
            linalg.matrices_equal(
                word_matrix(module, (k, k + 1, k)), word_matrix(module, (k + 1, k, k + 1))
            )
            for k in range(1, n - 1)
        )

    def commutations(module):
        return all(
            linalg.matrices_equal(word_matrix(module, (k, ell)), word_matrix(module, (ell, k)))
            for k in range(1, n)
            for ell in range(k + 2, n)
        )

    return [("s_k^2 = 1", squares), ("braid", braids), ("far commutation", commutations)]


@lru_cache(maxsize=None)
def specht_module(shape: Partition) -> GradedOperatorModule:
    """
    S^lambda on the standard polytabloids; s_k e_T = e_(s_k T) rewritten in that basis.
    :param shape: Partition of n >= 1
    :return: GradedOperatorModule concentrated in degree 0 with generators s1..s(n-1)
    """
    shape = validate_partition(shape)
    n = sum(shape)
    tableaux = standard_tableaux(shape)
    basis = [polytabloid(t) for t in tableaux]
    matrices = {}
    for k in range(1, n):
        images = [polytabloid(_swap_entries(t, k)) for t in tableaux]
        matrices[f"s{k}"] = linalg.matrix_from_columns(linalg.express(basis, images), len(basis))
    logger.debug("Specht module %s has dimension %s", shape, len(basis))
    return GradedOperatorModule(
        [0] * len(basis),
        matrices,
        {label: 0 for label in matrices},
        coxeter_relations(n),
    )


def group_sum(module: GradedOperatorModule, start: int, size: int) -> DomainMatrix:
    """
    Sum of all elements of the symmetric group on letters start+1, ..., start+size,
    via sum_(S_m) = (1 + s_(m-1) + s_(m-2)s_(m-1) + ...) sum_(S_(m-1)).
    """
    result = module.identity()
    for m in range(2, size + 1):
        cosets = module.identity()
        chain = module.identity()
        for letter in range(m - 1, 0, -1):
            chain = module.matrix(f"s{letter + start}") * chain
            cosets = cosets + chain
        result = cosets * result
    return result


def young_symmetrizer(module: GradedOperatorModule, composition: Sequence[int]) -> DomainMatrix:
    """Product of the averages over the blocks of a Young subgroup."""
    result = module.identity()
    start = 0
    for size in composition:
        average = linalg.scaled(group_sum(module, start, size), Fraction(1, factorial(size)))
        result = result * average
        start += size
    return result


def idempotent_rank(shape: Sequence[int], composition: Sequence[int]) -> int:
    """
    dim(e_c S^lambda) for the Young symmetrizer e_c of a composition.
    :param shape: Partition
    :param composition: positive entries summing to |shape|
    :return: int
    """
    shape = validate_partition(shape)
    _check_composition(shape, composition)
    module = specht_module(shape)
    return linalg.matrix_rank(young_symmetrizer(module, composition))


def specht_dimension(shape: Sequence[int]) -> int:
    return len(standard_tableaux(validate_partition(shape)))


def kostka_matrix(n: int) -> list[list[int]]:
    """Rows lambda, columns mu, entries dim(e_lambda S^mu), partitions in decreasing lex order."""
    shapes = partitions_of(n)
    return [[idempotent_rank(mu, lam) for mu in shapes] for lam in shapes]


def is_unitriangular(matrix: Sequence[Sequence[int]]) -> bool:
    """Ones on the diagonal and zeros where the row partition is lex greater than the column."""
    size = len(matrix)
    return all(matrix[k][k] == 1 for k in range(size)) and all(
        matrix[row][col] == 0 for col in range(size) for row in range(col)
    )


def transpose_involution(expansion: Mapping[Partition, int]) -> dict[Partition, int]:
    return {transpose(tuple(shape)): value for shape, value in expansion.items()}


@dataclass(frozen=True)
class SkewShape:
    """
    The skew diagram outer / inner.

    Attributes:
    - outer (Partition): The bigger shape.
    - inner (Partition): The removed shape, contained in ``outer``.
    """

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        validate_partition(self.outer)
        validate_partition(self.inner)
        if len(self.inner) > len(self.outer) or any(
            part > self.outer[k] for k, part in enumerate(self.inner)
        ):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        return [
            (row, col)
            for row, length in enumerate(self.outer)
            for col in range(self.inner[row] if row < len(self.inner) else 0, length)
        ]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_horizontal_strip(self) -> bool:
        columns = [col for _, col in self.cells()]
        return len(columns) == len(set(columns))

    def standard_count(self) -> int:
        return _skew_standard_count(self.outer, self.inner)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@lru_cache(maxsize=None)
def _skew_standard_count(outer: Partition, inner: Partition) -> int:
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for row, length in enumerate(outer):
        below = outer[row + 1] if row + 1 < len(outer) else 0
        floor = inner[row] if row < len(inner) else 0
        if length > below and length > floor:
            smaller = tuple(p for p in (p - 1 if k == row else p for k, p in enumerate(outer)) if p)
            total += _skew_standard_count(smaller, inner)
    return total


def _sub_shapes(shape: Partition, size: int) -> list[Partition]:
    ranges = [range(part + 1) for part in shape]
    result = set()
    for candidate in product(*ranges):
        if sum(candidate) == size and all(
            candidate[k] >= candidate[k + 1] for k in range(len(candidate) - 1)
        ):
            result.add(tuple(p for p in candidate if p))
    return sorted(result, reverse=True)


def skew_branching(shape: Sequence[int], composition: Sequence[int]) -> list[tuple[SkewShape, ...]]:
    """
    Chains () < lambda(1) < ... < lambda(l) = lambda with |lambda(j) / lambda(j-1)| = b_j,
    as tuples of skew layers.
    :param shape: Partition
    :param composition: positive entries summing to |shape|
    :return: list of chains
    """
    shape = validate_partition(shape)
    _check_composition(shape, composition)

    def chains(outer: Partition, sizes: tuple[int, ...]) -> list[tuple[SkewShape, ...]]:
        if not sizes:
            return [()] if not outer else []
        result = []
        for inner in _sub_shapes(outer, sum(outer) - sizes[-1]):
            for chain in chains(inner, sizes[:-1]):
                result.append(chain + (SkewShape(outer, inner),))
        return result

    return chains(shape, tuple(composition))


def skew_trivial_multiplicity(skew: SkewShape) -> int:
    """1 when the skew diagram has no two cells in one column, 0 otherwise."""
    return 1 if skew.is_horizontal_strip() else 0


def character_value(module: GradedOperatorModule, word: Sequence[int], offset: int = 0) -> Fraction:
    return linalg.trace(word_matrix(module, word, offset))


def skew_trivial_multiplicity_oracle(skew: SkewShape) -> int:
    """
    <S^inner x triv, Res S^outer> computed as an average of character products over
    the symmetric group on the inner cells.
    """
    outer_module = specht_module(skew.outer)
    k, m = sum(skew.inner), skew.size
    projector = linalg.scaled(group_sum(outer_module, k, m), Fraction(1, factorial(m)))
    if k == 0:
        return int(linalg.trace(projector))
    inner_module = specht_module(skew.inner)
    total = Fraction(0)
    for arr in perms.all_permutations(k):
        word = perms.reduced_word(arr)
        restricted = linalg.trace(word_matrix(outer_module, word) * projector)
        total += restricted * character_value(inner_module, word)
    return int(total / factorial(k))
