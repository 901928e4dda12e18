"""
Exact linear algebra over QQ on sparse vectors.

A vector is a mapping from hashable keys (basis words, tabloids, ...) to Fractions.
Every rank and solve goes through sympy's DomainMatrix in sparse format.
"""

import logging
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Vector = Mapping[Hashable, Fraction]


def to_qq(value) -> "QQ":
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(value)


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _index_keys(vectors: Sequence[Vector]) -> dict[Hashable, int]:
    index: dict[Hashable, int] = {}
    for vector in vectors:
        for key in vector:
            if key not in index:
                index[key] = len(index)
    return index


def columns_matrix(vectors: Sequence[Vector]) -> tuple[DomainMatrix, dict[Hashable, int]]:
    """
    Puts vectors as the columns of a sparse matrix.
    :param vectors: sequence of sparse vectors
    :return: the matrix and the row index of every key
    """
    index = _index_keys(vectors)
    rows: dict[int, dict[int, object]] = {}
    for column, vector in enumerate(vectors):
        for key, value in vector.items():
            if value:
                rows.setdefault(index[key], {})[column] = to_qq(value)
    return DomainMatrix(rows, (len(index), len(vectors)), QQ), index


def rank(vectors: Sequence[Vector]) -> int:
    vectors = [v for v in vectors if any(v.values())]
    if not vectors:
        return 0
    matrix, _ = columns_matrix(vectors)
    return matrix.rank()


def independent_indices(vectors: Sequence[Vector]) -> list[int]:
    """
    Indices of a maximal linearly independent subfamily, chosen greedily from the left.
    :param vectors: sequence of sparse vectors
    :return: list of indices into ``vectors``
    """
    if not vectors:
        return []
    matrix, index = columns_matrix(vectors)
    if not index:
        return []
    _, pivots = matrix.rref()
    return list(pivots)


def independent_subset(vectors: Sequence[Vector]) -> list[Vector]:
    return [vectors[i] for i in independent_indices(vectors)]


def express(basis: Sequence[Vector], targets: Sequence[Vector]) -> list[list[Fraction]]:
    """
    Writes every target as a combination of linearly independent basis vectors.
    :param basis: linearly independent sparse vectors
    :param targets: sparse vectors in the span of ``basis``
    :return: one coefficient list per target
    """
    if not targets:
        return []
    if not basis:
        if any(any(t.values()) for t in targets):
            raise ValueError("A nonzero vector is not in the span of the empty family")
        return [[] for _ in targets]
    matrix, index = columns_matrix(list(basis) + list(targets))
    reduced, pivots = matrix.rref()
    k = len(basis)
    if list(pivots[:k]) != list(range(k)):
        raise ValueError("Basis vectors are linearly dependent")
    if any(p >= k for p in pivots):
        raise ValueError("A target vector is not in the span of the basis")
    entries = reduced.to_dod()
    result = []
    for t in range(len(targets)):
        column = k + t
        result.append(
            [to_fraction(entries.get(row, {}).get(column, QQ(0))) for row in range(k)]
        )
    return result


def matrix_from_columns(columns: Sequence[Sequence[Fraction]], size: int) -> DomainMatrix:
    """
    Builds a size x len(columns) matrix from coefficient lists.
    :param columns: coefficient lists, one per column
    :param size: number of rows
    :return: DomainMatrix
    """
    rows: dict[int, dict[int, object]] = {}
    for j, column in enumerate(columns):
        for i, value in enumerate(column):
            if value:
                rows.setdefault(i, {})[j] = to_qq(value)
    return DomainMatrix(rows, (size, len(columns)), QQ)


def identity(size: int) -> DomainMatrix:
    return DomainMatrix.eye(size, QQ)


def zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), QQ)


def scaled(matrix: DomainMatrix, value) -> DomainMatrix:
    return matrix * to_qq(value)


def matrices_equal(first: DomainMatrix, second: DomainMatrix) -> bool:
    if first.shape != second.shape:
        return False
    return (first - second).is_zero_matrix


def matrix_rank(matrix: DomainMatrix) -> int:
    if 0 in matrix.shape:
        return 0
    return matrix.rank()


def trace(matrix: DomainMatrix) -> Fraction:
    entries = matrix.to_dod()
    return sum(
        (to_fraction(row.get(i, QQ(0))) for i, row in entries.items()), Fraction(0)
    )


def entries(matrix: DomainMatrix) -> dict[tuple[int, int], Fraction]:
    return {
        (i, j): to_fraction(value)
        for i, row in matrix.to_dod().items()
        for j, value in row.items()
    }


def column(matrix: DomainMatrix, j: int) -> dict[int, Fraction]:
    return {i: value for (i, c), value in entries(matrix).items() if c == j}


def restrict(matrix: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    return matrix.extract(list(rows), list(cols))
