"""
Permutations of strands and their fixed reduced expressions.

A permutation of n strands is stored as a tuple ``arr`` where ``arr[p]`` is the bottom
position of the strand ending at top position p (0-based). The crossing word
tau_{c1} ... tau_{cl} (product order, c1 on top) is applied from the right, so the
identity tuple is transformed letter by letter starting with c_l.
"""

import logging
from functools import lru_cache
from itertools import permutations as _all_orders
from typing import Iterator, Sequence

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def longest(n: int) -> Permutation:
    return tuple(reversed(range(n)))


def apply_letter(arr: Permutation, a: int) -> Permutation:
    """
    Left multiplication by the simple transposition s_a (1-based letter).
    :param arr: Permutation
    :param a: int, 1 <= a < n
    :return: Permutation
    """
    items = list(arr)
    items[a - 1], items[a] = items[a], items[a - 1]
    return tuple(items)


def from_word(word: Sequence[int], n: int) -> Permutation:
    arr = identity(n)
    for a in reversed(word):
        arr = apply_letter(arr, a)
    return arr


def is_length_up(arr: Permutation, a: int) -> bool:
    """True iff s_a * arr is longer than arr."""
    return arr[a - 1] < arr[a]


def left_descents(arr: Permutation) -> list[int]:
    return [a for a in range(1, len(arr)) if arr[a - 1] > arr[a]]


def length(arr: Permutation) -> int:
    n = len(arr)
    return sum(1 for p in range(n) for r in range(p + 1, n) if arr[p] > arr[r])


@lru_cache(maxsize=None)
def reduced_word(arr: Permutation) -> tuple[int, ...]:
    """
    The lexicographically smallest reduced expression of a permutation.

    Any left descent can start a reduced expression, so the smallest one is taken
    greedily and the rest of the word is the reduced word of the shorter permutation.
    :param arr: Permutation
    :return: tuple of 1-based letters in product order
    """
    descents = left_descents(arr)
    if not descents:
        return ()
    first = descents[0]
    return (first,) + reduced_word(apply_letter(arr, first))


def first_letter(arr: Permutation) -> int:
    return left_descents(arr)[0]


def inverse(arr: Permutation) -> Permutation:
    result = [0] * len(arr)
    for p, source in enumerate(arr):
        result[source] = p
    return tuple(result)


def compose(left: Permutation, right: Permutation) -> Permutation:
    """The permutation of the stacked diagram, ``left`` on top of ``right``."""
    return tuple(right[left[p]] for p in range(len(left)))


def target(arr: Permutation, source: Sequence) -> tuple:
    """The top sequence of colours of a diagram with bottom sequence ``source``."""
    return tuple(source[arr[p]] for p in range(len(arr)))


def crossing_pairs(arr: Permutation) -> Iterator[tuple[int, int]]:
    """
    Pairs of bottom positions (p < r) whose strands cross.
    :param arr: Permutation
    :return: iterator of pairs of bottom positions
    """
    position = inverse(arr)
    n = len(arr)
    for p in range(n):
        for r in range(p + 1, n):
            if position[p] > position[r]:
                yield p, r


def all_permutations(n: int) -> list[Permutation]:
    return [tuple(order) for order in _all_orders(range(n))]


def concatenate(left: Permutation, right: Permutation) -> Permutation:
    shift = len(left)
    return tuple(left) + tuple(shift + p for p in right)


def is_minimal_left_coset_rep(arr: Permutation, blocks: Sequence[int]) -> bool:
    """
    True iff ``arr`` has minimal length in its coset arr * (S_b1 x ... x S_bk),
    i.e. the strands of each bottom block keep their relative order.
    """
    position = inverse(arr)
    start = 0
    for size in blocks:
        for p in range(start, start + size - 1):
            if position[p] > position[p + 1]:
                return False
        start += size
    return True


def minimal_coset_representatives(blocks: Sequence[int]) -> list[Permutation]:
    n = sum(blocks)
    return [w for w in all_permutations(n) if is_minimal_left_coset_rep(w, blocks)]


def double_coset_representatives(n: int, ell: int) -> list[Permutation]:
    """
    Minimal representatives of (S_n x S_ell) \\ S_(n+ell) / (S_n x S_ell),
    found as D_(n,ell) intersected with its inverse set by brute force.
    :param n: int >= 0
    :param ell: int >= 0
    :return: list of Permutation
    """
    blocks = (n, ell)
    result = [
        w
        for w in minimal_coset_representatives(blocks)
        if is_minimal_left_coset_rep(inverse(w), blocks)
    ]
    logger.debug("%s double coset representatives for n=%s, ell=%s", len(result), n, ell)
    return result
