"""
The decategorified layer: monomials of U^-, the bilinear form defined through the
coproduct, the Khovanov-Lauda form on projectives and the checks relating them.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from django.core.exceptions import ValidationError

from klr import linalg
from klr import permutations as perms
from klr.algebra import KLRAlgebra, KLRElement, ProjectiveLabel
from klr.choices import DimensionMethod
from klr.modules import CharacterVector, character, specht_klr_module
from klr.polyrep import graded_component, graded_dim, truncated_dim
from klr.qseries import (
    ONE,
    LaurentPolynomial,
    RationalFunction,
    TruncatedSeries,
    center_dim,
    qfactorial,
)
from klr.quiver import CartanDatum, Weight
from klr.symgrp import compositions_of, idempotent_rank, is_unitriangular, partitions_of

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

ATOM_PATTERN = re.compile(r"^f\(\s*([^,()\s]+)\s*(?:,\s*(\d+)\s*)?\)$")

Atom = tuple[str, int]


@dataclass(frozen=True)
class UMinusMonomial:
    """
    A product of generators of U^-, left to right.

    An atom (i, n) reads as f_i^(n) for i in I+, as f_(in) for i in I0 and as f_i
    (n = 1 only) for i in I-.

    Attributes:
    - atoms (tuple[tuple[str, int]]): The generators.
    """

    atoms: tuple[Atom, ...] = ()

    @property
    def weight(self) -> Weight:
        counts: dict[str, int] = {}
        for vertex, n in self.atoms:
            counts[vertex] = counts.get(vertex, 0) + n
        return Weight(counts)

    def __mul__(self, other: "UMinusMonomial") -> "UMinusMonomial":
        return UMinusMonomial(self.atoms + other.atoms)

    def validate(self, cartan: CartanDatum) -> "UMinusMonomial":
        for vertex, n in self.atoms:
            if vertex not in cartan.vertices:
                raise ValidationError({"monomial": [f"Unknown vertex {vertex!r}"]})
            if n < 1:
                raise ValidationError({"monomial": [f"Generator f({vertex},{n}) needs n >= 1"]})
            if n > 1 and cartan.is_minus(vertex):
                raise ValidationError(
                    {"monomial": [f"Vertex {vertex!r} of I- has no generator f({vertex},{n})"]}
                )
        return self

    def __str__(self) -> str:
        if not self.atoms:
            return "1"
        return " ".join(f"f({v})" if n == 1 else f"f({v},{n})" for v, n in self.atoms)


def parse_monomial(text: str) -> UMinusMonomial:
    """
    Reads whitespace-separated generators f(i) and f(i,n); "1" or "" is the unit.
    :param text: str
    :return: UMinusMonomial
    """
    text = text.strip()
    if text in ("", "1"):
        return UMinusMonomial()
    atoms = []
    for token in text.split():
        match = ATOM_PATTERN.match(token)
        if not match:
            raise ValidationError({"monomial": [f"Unknown generator {token!r}"]})
        vertex, count = match.groups()
        atoms.append((vertex, int(count) if count else 1))
    return UMinusMonomial(tuple(atoms))


def monomials(cartan: CartanDatum, max_height: int) -> list[UMinusMonomial]:
    """Every monomial in the generators of U^- of height 1..max_height."""
    atoms = [
        (vertex, n)
        for vertex in cartan.vertices
        for n in range(1, max_height + 1)
        if n == 1 or not cartan.is_minus(vertex)
    ]
    result = []

    def extend(prefix: tuple[Atom, ...], height: int) -> None:
        if prefix:
            result.append(UMinusMonomial(prefix))
        for vertex, n in atoms:
            if height + n <= max_height:
                extend(prefix + ((vertex, n),), height + n)

    extend((), 0)
    return result


class BilinearForm:
    """
    The symmetric form on U^- with {f_i, f_i} = 1/(1-q^2) on I+ and I-,
    {f_(in), f_(in)} = prod 1/(1-q^2k) on I0 and {x, yz} = {rho(x), y (x) z}.

    Divided powers are rewritten as f_i^n / [n]!. The value of a pair is computed by
    peeling the last generator z of y: every generator of x splits into a left and a
    right part, and the product of the splits is twisted by q^(-|R_k| . |L_l|), k < l.
    """

    def __init__(self, cartan: CartanDatum) -> None:
        self.cartan = cartan
        self._values: dict[tuple[tuple[Atom, ...], tuple[Atom, ...]], RationalFunction] = {}

    def _expand(self, monomial: UMinusMonomial) -> tuple[tuple[Atom, ...], RationalFunction]:
        atoms: list[Atom] = []
        scale = RationalFunction(ONE)
        for vertex, n in monomial.validate(self.cartan).atoms:
            if self.cartan.is_plus(vertex):
                atoms.extend([(vertex, 1)] * n)
                scale = scale / qfactorial(n)
            else:
                atoms.append((vertex, n))
        return tuple(atoms), scale

    def __call__(self, x: UMinusMonomial, y: UMinusMonomial) -> RationalFunction:
        left, first = self._expand(x)
        right, second = self._expand(y)
        return first * second * self._pair(left, right)

    def _weight(self, atoms: Iterable[Atom]) -> Weight:
        return UMinusMonomial(tuple(atoms)).weight

    def _splits(self, atom: Atom) -> list[tuple[Atom | None, Atom | None]]:
        vertex, n = atom
        if not self.cartan.is_zero(vertex):
            return [(atom, None), (None, atom)]
        return [
            ((vertex, r) if r else None, (vertex, n - r) if n - r else None)
            for r in range(n + 1)
        ]

    def _pair(self, x: tuple[Atom, ...], y: tuple[Atom, ...]) -> RationalFunction:
        key = (x, y)
        if key in self._values:
            return self._values[key]
        if self._weight(x) != self._weight(y):
            value = RationalFunction(0)
        elif not x:
            value = RationalFunction(ONE)
        elif len(y) == 1 and len(x) == 1:
            vertex, n = y[0]
            value = center_dim(n) if self.cartan.is_zero(vertex) else center_dim(1)
        elif len(y) == 1:
            value = self._pair(y, x)
        else:
            value = self._peel(x, y[:-1], y[-1])
        self._values[key] = value
        return value

    def _peel(self, x: tuple[Atom, ...], rest: tuple[Atom, ...], last: Atom) -> RationalFunction:
        target = self._weight([last])
        total = RationalFunction(0)
        for choice in product(*(self._splits(atom) for atom in x)):
            lefts = [left for left, _ in choice]
            rights = [right for _, right in choice]
            if self._weight(a for a in rights if a) != target:
                continue
            twist = 0
            for k, right in enumerate(rights):
                if right is None:
                    continue
                for left in lefts[k + 1 :]:
                    if left is not None:
                        twist += right[1] * left[1] * self.cartan.a(right[0], left[0])
            value = self._pair(tuple(a for a in lefts if a), rest)
            if value.is_zero():
                continue
            value = value * self._pair(tuple(a for a in rights if a), (last,))
            total = total + value * LaurentPolynomial.monomial(-twist)
        return total


def rho_pairing(cartan: CartanDatum, x: UMinusMonomial, y: UMinusMonomial) -> RationalFunction:
    """
    {x, y} as an exact rational function of q.
    :param cartan: CartanDatum
    :param x: UMinusMonomial
    :param y: UMinusMonomial
    :return: RationalFunction; 0 when the weights differ
    """
    return BilinearForm(cartan)(x, y)


def gamma(cartan: CartanDatum, monomial: UMinusMonomial) -> ProjectiveLabel:
    """f_i -> [P_i], f_i^(n) -> [P_(i^(n))], f_(in) -> [P_(i,n)]; products concatenate."""
    return ProjectiveLabel(tuple(monomial.validate(cartan).atoms))


class K0Vector:
    """
    A Z[q, q^-1]-combination of classes of projectives [P_i].
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ProjectiveLabel, LaurentPolynomial] | None = None) -> None:
        self._terms = {
            label: LaurentPolynomial._coerce(value)
            for label, value in (terms or {}).items()
            if not LaurentPolynomial._coerce(value).is_zero()
        }

    @property
    def terms(self) -> dict[ProjectiveLabel, LaurentPolynomial]:
        return dict(self._terms)

    def weights(self) -> set[Weight]:
        return {label.weight for label in self._terms}

    def __add__(self, other: "K0Vector") -> "K0Vector":
        terms = dict(self._terms)
        for label, value in other._terms.items():
            terms[label] = terms[label] + value if label in terms else value
        return K0Vector(terms)

    def scale(self, value) -> "K0Vector":
        return K0Vector({label: c * value for label, c in self._terms.items()})

    def shift(self, m: int) -> "K0Vector":
        """q^m [P] = [P{m}]."""
        return self.scale(LaurentPolynomial.monomial(m))

    def bar(self) -> "K0Vector":
        return K0Vector({label: c.bar() for label, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, K0Vector) and self._terms == other._terms

    __hash__ = None

    def to_json(self) -> dict:
        return {str(label): str(value) for label, value in self._terms.items()}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({value}) [P_{label}]" for label, value in self._terms.items())


def gamma_combination(
    cartan: CartanDatum, combination: Mapping[UMinusMonomial, LaurentPolynomial]
) -> K0Vector:
    vector = K0Vector()
    for monomial, coefficient in combination.items():
        vector = vector + K0Vector({gamma(cartan, monomial): coefficient})
    return vector


def bar(value):
    """
    The bar involution q -> q^-1 on coefficients; generators of U^- and classes of
    projectives are bar-invariant.
    """
    if isinstance(value, (LaurentPolynomial, RationalFunction, K0Vector)):
        return value.bar()
    if isinstance(value, Mapping):
        return {key: LaurentPolynomial._coerce(c).bar() for key, c in value.items()}
    raise TypeError(f"Cannot conjugate {type(value).__name__}")


def _label_idempotent(algebra: KLRAlgebra, label: ProjectiveLabel) -> KLRElement:
    for vertex, m in label.blocks:
        if vertex not in algebra.quiver.vertices:
            raise ValueError(f"Label {label} names unknown vertex {vertex!r}")
        if m < 1 or (m > 1 and algebra.cartan.is_minus(vertex)):
            raise ValueError(f"Label {label} has no idempotent for block ({vertex}, {m})")
    return label.idempotent(algebra)


def kl_form_exact(
    algebra: KLRAlgebra, left: ProjectiveLabel, right: ProjectiveLabel
) -> RationalFunction:
    """
    ([P_x], [P_y]) = q^(<x> + <y>) Dim(psi(1_x) R(nu) 1_y).
    :param algebra: KLRAlgebra
    :param left: ProjectiveLabel x
    :param right: ProjectiveLabel y
    :return: RationalFunction; 0 when the weights differ
    """
    if left.weight != right.weight:
        return RationalFunction(0)
    first = _label_idempotent(algebra, left).psi()
    second = _label_idempotent(algebra, right)
    shift = left.shift(algebra) + right.shift(algebra)
    return graded_dim(first, second) * LaurentPolynomial.monomial(shift)


def kl_form(
    algebra: KLRAlgebra,
    left: ProjectiveLabel,
    right: ProjectiveLabel,
    bound: int,
    method: str = DimensionMethod.COINVARIANT,
) -> TruncatedSeries:
    """
    The Khovanov-Lauda form of two projectives through q^bound.
    :param algebra: KLRAlgebra
    :param left: ProjectiveLabel x
    :param right: ProjectiveLabel y
    :param bound: truncation D
    :param method: DimensionMethod value
    :return: TruncatedSeries
    """
    if left.weight != right.weight:
        return TruncatedSeries({}, bound)
    first = _label_idempotent(algebra, left).psi()
    second = _label_idempotent(algebra, right)
    shift = left.shift(algebra) + right.shift(algebra)
    series = truncated_dim(first, second, bound - shift, method)
    return series * LaurentPolynomial.monomial(shift)


def pairing_agreement_check(
    algebra: KLRAlgebra,
    x: UMinusMonomial,
    y: UMinusMonomial,
    bound: int,
    method: str = DimensionMethod.COINVARIANT,
) -> bool:
    """
    True iff {x, y} and (Gamma x, Gamma y) agree through q^bound.
    """
    if x.weight != y.weight:
        raise ValueError(f"Monomials {x} and {y} have different weights")
    cartan = algebra.cartan
    expected = rho_pairing(cartan, x, y).expand(bound)
    actual = kl_form(algebra, gamma(cartan, x), gamma(cartan, y), bound, method)
    agree = expected.agrees_with(actual)
    if not agree:
        logger.warning("Forms disagree on (%s, %s): %s vs %s", x, y, expected, actual)
    return agree


def serre_sides(
    algebra: KLRAlgebra, i: str, j: str, n: int
) -> tuple[list[ProjectiveLabel], list[ProjectiveLabel]]:
    """
    Labels of the two direct sums: i^(2c) j^n i^(m-2c) against i^(2c+1) j^n i^(m-2c-1),
    m = 1 - n a_ij. For j in I0 the middle block is e_(j,n).
    """
    cartan = algebra.cartan
    if not cartan.is_plus(i):
        raise ValueError(f"Serre relations need a loopless vertex, {i!r} is not in I+")
    if i == j:
        raise ValueError("Serre relations need two different vertices")
    if n < 1:
        raise ValueError(f"serre_check needs n >= 1, got n={n}")
    m = 1 - n * cartan.a(i, j)
    middle = ((j, n),) if cartan.is_zero(j) else ((j, 1),) * n

    def label(first: int) -> ProjectiveLabel:
        blocks = ((i, first),) if first else ()
        blocks += middle
        if m - first:
            blocks += ((i, m - first),)
        return ProjectiveLabel(blocks)

    even = [label(2 * c) for c in range(m // 2 + 1)]
    odd = [label(2 * c + 1) for c in range((m - 1) // 2 + 1)]
    return even, odd


def _summed_dim(
    algebra: KLRAlgebra,
    target: tuple[str, ...],
    labels: list[ProjectiveLabel],
    bound: int,
    method: str,
) -> TruncatedSeries:
    total = TruncatedSeries({}, bound)
    for label in labels:
        shift = label.shift(algebra)
        series = truncated_dim(
            algebra.idempotent(target), label.idempotent(algebra).psi(), bound + shift, method
        )
        total = total + series * LaurentPolynomial.monomial(-shift)
    return total


def serre_check(
    algebra: KLRAlgebra,
    i: str,
    j: str,
    n: int,
    bound: int,
    method: str = DimensionMethod.COINVARIANT,
) -> bool:
    """
    Compares Dim 1_j P for both sides of the quantum Serre isomorphism, every target
    sequence j, through q^bound.
    :param algebra: KLRAlgebra
    :param i: vertex of I+
    :param j: another vertex
    :param n: multiplicity of j
    :param bound: truncation D
    :param method: DimensionMethod value
    :return: bool
    """
    even, odd = serre_sides(algebra, i, j, n)
    weight = even[0].weight
    agree = True
    for target in weight.sequences():
        first = _summed_dim(algebra, target, even, bound, method)
        second = _summed_dim(algebra, target, odd, bound, method)
        if not first.agrees_with(second):
            logger.warning("Serre sides differ on 1_%s: %s vs %s", target, first, second)
            agree = False
    return agree


def block_crossing(algebra: KLRAlgebra, i: str, n: int, j: str, m: int) -> KLRElement:
    """
    (e_(i,n) x e_(j,m)) tau_w (e_(j,m) x e_(i,n)) with w carrying the block of m strands
    coloured j under the block of n strands coloured i.
    """
    top = ProjectiveLabel(((i, n), (j, m))).idempotent(algebra)
    bottom = ProjectiveLabel(((j, m), (i, n))).idempotent(algebra)
    arr = tuple(m + p for p in range(n)) + tuple(range(m))
    source = (j,) * m + (i,) * n
    crossing = algebra.basis_element(((0,) * (n + m), arr, source))
    return top * crossing * bottom




def commute_intertwiner_check(algebra: KLRAlgebra, i: str, j: str, n: int = 1, m: int = 1) -> bool:
    """
    For a_ij = 0, the block crossing and its flip compose to e_(i,n) x e_(j,m) and
    e_(j,m) x e_(i,n) in normal form, so R e_(i,n) x e_(j,m) and R e_(j,m) x e_(i,n)
    are isomorphic.
    """
    if algebra.cartan.a(i, j) != 0 or i == j:
        raise ValueError(f"Blocks of {i!r} and {j!r} only commute when a_ij = 0")
    crossing = block_crossing(algebra, i, n, j, m)
    flip = block_crossing(algebra, j, m, i, n)
    first = ProjectiveLabel(((i, n), (j, m))).idempotent(algebra)
    second = ProjectiveLabel(((j, m), (i, n))).idempotent(algebra)
    forward = crossing * flip == first
    backward = flip * crossing == second
    if not (forward and backward):
        logger.warning("Block crossing of %s^%s and %s^%s is not invertible", i, n, j, m)
    return forward and backward


def centralizer_dim(algebra: KLRAlgebra, weight: Weight, degree: int) -> int:
    """
    dim Z(R(nu))_degree: elements of sum 1_i R 1_i commuting with every x_k and tau_k.
    """
    keys = []
    for sequence in weight.sequences():
        keys.extend(graded_component(algebra, weight, sequence, sequence, degree))
    if not keys:
        return 0
    n = weight.height
    generators = [algebra.dot(k, weight) for k in range(1, n + 1)]
    generators += [algebra.crossing(k, weight) for k in range(1, n)]
    images = []
    for key in keys:
        image = {}
        for index, generator in enumerate(generators):
            commutator = algebra.multiply_terms({key: Fraction(1)}, generator.terms)
            for other, value in algebra.multiply_terms(generator.terms, {key: Fraction(1)}).items():
                commutator[other] = commutator.get(other, 0) - value
            image.update({(index, other): value for other, value in commutator.items() if value})
        images.append(image)
    return len(keys) - linalg.rank(images)


def center_dim_check(algebra: KLRAlgebra, weight: Weight, bound: int) -> bool:
    """
    Compares the centralizer dimensions through q^bound with prod_k prod_c 1/(1-q^2c).
    """
    expected = center_dim(*weight.multiplicities()).expand(bound)
    lowest = min(
        algebra.degree_of_key(((0,) * weight.height, arr, sequence))
        for sequence in weight.sequences()
        for arr in _stabilizer(sequence)
    )
    actual = TruncatedSeries(
        {d: centralizer_dim(algebra, weight, d) for d in range(min(lowest, 0), bound + 1)}, bound
    )
    agree = expected.agrees_with(actual)
    if not agree:
        logger.warning("Center of R(%s): expected %s, found %s", weight, expected, actual)
    return agree


def _stabilizer(sequence: tuple[str, ...]) -> list[tuple[int, ...]]:
    return [
        arr
        for arr in perms.all_permutations(len(sequence))
        if perms.target(arr, sequence) == sequence
    ]


def jordan_characters(
    algebra: KLRAlgebra, i: str, n: int
) -> dict[tuple[int, ...], CharacterVector]:
    """Ch S^lambda for every partition lambda of n."""
    return {shape: character(specht_klr_module(algebra, i, shape)) for shape in partitions_of(n)}


def character_rank(characters: Iterable[CharacterVector]) -> int:
    """Rank of a family of characters over QQ."""
    vectors = [
        {
            (key, exponent): value
            for key, poly in ch.values.items()
            for exponent, value in poly.coefficients.items()
        }
        for ch in characters
    ]
    return linalg.rank(vectors)


def projective_specht_pairing(algebra: KLRAlgebra, i: str, n: int) -> list[list[int]]:
    """
    (P_(i,lambda), S^mu) = dim(e_(i,lambda) S^mu), rows lambda and columns mu in
    decreasing lex order.
    """
    shapes = partitions_of(n)
    characters = jordan_characters(algebra, i, n)
    return [
        [int(characters[mu][tuple((i, part) for part in lam)].evaluate_at_one()) for mu in shapes]
        for lam in shapes
    ]


def projective_specht_unitriangular(algebra: KLRAlgebra, i: str, n: int) -> bool:
    return is_unitriangular(projective_specht_pairing(algebra, i, n))


def frobenius_consistency(algebra: KLRAlgebra, i: str, shape: Sequence[int]) -> bool:
    """
    Every coefficient of Ch S^lambda at e_(i,c1) ... e_(i,cr) equals the rank of the
    Young symmetrizer of the composition c on S^lambda.
    """
    ch = character(specht_klr_module(algebra, i, shape))
    for composition in compositions_of(sum(shape)):
        key = tuple((i, part) for part in composition)
        if ch[key].evaluate_at_one() != idempotent_rank(shape, composition):
            return False
    return True
