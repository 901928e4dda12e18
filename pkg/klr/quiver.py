import json
import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

from django.core.exceptions import ValidationError
from sympy import QQ
from sympy.polys.rings import ring
from sympy.utilities.iterables import multiset_permutations

from klr.choices import VertexClass

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# Bivariate and trivariate rings for the local relation polynomials.
LOCAL_RING, u, v = ring("u,v", QQ)
BRAID_RING, bu, bv, bw = ring("u,v,w", QQ)


@dataclass(frozen=True)
class QuiverDatum:
    """
    A finite quiver, possibly with loops.

    Attributes:
    - vertices (tuple[str]): Vertex names in file order.
    - loops (tuple[int]): Loop count h_i of each vertex, aligned with ``vertices``.
    - arrows (tuple[tuple[str, str]]): Non-loop arrows; repetition is multiplicity.
    """

    vertices: tuple[str, ...]
    loops: tuple[int, ...]
    arrows: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        errors: dict[str, list[str]] = {}
        if len(set(self.vertices)) != len(self.vertices):
            errors.setdefault("vertices", []).append("Vertex names must be distinct")
        if len(self.loops) != len(self.vertices):
            errors.setdefault("loops", []).append("One loop count per vertex is needed")
        if any(count < 0 for count in self.loops):
            errors.setdefault("loops", []).append("Loop counts must be nonnegative")
        for source, end in self.arrows:
            if source not in self.vertices or end not in self.vertices:
                errors.setdefault("arrows", []).append(
                    f"Arrow [{source}, {end}] uses an unknown vertex"
                )
            elif source == end:
                errors.setdefault("arrows", []).append(
                    f"Arrow [{source}, {end}] is a loop; list it under `loops`"
                )
        if errors:
            raise ValidationError(errors)

    @classmethod
    def from_dict(cls, data: Mapping) -> "QuiverDatum":
        """
        Builds a quiver from the parsed quiver file.
        :param data: mapping with the fields `vertices`, `loops`, `arrows`
        :return: QuiverDatum
        """
        if not isinstance(data, Mapping):
            raise ValidationError({"quiver": ["The quiver file must hold an object"]})
        unknown = set(data) - {"vertices", "loops", "arrows"}
        if unknown:
            raise ValidationError(
                {field: ["Unknown field in the quiver file"] for field in sorted(unknown)}
            )

        vertices = data.get("vertices")
        if not isinstance(vertices, list) or not vertices:
            raise ValidationError({"vertices": ["Expected a nonempty list of names"]})
        if not all(isinstance(name, str) and name for name in vertices):
            raise ValidationError({"vertices": ["Vertex names must be nonempty strings"]})

        loops = data.get("loops", {})
        if not isinstance(loops, Mapping):
            raise ValidationError({"loops": ["Expected a map from vertex to count"]})
        for name, count in loops.items():
            if name not in vertices:
                raise ValidationError({"loops": [f"Unknown vertex {name!r}"]})
            if not isinstance(count, int) or isinstance(count, bool):
                raise ValidationError({"loops": [f"Loop count of {name!r} is not an integer"]})

        arrows = data.get("arrows", [])
        if not isinstance(arrows, list):
            raise ValidationError({"arrows": ["Expected a list of [source, target] pairs"]})
        for arrow in arrows:
            if not isinstance(arrow, list) or len(arrow) != 2:
                raise ValidationError({"arrows": [f"Malformed arrow {arrow!r}"]})

        return cls(
            vertices=tuple(vertices),
            loops=tuple(loops.get(name, 0) for name in vertices),
            arrows=tuple((source, end) for source, end in arrows),
        )

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "loops": {name: h for name, h in zip(self.vertices, self.loops)},
            "arrows": [[source, end] for source, end in self.arrows],
        }

    def loop_count(self, i: str) -> int:
        return self.loops[self.vertices.index(i)]

    def arrow_count(self, i: str, j: str) -> int:
        """h_ij, the number of arrows from i to j."""
        return sum(1 for arrow in self.arrows if arrow == (i, j))

    def h_poly(self, i: str):
        """
        H_i(u, v) = (-1)^(a_ii / 2) (u - v)^(-a_ii) for i with a_ii <= 0.
        :param i: vertex
        :return: PolyElement of LOCAL_RING
        """
        h = self.loop_count(i)
        if h == 0:
            raise ValueError(f"H_i is only defined for vertices with loops, {i!r} has none")
        return (-1) ** (h - 1) * (u - v) ** (2 * h - 2)

    def q_poly(self, i: str, j: str):
        """
        Q_ij(u, v) = (-1)^h_ij (u - v)^(h_ij + h_ji) for i != j. The sign only counts
        arrows i -> j, so a single arrow i -> j gives Q_ij = -(u - v) and Q_ji = u - v.
        :param i: vertex
        :param j: vertex
        :return: PolyElement of LOCAL_RING
        """
        if i == j:
            raise ValueError("Q_ij needs two distinct vertices")
        h_ij, h_ji = self.arrow_count(i, j), self.arrow_count(j, i)
        return (-1) ** h_ij * (u - v) ** (h_ij + h_ji)

    def braid_poly(self, i: str, j: str):
        """
        (Q_ij(u, v) - Q_ij(w, v)) / (u - w), the correction of the braid relation
        for colours (i, j, i) with i loopless.
        :param i: loopless vertex
        :param j: vertex different from i
        :return: PolyElement of BRAID_RING in (u, v, w)
        """
        q = self.q_poly(i, j)
        numerator = _lift(q, (bu, bv)) - _lift(q, (bw, bv))
        return numerator.exquo(bu - bw)

    def cartan(self) -> "CartanDatum":
        return cartan_from_quiver(self)


def _lift(poly, images):
    """
    Substitutes the generators of LOCAL_RING by elements of BRAID_RING.
    :param poly: PolyElement of LOCAL_RING
    :param images: images of u and v
    :return: PolyElement of BRAID_RING
    """
    result = BRAID_RING.zero
    for (eu, ev), coefficient in poly.terms():
        result += coefficient * images[0] ** eu * images[1] ** ev
    return result


@dataclass(frozen=True)
class CartanDatum:
    """
    The Borcherds-Cartan matrix of a quiver and the split of its vertices.

    Attributes:
    - quiver (QuiverDatum): The quiver the matrix is derived from.
    """

    quiver: QuiverDatum

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def a(self, i: str, j: str) -> int:
        if i == j:
            return 2 - 2 * self.quiver.loop_count(i)
        return -self.quiver.arrow_count(i, j) - self.quiver.arrow_count(j, i)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.a(i, j) for j in self.vertices) for i in self.vertices)

    def vertex_class(self, i: str) -> VertexClass:
        diagonal = self.a(i, i)
        if diagonal == 2:
            return VertexClass.PLUS
        if diagonal == 0:
            return VertexClass.ZERO
        return VertexClass.MINUS

    def is_plus(self, i: str) -> bool:
        return self.vertex_class(i) == VertexClass.PLUS

    def is_zero(self, i: str) -> bool:
        return self.vertex_class(i) == VertexClass.ZERO

    def is_minus(self, i: str) -> bool:
        return self.vertex_class(i) == VertexClass.MINUS

    def split(self) -> dict[str, list[str]]:
        result = {choice.value: [] for choice in VertexClass}
        for i in self.vertices:
            result[self.vertex_class(i).value].append(i)
        return result

    def pairing(self, nu: "Weight", mu: "Weight") -> int:
        """The symmetric form nu . mu = sum nu_i mu_j a_ij on weights."""
        return sum(m * n * self.a(i, j) for i, m in nu.items() for j, n in mu.items())

    def crossing_degree(self, i: str, j: str) -> int:
        return -self.a(i, j)


def cartan_from_quiver(quiver: QuiverDatum) -> CartanDatum:
    """
    Derives a_ii = 2 - 2h_i and a_ij = -h_ij - h_ji from the quiver.
    :param quiver: QuiverDatum
    :return: CartanDatum
    """
    datum = CartanDatum(quiver)
    logger.debug("Cartan matrix of %s: %s", quiver.vertices, datum.matrix)
    return datum


class Weight:
    """
    An element of N[I]: a finitely supported multiplicity for each vertex.

    Methods:
    - from_sequence: The weight of a sequence of vertices.
    - sequences: All sequences of this weight, sorted.
    - height: Total multiplicity.
    """

    __slots__ = ("_items",)

    def __init__(self, multiplicities: Mapping[str, int] | None = None) -> None:
        items = {}
        for vertex, count in (multiplicities or {}).items():
            if count < 0:
                raise ValueError(f"Multiplicity of {vertex!r} must be nonnegative")
            if count:
                items[vertex] = count
        self._items = tuple(sorted(items.items()))

    @classmethod
    def from_sequence(cls, sequence: Iterable[str]) -> "Weight":
        counts: dict[str, int] = {}
        for vertex in sequence:
            counts[vertex] = counts.get(vertex, 0) + 1
        return cls(counts)

    def items(self) -> tuple[tuple[str, int], ...]:
        return self._items

    def __getitem__(self, vertex: str) -> int:
        return dict(self._items).get(vertex, 0)

    @property
    def height(self) -> int:
        return sum(count for _, count in self._items)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(count for _, count in self._items)

    def sequences(self) -> list[tuple[str, ...]]:
        letters = [vertex for vertex, count in self._items for _ in range(count)]
        return sorted(tuple(seq) for seq in multiset_permutations(letters))

    def __add__(self, other: "Weight") -> "Weight":
        counts = dict(self._items)
        for vertex, count in other._items:
            counts[vertex] = counts.get(vertex, 0) + count
        return Weight(counts)

    def __sub__(self, other: "Weight") -> "Weight":
        counts = dict(self._items)
        for vertex, count in other._items:
            counts[vertex] = counts.get(vertex, 0) - count
        return Weight(counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        return "+".join(v if c == 1 else f"{c}{v}" for v, c in self._items)

    def __repr__(self) -> str:
        return f"Weight({self})"


def load_quiver(path: str | Path) -> QuiverDatum:
    """
    Reads a quiver file.
    :param path: path of a JSON document with `vertices`, `loops`, `arrows`
    :return: QuiverDatum
    """
    text = Path(path).read_text()
    return parse_quiver(text)


def parse_quiver(text: str) -> QuiverDatum:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        logger.info(e)
        raise ValidationError({"quiver": [f"Not a JSON document: {e.msg}"]})
    return QuiverDatum.from_dict(data)


def dump_quiver(quiver: QuiverDatum) -> str:
    """The canonical text of a quiver file; parse_quiver(dump_quiver(Q)) == Q."""
    return json.dumps(quiver.to_dict(), indent=2) + "\n"
