from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.k0 import character_rank, frobenius_consistency, jordan_characters
from klr.symgrp import partitions_of
from klr.utils import check_result


class Command(ReportCommand):
    """
    Characters of the Specht modules S^lambda of R(ni) for a vertex i with one loop,
    with all dots acting by zero.
    """

    help = "Prints Ch S^lambda for every partition lambda of n at a vertex of I0"
    report_name = "characters"
    input_keys = ("n", "vertex")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--vertex", help="Vertex of I0; the first one by default.")

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        cartan = algebra.cartan
        vertex = options.get("vertex") or next(
            (i for i in cartan.vertices if cartan.is_zero(i)), None
        )
        if vertex is None or vertex not in cartan.vertices or not cartan.is_zero(vertex):
            raise ValueError("characters needs a vertex with exactly one loop")
        n = options["n"]
        if n < 1:
            raise ValueError(f"characters needs n >= 1, got n={n}")

        characters = jordan_characters(algebra, vertex, n)
        rows = []
        for shape, ch in characters.items():
            rows.append(
                {
                    "shape": ",".join(map(str, shape)),
                    "character": ch,
                    "text": str(ch),
                }
            )
            rows.append(
                check_result(
                    "frobenius", frobenius_consistency(algebra, vertex, shape), {"shape": shape}
                )
            )
        rank = character_rank(characters.values())
        size = len(partitions_of(n))
        rows.append(
            check_result(
                "character_rank", rank == size, {"n": n}, {"rank": rank, "partitions": size}
            )
        )
        return rows
