from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.choices import DimensionMethod
from klr.k0 import serre_check, serre_sides
from klr.utils import check_result


class Command(ReportCommand):
    """
    Checks the quantum Serre isomorphism between the two direct sums of projectives
    by comparing Dim 1_j P on both sides for every sequence j.

    Without --i/--j every ordered pair with i in I+ and j != i is checked for
    n = 1..--n.
    """

    help = "Checks the categorified quantum Serre relations through q^D"
    report_name = "serre_check"
    input_keys = ("i", "j", "n", "method")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--i", help="Vertex of I+.")
        parser.add_argument("--j", help="Second vertex.")
        parser.add_argument("--n", type=int, default=1, help="Multiplicity of j.")
        parser.add_argument(
            "--method", choices=DimensionMethod.values, default=DimensionMethod.COINVARIANT
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        cartan = algebra.cartan
        bound = options["truncation"]
        if options.get("i") and options.get("j"):
            cases = [(options["i"], options["j"], options["n"])]
        else:
            cases = [
                (i, j, n)
                for i in cartan.vertices
                for j in cartan.vertices
                if i != j and cartan.is_plus(i)
                for n in range(1, options["n"] + 1)
            ]

        rows = []
        for i, j, n in cases:
            for vertex in (i, j):
                if vertex not in cartan.vertices:
                    raise ValueError(f"Unknown vertex {vertex!r}")
            even, odd = serre_sides(algebra, i, j, n)
            passed = serre_check(algebra, i, j, n, bound, options["method"])
            rows.append(
                check_result(
                    "serre",
                    passed,
                    {"i": i, "j": j, "n": n, "a_ij": cartan.a(i, j), "bound": bound},
                    {"even": [str(label) for label in even], "odd": [str(label) for label in odd]},
                )
            )
        return rows
