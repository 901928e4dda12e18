from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.k0 import commute_intertwiner_check
from klr.utils import check_result


class Command(ReportCommand):
    """
    For vertices with a_ij = 0, checks that the block crossing between e_(i,n) x e_(j,m)
    and e_(j,m) x e_(i,n) is invertible up to a scalar.
    """

    help = "Checks R e_(i,n) x e_(j,m) = R e_(j,m) x e_(i,n) for a_ij = 0"
    report_name = "commute_check"
    input_keys = ("i", "j", "n", "m")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--i", help="First vertex.")
        parser.add_argument("--j", help="Second vertex.")
        parser.add_argument("--n", type=int, default=1, help="Largest block size at i.")
        parser.add_argument("--m", type=int, default=1, help="Largest block size at j.")

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        cartan = algebra.cartan
        if options.get("i") and options.get("j"):
            pairs = [(options["i"], options["j"])]
        else:
            pairs = [
                (i, j)
                for index, i in enumerate(cartan.vertices)
                for j in cartan.vertices[index + 1 :]
                if cartan.a(i, j) == 0
            ]

        rows = []
        for i, j in pairs:
            for n in self._sizes(cartan, i, options["n"]):
                for m in self._sizes(cartan, j, options["m"]):
                    passed = commute_intertwiner_check(algebra, i, j, n, m)
                    rows.append(check_result("commute", passed, {"i": i, "j": j, "n": n, "m": m}))
        return rows

    @staticmethod
    def _sizes(cartan, vertex: str, largest: int) -> range:
        # I- vertices have no block idempotents beyond size 1.
        return range(1, 2) if cartan.is_minus(vertex) else range(1, largest + 1)
