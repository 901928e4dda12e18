from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.k0 import centralizer_dim, center_dim_check
from klr.qseries import center_dim
from klr.utils import check_result, parse_weight


class Command(ReportCommand):
    """
    Compares dim Z(R(nu))_d, computed as a centralizer, with prod_k prod_c 1/(1-q^2c).
    """

    help = "Checks the graded dimension of the center of R(nu) through q^D"
    report_name = "center_check"
    input_keys = ("weight",)

    def add_report_arguments(self, parser) -> None:
        parser.add_argument(
            "--weight", action="append", required=True, help="Weight nu; may be repeated."
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        bound = options["truncation"]
        rows = []
        for text in options["weight"]:
            weight = parse_weight(text, quiver)
            passed = center_dim_check(algebra, weight, bound)
            witness = None
            if not passed:
                witness = {
                    "expected": center_dim(*weight.multiplicities()).expand(bound),
                    "actual": {d: centralizer_dim(algebra, weight, d) for d in range(bound + 1)},
                }
            rows.append(
                check_result("center", passed, {"weight": str(weight), "bound": bound}, witness)
            )
        return rows
