from klr.bases import ReportCommand
from klr.cyclotomic import CycloAlgebra, cyclo_dim_check
from klr.qseries import cyclotomic_dim
from klr.utils import check_result


class Command(ReportCommand):
    """
    Graded dimensions of the cyclotomic quotients R^Lambda(k), k <= n, of the Jordan
    quiver at level a.
    """

    help = "Prints Dim R^Lambda(k) for k <= n and compares with k! ((1-q^2a)/(1-q^2))^k"
    report_name = "cyclo_dim"
    requires_quiver = False
    input_keys = ("level", "n")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--level", type=int, required=True, help="a = Lambda(h_i).")
        parser.add_argument("--n", type=int, required=True)

    def compute(self, quiver, options: dict) -> list[dict]:
        a, n_max = options["level"], options["n"]
        if n_max < 0:
            raise ValueError(f"cyclo_dim needs n >= 0, got n={n_max}")
        cyclo = CycloAlgebra(a)
        rows = []
        for n in range(n_max + 1):
            spanned = cyclo.spanned_dim(n)
            expected = cyclotomic_dim(a, n)
            passed = spanned == expected
            if n:
                passed = passed and cyclo_dim_check(a, n, options["truncation"])
            row = check_result(
                "cyclo_dim",
                passed,
                {"a": a, "n": n},
                {"expected": expected, "actual": spanned},
            )
            row.update({"dimension": spanned, "ungraded": spanned.evaluate_at_one()})
            rows.append(row)
        return rows
