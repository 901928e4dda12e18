from klr.bases import ReportCommand
from klr.choices import DimensionMethod
from klr.cyclotomic import cyclo_mackey_check, double_coset_representatives, mackey_decomp_check
from klr.utils import check_result


class Command(ReportCommand):
    """
    Checks the Mackey decomposition of E_l F_t on R(n) of the Jordan quiver, or on
    R^Lambda(n) when --level is given, together with the double coset count.
    """

    help = "Checks the Mackey decomposition of (1_m x e_l) R(n+t) (1_n x e_t)"
    report_name = "mackey_check"
    requires_quiver = False
    input_keys = ("n", "ell", "t", "level", "method")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--ell", type=int, required=True, help="Size l of the E block.")
        parser.add_argument("--t", type=int, required=True, help="Size t of the F block.")
        parser.add_argument("--level", type=int, help="Level a of the cyclotomic quotient.")
        parser.add_argument(
            "--method", choices=DimensionMethod.values, default=DimensionMethod.COINVARIANT
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        n, ell, t = options["n"], options["ell"], options["t"]
        if min(n, ell, t) < 0:
            raise ValueError(f"mackey_check needs n, l, t >= 0, got {n}, {ell}, {t}")
        bound = options["truncation"]
        params = {"n": n, "l": ell, "t": t, "bound": bound}
        rows = []
        if options.get("level") is not None:
            passed = cyclo_mackey_check(options["level"], n, ell, t, bound)
            rows.append(check_result("cyclo_mackey", passed, params | {"a": options["level"]}))
        else:
            passed = mackey_decomp_check(n, ell, t, bound, options["method"])
            rows.append(check_result("mackey", passed, params))
        count = len(double_coset_representatives(n, ell))
        rows.append(
            check_result(
                "double_cosets", count == min(n, ell) + 1, {"n": n, "l": ell}, {"count": count}
            )
        )
        return rows
