from klr.bases import ReportCommand
from klr.cyclotomic import ef_coefficient_check
from klr.qseries import LaurentPolynomial, alpha, beta, gauss_identity_check
from klr.utils import check_result


class Command(ReportCommand):
    """
    Checks the coefficients of the E-F commutation relation at level a: the Gauss
    identity, alpha_p q^pa = beta_p and the recursion satisfied by q^-pa beta_p.
    """

    help = "Checks the E-F commutation coefficients alpha_p for p <= --p at level --a"
    report_name = "ef_check"
    requires_quiver = False
    input_keys = ("a", "p")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--a", type=int, required=True, help="Level a = Lambda(h_i).")
        parser.add_argument("--p", type=int, required=True)

    def compute(self, quiver, options: dict) -> list[dict]:
        a, p_max = options["a"], options["p"]
        if a < 1 or p_max < 1:
            raise ValueError(f"ef_check needs a, p >= 1, got a={a}, p={p_max}")
        rows = []
        for p in range(1, p_max + 1):
            normalized = alpha(p, a) * LaurentPolynomial.monomial(p * a)
            row = check_result(
                "alpha_beta",
                normalized == beta(p, a),
                {"p": p, "a": a},
                {"alpha": normalized, "beta": beta(p, a)},
            )
            row["alpha"] = alpha(p, a)
            rows.append(row)
            rows.append(
                check_result("gauss_identity", gauss_identity_check(p, a), {"p": p, "a": a})
            )
        rows.append(
            check_result(
                "ef_coefficients", ef_coefficient_check(p_max, p_max, a), {"p": p_max, "a": a}
            )
        )
        return rows
