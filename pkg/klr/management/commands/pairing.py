from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.choices import DimensionMethod
from klr.k0 import gamma, kl_form, monomials, parse_monomial, rho_pairing
from klr.utils import check_result


class Command(ReportCommand):
    """
    Compares the form {x, y} on U^- with the Khovanov-Lauda form (Gamma x, Gamma y).

    Either one pair is given with --left/--right, or every pair of monomials of equal
    weight and height at most --max-height is tabulated.
    """

    help = "Tabulates {x, y} against ([P_x], [P_y]) through q^D"
    report_name = "pairing"
    input_keys = ("left", "right", "max_height", "method")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--left", help="Monomial x, e.g. 'f(i,2) f(j)'.")
        parser.add_argument("--right", help="Monomial y.")
        parser.add_argument("--max-height", type=int, default=2, dest="max_height")
        parser.add_argument(
            "--method", choices=DimensionMethod.values, default=DimensionMethod.COINVARIANT
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        cartan = algebra.cartan
        bound = options["truncation"]
        if options.get("left") or options.get("right"):
            pairs = [
                (
                    parse_monomial(options.get("left") or "").validate(cartan),
                    parse_monomial(options.get("right") or "").validate(cartan),
                )
            ]
        else:
            candidates = monomials(cartan, options["max_height"])
            pairs = [
                (x, y)
                for index, x in enumerate(candidates)
                for y in candidates[index:]
                if x.weight == y.weight
            ]

        rows = []
        for x, y in pairs:
            if x.weight != y.weight:
                raise ValueError(f"Monomials {x} and {y} have different weights")
            rho = rho_pairing(cartan, x, y).expand(bound)
            kl = kl_form(algebra, gamma(cartan, x), gamma(cartan, y), bound, options["method"])
            row = check_result(
                "pairing", rho.agrees_with(kl), {"x": str(x), "y": str(y), "bound": bound}
            )
            row.update({"rho": rho, "kl": kl})
            rows.append(row)
        return rows
