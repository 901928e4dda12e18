from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.choices import DimensionMethod
from klr.polyrep import algebra_dim, truncated_dim
from klr.qseries import TruncatedSeries
from klr.utils import check_result, parse_sequence, parse_weight


class Command(ReportCommand):
    """
    Graded dimensions of the idempotent truncations 1_i R(nu) 1_j through q^D.

    Without --source/--target every pair of sequences of the weight is listed and
    their sum is compared with Dim R(nu) computed from the basis.
    """

    help = "Prints Dim 1_i R(nu) 1_j through q^D for the sequences of a weight"
    report_name = "dim"
    input_keys = ("weight", "source", "target", "method")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--weight", required=True, help="Weight nu, e.g. 2i+j.")
        parser.add_argument("--source", help="Bottom sequence j, e.g. i,j.")
        parser.add_argument("--target", help="Top sequence i, e.g. j,i.")
        parser.add_argument(
            "--method", choices=DimensionMethod.values, default=DimensionMethod.COINVARIANT
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        weight = parse_weight(options["weight"], quiver)
        bound = options["truncation"]
        sequences = weight.sequences()
        sources = sequences
        if options.get("source"):
            sources = [parse_sequence(options["source"], quiver)]
        targets = sequences
        if options.get("target"):
            targets = [parse_sequence(options["target"], quiver)]

        rows = []
        total = TruncatedSeries({}, bound)
        for target in targets:
            for source in sources:
                series = truncated_dim(
                    algebra.idempotent(target), algebra.idempotent(source), bound, options["method"]
                )
                total = total + series
                rows.append(
                    {"target": ",".join(target), "source": ",".join(source), "dimension": series}
                )
        if len(sources) == len(targets) == len(sequences):
            expected = algebra_dim(algebra, weight).expand(bound)
            rows.append(
                check_result(
                    "algebra_dim",
                    expected.agrees_with(total),
                    {"weight": str(weight), "bound": bound},
                    {"expected": expected, "actual": total},
                )
            )
        return rows
