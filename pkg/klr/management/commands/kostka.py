from klr.bases import ReportCommand
from klr.symgrp import is_unitriangular, kostka, kostka_matrix, partitions_of
from klr.utils import check_result


class Command(ReportCommand):
    """
    The ranks of the Young symmetrizers e_c on the Specht modules S^lambda, next to the
    Kostka numbers counted by semistandard tableaux.
    """

    help = "Prints the matrix rank(e_lambda on S^mu) for partitions of n and checks it"
    report_name = "kostka"
    requires_quiver = False
    input_keys = ("n",)

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)

    def compute(self, quiver, options: dict) -> list[dict]:
        n = options["n"]
        if n < 1:
            raise ValueError(f"kostka needs n >= 1, got n={n}")
        shapes = partitions_of(n)
        ranks = kostka_matrix(n)
        rows = []
        for shape, row in zip(shapes, ranks):
            oracle = [kostka(mu, shape) for mu in shapes]
            rows.append(
                check_result(
                    "kostka_row",
                    row == oracle,
                    {"shape": shape},
                    {"ranks": row, "kostka": oracle},
                )
                | {"ranks": row}
            )
        rows.append(
            check_result("unitriangular", is_unitriangular(ranks), {"n": n}, {"matrix": ranks})
        )
        return rows
