from dataclasses import replace

from django.conf import settings

from klr.bases import ReportCommand
from klr.suites import SUITES, run_suites
from klr.templates import TEMPLATES
from klr.values import DefaultSuiteValues


class Command(ReportCommand):
    """
    Runs the whole acceptance suite and fails iff any check fails.

    Methods:
        - compute(self, quiver, options): Runs the selected suites and tags each row with
          the name of its suite.
    """

    help = "Runs every acceptance check of the library"
    report_name = "verify_all"
    requires_quiver = False
    input_keys = ("only", "random_words")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument(
            "--only",
            action="append",
            choices=[suite.name for suite in SUITES],
            help="Run only this suite; may be repeated.",
        )
        parser.add_argument(
            "--random-words",
            type=int,
            default=settings.KLR_RANDOM_WORDS,
            dest="random_words",
            help="Random words per quiver in the relation suite.",
        )

    def compute(self, quiver, options: dict) -> list[dict]:
        config = replace(
            DefaultSuiteValues(),
            seed=options["seed"],
            truncation=options["truncation"],
            random_words=options["random_words"],
            probe_slack=settings.KLR_PROBE_SLACK,
        )
        results = run_suites(config, options.get("only"))
        rows = []
        for name, suite_rows in results.items():
            passed = sum(row["passed"] for row in suite_rows)
            for row in suite_rows:
                if not row["passed"]:
                    self.stderr.write(
                        TEMPLATES.check_failed.substitute(name=row["check"], params=row["params"])
                    )
            self.stderr.write(
                TEMPLATES.suite_finished.substitute(
                    suite=name, passed=passed, total=len(suite_rows)
                )
            )
            rows.extend({"suite": name} | row for row in suite_rows)
        return rows
