import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from .choices import OutputFormat
from .quiver import QuiverDatum
from .templates import TEMPLATES
from .utils import build_report, failed_checks, render_report, resolve_quiver

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class ReportCommand(BaseCommand):
    """
    A base class for the commands that compute something and write a report.

    Attributes:
        report_name (str): Name of the subcommand written into the report.
        requires_quiver (bool): Whether --quiver must be given.
        input_keys (tuple[str]): Options echoed into the report besides the shared ones.

    Methods:
        add_report_arguments: Adds the options of the subcommand.
        compute: Returns the result rows of the subcommand.
        handle: Parses the shared options, runs compute, writes the report and fails
            when any check failed.
    """

    report_name: str = ""
    requires_quiver: bool = True
    input_keys: tuple[str, ...] = ()

    def add_arguments(self, parser) -> None:
        parser.add_argument("--quiver", help="Path of a quiver file or a bundled quiver name.")
        parser.add_argument(
            "--truncation",
            type=int,
            default=settings.KLR_TRUNCATION,
            help="Degree bound D of truncated computations.",
        )
        parser.add_argument(
            "--format", choices=OutputFormat.values, default=OutputFormat.JSON, dest="output_format"
        )
        parser.add_argument("--seed", type=int, default=settings.KLR_SEED)
        parser.add_argument("--output", help="File to write the report to; stdout by default.")
        self.add_report_arguments(parser)

    def add_report_arguments(self, parser) -> None:
        pass

    def compute(self, quiver: QuiverDatum | None, options: dict) -> list[dict]:
        raise NotImplementedError

    def handle(self, *args, **options) -> None:
        """
        Runs the subcommand and writes its report.
        :param args: Positional arguments
        :param options: Parsed options
        :return: None
        """
        if options["truncation"] < 0:
            raise CommandError(TEMPLATES.invalid_truncation.substitute(value=options["truncation"]))
        try:
            quiver = self._quiver(options)
            results = self.compute(quiver, options)
        except ValidationError as e:
            raise CommandError(self._describe(e))
        except ValueError as e:
            logger.info(e)
            raise CommandError(TEMPLATES.invalid_input.substitute(field="input", message=e))

        keys = ("quiver", "truncation", "seed") + self.input_keys
        inputs = {key: options.get(key) for key in keys}
        report = build_report(self.report_name, inputs, results, settings.KLR_REPORT_SCHEMA)
        text = render_report(report, options["output_format"])
        if options.get("output"):
            Path(options["output"]).write_text(text)
            self.stderr.write(
                TEMPLATES.report_written.substitute(schema=report["schema"], path=options["output"])
            )
        else:
            self.stdout.write(text, ending="")

        failures = failed_checks(results)
        if failures:
            names = ", ".join(sorted({row["check"] for row in failures}))
            raise CommandError(
                TEMPLATES.checks_failed.substitute(
                    failed=len(failures), total=len(results), names=names
                )
            )

    def _quiver(self, options: dict) -> QuiverDatum | None:
        if options.get("quiver"):
            return resolve_quiver(options["quiver"])
        if self.requires_quiver:
            raise CommandError(TEMPLATES.missing_quiver.substitute(command=self.report_name))
        return None

    @staticmethod
    def _describe(error: ValidationError) -> str:
        if hasattr(error, "error_dict"):
            return "; ".join(
                TEMPLATES.invalid_input.substitute(field=field, message=" ".join(messages))
                for field, messages in sorted(error.message_dict.items())
            )
        return TEMPLATES.invalid_input.substitute(field="input", message=" ".join(error.messages))
