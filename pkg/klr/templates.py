from dataclasses import dataclass
from string import Template


@dataclass
class ReportTemplates:
    """Class to hold all the texts written by the management commands."""

    check_failed: Template
    checks_failed: Template
    report_written: Template
    unknown_quiver: Template
    missing_quiver: Template
    invalid_weight: Template
    invalid_truncation: Template
    invalid_input: Template
    suite_started: Template
    suite_finished: Template


TEMPLATES = ReportTemplates(
    check_failed=Template("FAIL $name $params"),
    checks_failed=Template("$failed of $total checks failed: $names"),
    report_written=Template("Report $schema written to $path"),
    unknown_quiver=Template(
        "Quiver $value is neither a readable file nor one of the bundled quivers: $names"
    ),
    missing_quiver=Template("The command $command needs --quiver"),
    invalid_weight=Template("Term $term of the weight $value is not of the form <count><vertex>"),
    invalid_truncation=Template("The truncation must be nonnegative, got $value"),
    invalid_input=Template("Invalid $field: $message"),
    suite_started=Template("Running $suite ..."),
    suite_finished=Template("$suite: $passed/$total checks passed"),
)
