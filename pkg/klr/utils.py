import csv
import io
import json
import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

from django.core.exceptions import ValidationError

from .choices import OutputFormat
from .quiver import QuiverDatum, Weight, load_quiver
from .templates import TEMPLATES
from .values import CONVENTIONS, QUIVERS_DIR, REPORT_SCHEMA

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

WEIGHT_TERM = re.compile(r"^(\d*)\s*([^\d\s+][^\s+]*)$")


def bundled_quivers() -> list[str]:
    """Names of the quiver files shipped in the quivers directory."""
    return sorted(path.stem for path in QUIVERS_DIR.glob("*.json"))


def resolve_quiver(value: str) -> QuiverDatum:
    """
    Loads a quiver from a file path or from the name of a bundled quiver.
    :param value: path of a quiver file, or a bundled name such as "jordan"
    :return: QuiverDatum
    """
    path = Path(value)
    if path.is_file():
        return load_quiver(path)
    bundled = QUIVERS_DIR / f"{value}.json"
    if bundled.is_file():
        return load_quiver(bundled)
    logger.info(f"Quiver {value} not found")
    raise ValidationError(
        {
            "quiver": [
                TEMPLATES.unknown_quiver.substitute(
                    value=value, names=", ".join(bundled_quivers())
                )
            ]
        }
    )


def parse_weight(text: str, quiver: QuiverDatum) -> Weight:
    """
    Reads a weight written as a sum of vertices with multiplicities, e.g. "2i+j".
    :param text: str
    :param quiver: QuiverDatum whose vertices may appear
    :return: Weight
    """
    counts: dict[str, int] = {}
    for term in text.split("+"):
        match = WEIGHT_TERM.match(term.strip())
        if not match:
            raise ValidationError(
                {"weight": [TEMPLATES.invalid_weight.substitute(term=repr(term), value=text)]}
            )
        count, vertex = match.groups()
        if vertex not in quiver.vertices:
            raise ValidationError({"weight": [f"Unknown vertex {vertex!r} in {text!r}"]})
        counts[vertex] = counts.get(vertex, 0) + (int(count) if count else 1)
    return Weight(counts)


def parse_sequence(text: str, quiver: QuiverDatum) -> tuple[str, ...]:
    """Reads a comma-separated sequence of vertices, e.g. "i,j,i"."""
    sequence = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [vertex for vertex in sequence if vertex not in quiver.vertices]
    if not sequence or unknown:
        raise ValidationError({"sequence": [f"Sequence {text!r} names unknown vertices {unknown}"]})
    return sequence


def to_plain(value):
    """Converts library values into JSON-compatible data."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, Mapping):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    return value


def check_result(name: str, passed: bool, params: Mapping | None = None, witness=None) -> dict:
    """
    One row of a report for a verifier.
    :param name: name of the check
    :param passed: outcome
    :param params: parameters of the instance
    :param witness: values explaining a failure; dropped when the check passes
    :return: dict
    """
    row = {"check": name, "params": to_plain(dict(params or {})), "passed": bool(passed)}
    if not passed and witness is not None:
        row["witness"] = to_plain(witness)
    return row


def failed_checks(results: Iterable[dict]) -> list[dict]:
    return [row for row in results if row.get("passed") is False]


def build_report(
    command: str, inputs: Mapping, results: list[dict], schema: str = REPORT_SCHEMA
) -> dict:
    """
    The report document: schema tag, input echo, conventions and results.
    :param command: name of the subcommand
    :param inputs: the options that determine the computation
    :param results: rows produced by the subcommand
    :param schema: schema tag of the report format
    :return: dict
    """
    return {
        "schema": schema,
        "command": command,
        "input": to_plain(dict(inputs)),
        "conventions": CONVENTIONS,
        "results": [to_plain(row) for row in results],
        "passed": not failed_checks(results),
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(report: dict) -> str:
    """
    One CSV row per result; nested values are written as compact JSON. The schema and
    the conventions go into leading comment lines.
    """
    rows = report["results"]
    columns = sorted({key for row in rows for key in row})
    buffer = io.StringIO()
    buffer.write(f"# schema: {report['schema']}\n")
    for key, value in sorted(report["conventions"].items()):
        buffer.write(f"# {key}: {value}\n")
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                key: (
                    value
                    if isinstance(value, (str, int, bool))
                    else json.dumps(value, sort_keys=True)
                )
                for key, value in row.items()
            }
        )
    return buffer.getvalue()


def render_report(report: dict, output_format: str) -> str:
    if output_format == OutputFormat.CSV:
        return render_csv(report)
    return render_json(report)
