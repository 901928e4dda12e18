import csv
import io
import json
import tempfile
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from klr.choices import OutputFormat
from klr.qseries import ONE, LaurentPolynomial
from klr.quiver import Weight, dump_quiver
from klr.utils import (
    build_report,
    bundled_quivers,
    check_result,
    failed_checks,
    parse_sequence,
    parse_weight,
    render_report,
    resolve_quiver,
    to_plain,
)
from klr.values import CONVENTIONS, REPORT_SCHEMA

from .values import A2, JORDAN, fake


class TestResolveQuiver(SimpleTestCase):
    def test_bundled_names(self):
        """Every bundled quiver loads by name."""
        for name in bundled_quivers():
            with self.subTest(name=name):
                self.assertTrue(resolve_quiver(name).vertices)
        self.assertEqual(resolve_quiver("jordan"), JORDAN)

    def test_file_path(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "quiver.json"
            path.write_text(dump_quiver(A2), encoding="utf-8")
            self.assertEqual(resolve_quiver(str(path)), A2)

    @patch("klr.utils.logger")
    def test_unknown_quiver(self, mock_logger):
        """An unknown name lists the bundled quivers under `quiver`."""
        name = fake.word()
        with self.assertRaises(ValidationError) as context:
            resolve_quiver(f"missing-{name}")
        message = context.exception.message_dict["quiver"][0]
        self.assertIn("jordan", message)
        mock_logger.info.assert_called_once()


class TestParseWeight(SimpleTestCase):
    def test_sum_of_vertices(self):
        self.assertEqual(parse_weight("2i+j", A2), Weight({"i": 2, "j": 1}))
        self.assertEqual(parse_weight("i + i", A2), Weight({"i": 2}))

    def test_unknown_vertex(self):
        with self.assertRaises(ValidationError) as context:
            parse_weight("i+k", A2)
        self.assertIn("weight", context.exception.message_dict)

    def test_malformed_term(self):
        with self.assertRaises(ValidationError) as context:
            parse_weight("2i++j", A2)
        self.assertIn("weight", context.exception.message_dict)

    def test_sequence(self):
        self.assertEqual(parse_sequence("i, j,i", A2), ("i", "j", "i"))
        with self.assertRaises(ValidationError):
            parse_sequence("i,k", A2)
        with self.assertRaises(ValidationError):
            parse_sequence("", A2)


class TestReports(SimpleTestCase):
    def test_check_result_keeps_witness_on_failure(self):
        """The witness is only written for failed checks."""
        passed = check_result("pairing", True, {"n": 2}, {"expected": ONE})
        failed = check_result("pairing", False, {"n": 2}, {"expected": ONE})
        self.assertNotIn("witness", passed)
        self.assertEqual(failed["witness"], {"expected": ONE.to_json()})
        self.assertEqual(failed_checks([passed, failed]), [failed])

    def test_to_plain(self):
        self.assertEqual(to_plain(Fraction(3, 1)), 3)
        self.assertEqual(to_plain(Fraction(1, 2)), "1/2")
        self.assertEqual(to_plain({("i", 1): [Fraction(2)]}), {"('i', 1)": [2]})

    def test_json_report(self):
        rows = [check_result("kostka", True, {"n": 3})]
        report = build_report("kostka", {"n": 3}, rows)
        document = json.loads(render_report(report, OutputFormat.JSON))
        self.assertEqual(document["schema"], REPORT_SCHEMA)
        self.assertEqual(document["conventions"], CONVENTIONS)
        self.assertTrue(document["passed"])
        self.assertEqual(document["results"][0]["params"], {"n": 3})

    def test_failed_report(self):
        rows = [check_result("serre", False, {"i": "i"}, {"left": LaurentPolynomial.monomial(2)})]
        report = build_report("serre_check", {}, rows)
        self.assertFalse(report["passed"])

    def test_csv_report(self):
        """Comment lines carry the schema; nested values become JSON."""
        rows = [check_result("kostka", True, {"n": n}) for n in (1, 2)]
        text = render_report(build_report("kostka", {"n": 2}, rows), OutputFormat.CSV)
        lines = text.splitlines()
        self.assertEqual(lines[0], f"# schema: {REPORT_SCHEMA}")
        body = [line for line in lines if not line.startswith("#")]
        records = list(csv.DictReader(io.StringIO("\n".join(body))))
        self.assertEqual(len(records), 2)
        self.assertEqual(json.loads(records[1]["params"]), {"n": 2})
        self.assertEqual(records[0]["passed"], "True")
