from klr.algebra import KLRAlgebra
from klr.bases import ReportCommand
from klr.choices import GeneratorKind
from klr.cyclotomic import CycloAlgebra
from klr.quiver import Weight
from klr.utils import parse_weight


class Command(ReportCommand):
    """
    Rewrites a word in the generators e(...), x(k), t(k) into its normal form.

    The word is read in diagram order, bottom to top. With --level the word is
    reduced in the cyclotomic quotient of the Jordan quiver.
    """

    help = "Prints the normal form of a diagram word, e.g. --word 'e(i,j) x(1) t(1)'"
    report_name = "normal_form"
    input_keys = ("word", "weight", "level")

    def add_report_arguments(self, parser) -> None:
        parser.add_argument("--word", required=True, help="Tokens e(i1,...,in), x(k), t(k).")
        parser.add_argument("--weight", help="Weight of a word without idempotents, e.g. 2i+j.")
        parser.add_argument("--level", type=int, help="Level a of the cyclotomic quotient.")

    def compute(self, quiver, options: dict) -> list[dict]:
        algebra = KLRAlgebra(quiver)
        weight = parse_weight(options["weight"], quiver) if options.get("weight") else None
        if options.get("level") is not None:
            cyclo = CycloAlgebra(options["level"], algebra)
            if weight is None:
                word, _ = algebra.parse_word(options["word"])
                sequences = [
                    argument for kind, argument in word if kind == GeneratorKind.IDEMPOTENT
                ]
                if not sequences:
                    raise ValueError("A word without idempotents needs --weight")
                weight = Weight.from_sequence(sequences[0])
            element = cyclo.evaluate_diagram(options["word"], weight.height)
        else:
            element = algebra.evaluate_diagram(options["word"], weight)
        return [
            {
                "word": options["word"],
                "weight": str(element.weight),
                "normal_form": str(element),
                "terms": element.to_json(),
            }
        ]
