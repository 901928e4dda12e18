from dataclasses import dataclass
from pathlib import Path

QUIVERS_DIR: Path = Path(__file__).resolve().parent / "quivers"

REPORT_SCHEMA: str = "klr-report/1"

CONVENTIONS: dict = {
    "reduced_expression": "lexicographically smallest reduced word of each permutation",
    "orientation": "words are read bottom to top; the product x*y stacks x on top of y",
    "dots": "basis words x^r tau_w 1_i carry their dots on top of the crossings",
    "word_syntax": "whitespace-separated tokens e(i1,...,in), x(k), t(k), bottom to top",
    "grading": "Dim M = sum_d dim(M_d) q^d and Dim M{m} = q^m Dim M",
}

# Quivers of the acceptance suites, in the format of the quiver files.
TEST_QUIVERS: dict[str, dict] = {
    "a1": {"vertices": ["i"], "loops": {}, "arrows": []},
    "a2": {"vertices": ["i", "j"], "loops": {}, "arrows": [["i", "j"]]},
    "jordan": {"vertices": ["i"], "loops": {"i": 1}, "arrows": []},
    "two_loop": {"vertices": ["i"], "loops": {"i": 2}, "arrows": []},
    "jordan_a1": {"vertices": ["i", "j"], "loops": {"i": 1}, "arrows": [["j", "i"]]},
}

# Quivers with a_ij = 0 between two vertices, for the commutation isomorphisms.
COMMUTING_QUIVERS: dict[str, dict] = {
    "a1_a1": {"vertices": ["i", "j"], "loops": {}, "arrows": []},
    "jordan_plus_a1": {"vertices": ["i", "j"], "loops": {"i": 1}, "arrows": []},
    "jordan_jordan": {"vertices": ["i", "j"], "loops": {"i": 1, "j": 1}, "arrows": []},
}


@dataclass(frozen=True)
class DefaultSuiteValues:
    """
    Default parameters of the command-line surface and the acceptance suite.

    Attributes:
    - truncation (int): Default degree bound D of every truncated computation.
    - seed (int): Seed of the random words and probes.
    - probe_slack (int): Slack added to the probe exponent bound.
    - random_words (int): Random words per quiver in the relation suite.
    - probes_per_word (int): Random polynomial probes per word.
    - max_height (int): Largest height of a random weight.
    - max_word_length (int): Largest number of generators of a random word.
    - form_bound (int): Truncation of the form values.
    - pairing_bound (int): Truncation of the pairing comparisons.
    - serre_bound (int): Truncation of the Serre comparisons.
    - center_bound (int): Truncation of the center comparisons.
    - mackey_bound (int): Truncation of the Mackey comparisons.

    This class is immutable, so its values cannot be modified after instantiation.
    """

    truncation: int = 20
    seed: int = 0
    probe_slack: int = 4
    random_words: int = 300
    probes_per_word: int = 20
    max_height: int = 4
    max_word_length: int = 6
    form_bound: int = 40
    pairing_bound: int = 24
    serre_bound: int = 16
    center_bound: int = 20
    mackey_bound: int = 10
