"""
The acceptance suite run by `verify_all`: one function per family of checks, each
returning report rows built with utils.check_result.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from faker import Faker

from klr.algebra import Generator, KLRAlgebra, ProjectiveLabel
from klr.choices import DimensionMethod, GeneratorKind
from klr.cyclotomic import (
    cyclo_dim_check,
    cyclo_mackey_check,
    double_coset_representatives,
    ef_coefficient_check,
    mackey_decomp_check,
)
from klr.k0 import (
    center_dim_check,
    character_rank,
    commute_intertwiner_check,
    jordan_characters,
    kl_form,
    monomials,
    pairing_agreement_check,
    serre_check,
)
from klr.modules import CharacterVector, nil_hecke_module
from klr.polyrep import PolynomialRepresentation
from klr.qseries import (
    LaurentPolynomial,
    alpha,
    beta,
    center_dim,
    gauss_binom,
    gauss_identity_check,
    qfactorial,
)
from klr.quiver import QuiverDatum, Weight
from klr.symgrp import is_unitriangular, kostka, kostka_matrix, partitions_of
from klr.templates import TEMPLATES
from klr.utils import check_result, parse_weight
from klr.values import COMMUTING_QUIVERS, TEST_QUIVERS, DefaultSuiteValues

logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Rows = list[dict]


def suite_algebra(name: str) -> KLRAlgebra:
    quivers = {**TEST_QUIVERS, **COMMUTING_QUIVERS}
    return KLRAlgebra(QuiverDatum.from_dict(quivers[name]))


def random_weight(quiver: QuiverDatum, faker: Faker, max_height: int) -> Weight:
    height = faker.random_int(1, max_height)
    return Weight.from_sequence(faker.random_element(quiver.vertices) for _ in range(height))


def random_word(weight: Weight, faker: Faker, max_length: int) -> list[Generator]:
    """
    A random composable word in product order. It is drawn in diagram order: an
    optional idempotent at the bottom, dots and crossings, and an optional idempotent
    on top matching the sequence reached.
    """
    n = weight.height
    current = faker.random_element(weight.sequences())
    tokens: list[Generator] = []
    if faker.boolean():
        tokens.append((GeneratorKind.IDEMPOTENT, current))
    kinds = [GeneratorKind.DOT] + ([GeneratorKind.CROSSING] if n > 1 else [])
    for _ in range(faker.random_int(1, max_length)):
        kind = faker.random_element(kinds)
        if kind == GeneratorKind.DOT:
            tokens.append((kind, faker.random_int(1, n)))
        else:
            k = faker.random_int(1, n - 1)
            tokens.append((kind, k))
            current = _swap(current, k)
    if faker.boolean():
        tokens.append((GeneratorKind.IDEMPOTENT, current))
    return list(reversed(tokens))


def _swap(sequence: tuple[str, ...], k: int) -> tuple[str, ...]:
    items = list(sequence)
    items[k - 1], items[k] = items[k], items[k - 1]
    return tuple(items)


def render_word(word: list[Generator]) -> str:
    """The diagram-order text of a product-order word."""
    tokens = []
    for kind, argument in reversed(word):
        if kind == GeneratorKind.IDEMPOTENT:
            tokens.append(f"e({','.join(argument)})")
        else:
            tokens.append(f"{kind}({argument})")
    return " ".join(tokens)


def relation_soundness(config: DefaultSuiteValues) -> Rows:
    """Random words and their normal forms act identically on random polynomials."""
    faker = Faker()
    faker.seed_instance(config.seed)
    rows = []
    for name in sorted(TEST_QUIVERS):
        algebra = suite_algebra(name)
        failures = []
        for _ in range(config.random_words):
            weight = random_weight(algebra.quiver, faker, config.max_height)
            word = random_word(weight, faker, config.max_word_length)
            representation = PolynomialRepresentation(algebra, weight)
            for _ in range(config.probes_per_word):
                vector = representation.random_vector(faker, max_exponent=config.probe_slack)
                if not representation.word_agrees(word, vector):
                    failures.append(render_word(word))
                    break
        rows.append(
            check_result(
                "relation_soundness",
                not failures,
                {"quiver": name, "words": config.random_words, "probes": config.probes_per_word},
                {"words": failures[:5]},
            )
        )
    return rows


def form_values(config: DefaultSuiteValues) -> Rows:
    """
    ([P_i], [P_i]) = 1/(1-q^2) off I0, and the divided powers and Jordan blocks have
    norm prod_(k <= n) 1/(1-q^2k).
    """
    bound = config.form_bound
    cases = [("a1", "i", 1), ("two_loop", "i", 1)]
    cases += [("a1", "i", n) for n in (2, 3)]
    cases += [("jordan", "i", n) for n in range(1, 5)]
    rows = []
    for name, vertex, n in cases:
        algebra = suite_algebra(name)
        label = ProjectiveLabel(((vertex, n),))
        expected = center_dim(n).expand(bound)
        actual = kl_form(algebra, label, label, bound)
        rows.append(
            check_result(
                "form_values",
                expected.agrees_with(actual),
                {"quiver": name, "label": str(label), "bound": bound},
                {"expected": expected, "actual": actual},
            )
        )
    return rows


def pairing_coincidence(config: DefaultSuiteValues, max_height: int = 3) -> Rows:
    """{x, y} = (Gamma x, Gamma y) for every pair of monomials of equal weight."""
    rows = []
    for name in sorted(TEST_QUIVERS):
        algebra = suite_algebra(name)
        candidates = monomials(algebra.cartan, max_height)
        failures = []
        count = 0
        for index, x in enumerate(candidates):
            for y in candidates[index:]:
                if x.weight != y.weight:
                    continue
                count += 1
                if not pairing_agreement_check(algebra, x, y, config.pairing_bound):
                    failures.append(f"{{{x}, {y}}}")
        rows.append(
            check_result(
                "pairing_coincidence",
                not failures,
                {"quiver": name, "pairs": count, "bound": config.pairing_bound},
                {"pairs": failures[:5]},
            )
        )
    return rows


def serre_relations(config: DefaultSuiteValues) -> Rows:
    """Quantum Serre relations for a_ij = -1 and for a_ij = 0."""
    cases = [("a2", "i", "j", 1), ("a2", "j", "i", 1), ("jordan_a1", "j", "i", 1)]
    cases += [("a1_a1", "i", "j", n) for n in (1, 2)]
    cases += [("a1_a1", "j", "i", n) for n in (1, 2)]
    cases += [("jordan_plus_a1", "j", "i", n) for n in (1, 2)]
    rows = []
    for name, i, j, n in cases:
        passed = serre_check(suite_algebra(name), i, j, n, config.serre_bound)
        rows.append(
            check_result(
                "serre",
                passed,
                {"quiver": name, "i": i, "j": j, "n": n, "bound": config.serre_bound},
            )
        )
    return rows


def commuting_blocks(config: DefaultSuiteValues) -> Rows:
    """The block crossings of a_ij = 0 pairs are invertible up to scalars."""
    rows = []
    for name in sorted(COMMUTING_QUIVERS):
        algebra = suite_algebra(name)
        for n in (1, 2):
            for m in (1, 2):
                passed = commute_intertwiner_check(algebra, "i", "j", n, m)
                rows.append(check_result("commute", passed, {"quiver": name, "n": n, "m": m}))
    return rows


def nil_hecke(config: DefaultSuiteValues) -> Rows:
    """Dim V(i^n) = [n]! and e_(i,m) is an idempotent."""
    algebra = suite_algebra("a1")
    rows = []
    for n in range(1, 5):
        module = nil_hecke_module(algebra, "i", n)
        actual = LaurentPolynomial(module.operators.graded_dimension())
        rows.append(
            check_result(
                "nil_hecke_dimension",
                actual == qfactorial(n),
                {"n": n},
                {"expected": qfactorial(n), "actual": actual},
            )
        )
    for m in range(1, 5):
        e = algebra.divided_power_idempotent("i", m)
        rows.append(check_result("divided_power_idempotent", e * e == e, {"m": m}))
    return rows


def expected_jordan_characters(vertex: str = "i") -> dict[tuple[int, ...], CharacterVector]:
    one, two, three = (vertex, 1), (vertex, 2), (vertex, 3)
    unit = LaurentPolynomial.constant(1)
    return {
        (3,): CharacterVector(
            {(three,): unit, (one, two): unit, (two, one): unit, (one, one, one): unit}
        ),
        (2, 1): CharacterVector(
            {(one, two): unit, (two, one): unit, (one, one, one): unit * 2}
        ),
        (1, 1, 1): CharacterVector({(one, one, one): unit}),
    }


def jordan_character_table(config: DefaultSuiteValues) -> Rows:
    """The characters of S^lambda for n = 3 and the rank of the character matrix."""
    algebra = suite_algebra("jordan")
    rows = []
    actual = jordan_characters(algebra, "i", 3)
    for shape, expected in expected_jordan_characters().items():
        rows.append(
            check_result(
                "jordan_character",
                actual[shape] == expected,
                {"shape": shape},
                {"expected": expected, "actual": actual[shape]},
            )
        )
    for n in range(1, 6):
        rank = character_rank(jordan_characters(algebra, "i", n).values())
        size = len(partitions_of(n))
        rows.append(
            check_result(
                "character_rank", rank == size, {"n": n}, {"rank": rank, "partitions": size}
            )
        )
    return rows


def kostka_table(config: DefaultSuiteValues, n_max: int = 6) -> Rows:
    """Ranks of Young symmetrizers on Specht modules are the Kostka numbers."""
    rows = []
    for n in range(1, n_max + 1):
        shapes = partitions_of(n)
        ranks = kostka_matrix(n)
        oracle = [[kostka(mu, lam) for mu in shapes] for lam in shapes]
        rows.append(
            check_result(
                "kostka",
                ranks == oracle and is_unitriangular(ranks),
                {"n": n},
                {"ranks": ranks, "kostka": oracle},
            )
        )
    return rows


def q_identities(config: DefaultSuiteValues) -> Rows:
    rows = []
    for p in range(1, 7):
        for a in range(1, 5):
            rows.append(
                check_result("gauss_identity", gauss_identity_check(p, a), {"p": p, "a": a})
            )
            normalized = alpha(p, a) * LaurentPolynomial.monomial(p * a)
            rows.append(
                check_result(
                    "alpha_beta",
                    normalized == beta(p, a),
                    {"p": p, "a": a},
                    {"alpha": normalized, "beta": beta(p, a)},
                )
            )
    for n in range(1, 13):
        for m in range(1, n + 1):
            pascal = LaurentPolynomial.monomial(m) * gauss_binom(n, m) + gauss_binom(n, m - 1)
            rows.append(
                check_result("gauss_pascal", gauss_binom(n + 1, m) == pascal, {"n": n, "m": m})
            )
    for a in range(1, 4):
        for p in range(1, 5):
            rows.append(
                check_result("ef_coefficients", ef_coefficient_check(p, p, a), {"a": a, "p": p})
            )
    return rows


def cyclotomic_dimensions(config: DefaultSuiteValues) -> Rows:
    cases = [(1, n) for n in range(1, 5)] + [(2, n) for n in range(1, 4)]
    return [
        check_result("cyclo_dim", cyclo_dim_check(a, n, config.truncation), {"a": a, "n": n})
        for a, n in cases
    ]


def mackey(config: DefaultSuiteValues) -> Rows:
    bound = config.mackey_bound
    rows = []
    for n in range(3):
        for ell in (1, 2):
            passed = mackey_decomp_check(n, ell, ell, bound, DimensionMethod.COINVARIANT)
            params = {"n": n, "l": ell, "t": ell, "bound": bound}
            rows.append(check_result("mackey", passed, params))
    for n in (1, 2):
        passed = cyclo_mackey_check(2, n, 1, 1, bound)
        params = {"a": 2, "n": n, "l": 1, "t": 1, "bound": bound}
        rows.append(check_result("cyclo_mackey", passed, params))
    for n in range(1, 6):
        for ell in range(1, 7 - n):
            count = len(double_coset_representatives(n, ell))
            rows.append(
                check_result(
                    "double_cosets",
                    count == min(n, ell) + 1,
                    {"n": n, "l": ell},
                    {"count": count},
                )
            )
    return rows


def centers(config: DefaultSuiteValues) -> Rows:
    cases = [("a1", "i"), ("jordan", "i"), ("jordan", "2i"), ("a2", "i+j"), ("a2", "2i+j")]
    rows = []
    for name, text in cases:
        algebra = suite_algebra(name)
        weight = parse_weight(text, algebra.quiver)
        passed = center_dim_check(algebra, weight, config.center_bound)
        rows.append(
            check_result(
                "center",
                passed,
                {"quiver": name, "weight": text, "bound": config.center_bound},
            )
        )
    return rows


def sigma_presentation(config: DefaultSuiteValues) -> Rows:
    cases = [("jordan", 2), ("jordan", 3), ("two_loop", 2)]
    rows = []
    for name, n in cases:
        passed = suite_algebra(name).sigma_presentation_check(Weight({"i": n}))
        rows.append(check_result("sigma_presentation", passed, {"quiver": name, "weight": f"{n}i"}))
    return rows


@dataclass(frozen=True)
class Suite:
    """
    A named family of acceptance checks.

    Attributes:
    - name (str): Name used by `verify_all --only`.
    - run (Callable): Function from the suite configuration to report rows.
    """

    name: str
    run: Callable[[DefaultSuiteValues], Rows]


SUITES: tuple[Suite, ...] = (
    Suite("relations", relation_soundness),
    Suite("forms", form_values),
    Suite("pairing", pairing_coincidence),
    Suite("serre", serre_relations),
    Suite("commute", commuting_blocks),
    Suite("nil_hecke", nil_hecke),
    Suite("characters", jordan_character_table),
    Suite("kostka", kostka_table),
    Suite("q_identities", q_identities),
    Suite("cyclotomic", cyclotomic_dimensions),
    Suite("mackey", mackey),
    Suite("center", centers),
    Suite("sigma", sigma_presentation),
)


def run_suites(config: DefaultSuiteValues, names: list[str] | None = None) -> dict[str, Rows]:
    """
    Runs the selected suites in order.
    :param config: DefaultSuiteValues
    :param names: names of the suites to run; all when None
    :return: map from suite name to its rows
    """
    unknown = set(names or ()) - {suite.name for suite in SUITES}
    if unknown:
        raise ValueError(f"Unknown suites {sorted(unknown)}")
    results = {}
    for suite in SUITES:
        if names and suite.name not in names:
            continue
        logger.info(TEMPLATES.suite_started.substitute(suite=suite.name))
        rows = suite.run(config)
        passed = sum(row["passed"] for row in rows)
        logger.info(
            TEMPLATES.suite_finished.substitute(suite=suite.name, passed=passed, total=len(rows))
        )
        results[suite.name] = rows
    return results
