from faker import Faker

from klr.algebra import KLRAlgebra
from klr.quiver import QuiverDatum
from klr.values import COMMUTING_QUIVERS, TEST_QUIVERS

fake = Faker()
fake.seed_instance(0)

A1 = QuiverDatum.from_dict(TEST_QUIVERS["a1"])
A2 = QuiverDatum.from_dict(TEST_QUIVERS["a2"])
JORDAN = QuiverDatum.from_dict(TEST_QUIVERS["jordan"])
TWO_LOOP = QuiverDatum.from_dict(TEST_QUIVERS["two_loop"])
JORDAN_A1 = QuiverDatum.from_dict(TEST_QUIVERS["jordan_a1"])
A1_A1 = QuiverDatum.from_dict(COMMUTING_QUIVERS["a1_a1"])
JORDAN_PLUS_A1 = QuiverDatum.from_dict(COMMUTING_QUIVERS["jordan_plus_a1"])


def algebra_of(quiver: QuiverDatum) -> KLRAlgebra:
    return KLRAlgebra(quiver)
