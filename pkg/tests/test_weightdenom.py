import pickle
import random
from fractions import Fraction

import pytest

from su21.cocycle import COVER_IDENTITY
from su21.fpgroup import (
    IndexOverflowError,
    Presentation,
    Word,
    upsilon_presentation,
)
from su21.matgroup import IDENTITY, SubgroupSpec, generators_upsilon
from su21.weightdenom import (
    DenominatorReport,
    InfiniteOrderError,
    central_commutator_witness,
    lift_word,
    multiplier_system_exists,
    relation_matrix,
    weight_denominator,
    weight_denominator_of,
)
from helpers import random_word

GENERATORS = generators_upsilon()
UPSILON = upsilon_presentation()


def test_lift_word_is_multiplicative():
    rng = random.Random(30)
    for _ in range(60):
        u = random_word(rng, 8)
        v = random_word(rng, 8)
        lu = lift_word(u, GENERATORS)
        lv = lift_word(v, GENERATORS)
        luv = lift_word(u * v, GENERATORS)
        # u * v free-reduces before lifting, so the products agree because
        # the lift of a generator followed by its inverse is the identity.
        assert luv == lu * lv


def test_lift_of_empty_word():
    assert lift_word(Word(()), GENERATORS) == COVER_IDENTITY


def test_relator_lifts_are_central_integers():
    for relator in UPSILON.relators:
        lift = lift_word(relator, UPSILON.images)
        assert lift.g == IDENTITY


def test_relator_lift_invariants():
    rng = random.Random(31)
    for relator in UPSILON.relators:
        n = lift_word(relator, UPSILON.images).n
        # inverse word lifts to the inverse central element
        assert lift_word(relator.inverse(), UPSILON.images).n == -n
        # cyclic shifts are conjugates, and (I, n) is central
        for _ in range(3):
            k = rng.randrange(len(relator.letters))
            shifted = relator.cyclic_shift(k)
            assert lift_word(shifted, UPSILON.images).n == n


def test_relation_matrix_shape_and_rows():
    m = relation_matrix(UPSILON)
    assert m.shape == (13, 6)
    for row, relator in zip(m.entries, UPSILON.relators):
        assert list(row[:5]) == relator.exponent_sums(5)
        assert row[5] == -lift_word(relator, UPSILON.images).n


def test_relation_matrix_needs_images():
    abstract = Presentation(("a",), (Word(((0, 1), (0, 1), (0, 1))),))
    with pytest.raises(ValueError):
        relation_matrix(abstract)


def test_upsilon_denominator_is_one():
    report = weight_denominator(UPSILON, group="upsilon", index_in_upsilon=1)
    assert report.weight_denominator == 1
    assert report.torsion_invariants == (3, 3, 3)
    assert report.free_rank == 2
    assert report.generator_count == 5
    assert report.relator_count == 13


def test_upsilon_invariants_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    m = relation_matrix(UPSILON)
    sm = sympy_snf(sympy.Matrix([list(r) for r in m.entries]))
    diag = [abs(int(sm[i, i])) for i in range(min(sm.rows, sm.cols))]
    nontrivial = sorted(d for d in diag if d > 1)
    zeros = sum(1 for d in diag if d == 0)
    assert nontrivial == [3, 3, 3]
    # cokernel free rank = columns - rank
    assert (m.cols - (len(diag) - zeros)) == 2


def test_central_commutator_witness():
    word = central_commutator_witness()
    assert len(word.letters) == 40
    assert word.exponent_sums(5) == [0, 0, 0, 0, 0]
    lift = lift_word(word, UPSILON.images)
    assert lift.g == IDENTITY
    assert lift.n == -1


def test_weight_denominator_of_upsilon():
    report = weight_denominator_of(SubgroupSpec.parse("upsilon"))
    assert report.group == "upsilon"
    assert report.index_in_upsilon == 1
    assert report.weight_denominator == 1


def test_weight_denominator_of_gamma_sqrt3_routes_through_complement():
    report = weight_denominator_of(SubgroupSpec.parse("gamma_sqrt3"))
    assert report.weight_denominator == 1
    assert report.index_in_upsilon is None
    assert report.torsion_invariants == (3, 3, 3)
    assert len(report.notes) == 1
    assert "scalar center" in report.notes[0]


def test_weight_denominator_of_index3_subgroup():
    report = weight_denominator_of(SubgroupSpec.parse("index3:1,0,0,0"))
    assert report.weight_denominator == 3
    assert report.index_in_upsilon == 3
    assert report.generator_count == 11
    assert report.relator_count == 37
    assert report.torsion_invariants == (3, 3, 9)


def test_weight_denominator_of_respects_max_index():
    with pytest.raises(IndexOverflowError):
        weight_denominator_of(SubgroupSpec.parse("index3:1,0,0,0"), max_index=2)


def test_infinite_order_raises():
    # A free group on one matrix generator: no relators, so the central
    # generator's class is free and has no finite order.
    free = Presentation(("a",), (), images=(GENERATORS[0],))
    with pytest.raises(InfiniteOrderError):
        weight_denominator(free)


def test_multiplier_system_exists():
    upsilon = SubgroupSpec.parse("upsilon")
    assert multiplier_system_exists(upsilon, Fraction(1))
    assert multiplier_system_exists(upsilon, 4)
    assert not multiplier_system_exists(upsilon, Fraction(1, 3))
    sub = SubgroupSpec.parse("index3:1,0,0,0")
    assert multiplier_system_exists(sub, Fraction(1, 3))
    assert multiplier_system_exists(sub, Fraction(2, 3))
    assert multiplier_system_exists(sub, Fraction(5))
    assert not multiplier_system_exists(sub, Fraction(1, 2))
    assert not multiplier_system_exists(sub, Fraction(1, 9))


def test_report_immutable_pickle_json():
    report = weight_denominator_of(SubgroupSpec.parse("upsilon"))
    with pytest.raises(AttributeError):
        report.weight_denominator = 5
    clone = pickle.loads(pickle.dumps(report))
    assert clone.weight_denominator == report.weight_denominator
    assert clone.torsion_invariants == report.torsion_invariants
    assert clone.group == report.group
    d = report.to_json_dict()
    assert d["weight_denominator"] == 1
    assert d["torsion_invariants"] == [3, 3, 3]
    assert d["free_rank"] == 2
    assert d["group"] == "upsilon"
    assert d["index_in_upsilon"] == 1
    assert d["generator_count"] == 5
    assert d["relator_count"] == 13
    assert d["notes"] == []
    assert "DenominatorReport" in repr(report)
