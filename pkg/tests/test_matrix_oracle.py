import random
from fractions import Fraction

import pytest

from orbitgraph.matrix_oracle import (
    ExactMatrix,
    GaussQ,
    I_UNIT,
    NotNilpotentError,
    add_two,
    admissible_row_sets,
    bareiss_rank,
    block_power_identity,
    build_induced_pair,
    dominates,
    field_rank,
    in_unitary_algebra,
    jordan_type,
    verify_induction,
)
from orbitgraph.partitions import Partition, ShapeError, partitions_of


def test_jordan_type_examples():
    assert jordan_type(ExactMatrix.jordan([3, 1])) == Partition((3, 1))
    assert jordan_type(ExactMatrix.zeros(4)) == Partition((1, 1, 1, 1))
    assert jordan_type(ExactMatrix.jordan([2, 2])) == Partition((2, 2))


def test_jordan_type_rejects_non_nilpotent():
    with pytest.raises(NotNilpotentError):
        jordan_type(ExactMatrix.identity(3))
    m = ExactMatrix.jordan([2])
    m[1, 0] = 1
    with pytest.raises(NotNilpotentError):
        jordan_type(m)


def test_bareiss_matches_field_elimination():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 6)
        rows = [[GaussQ(Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-2, 2)))
                 if rng.random() < 0.5 else GaussQ() for _ in range(n)] for _ in range(n)]
        if rng.random() < 0.3 and n > 1:
            rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % n])]
        m = ExactMatrix(rows)
        assert bareiss_rank(m) == field_rank(m)


@pytest.mark.parametrize("lp, R, h, expected", [
    ((1,), (1,), 1, (3,)),
    ((2, 1), (1,), 1, (4, 1)),
    ((2, 2), (1, 2), 2, (4, 4)),
])
def test_build_induced_pair_examples(lp, R, h, expected):
    pair = build_induced_pair(Partition(lp), R, h)
    assert jordan_type(pair.total()) == Partition(expected)
    assert in_unitary_algebra(pair.X, pair.form)
    assert in_unitary_algebra(pair.Xi, pair.form)


def test_build_induced_pair_errors():
    with pytest.raises(ValueError, match="duplicate"):
        build_induced_pair(Partition((2, 1)), (1, 1), 2)
    with pytest.raises(ValueError, match="exceeds"):
        build_induced_pair(Partition((2, 1)), (1, 2), 1)
    with pytest.raises(ValueError, match="range"):
        build_induced_pair(Partition((2, 1)), (4,), 1)


def test_signs_do_not_change_jordan_type():
    lp = Partition((3, 2, 2, 1))
    for signs in ([1, 1, 1, 1], [-1, 1, -1, 1], [-1, -1, -1, -1]):
        for R in admissible_row_sets(lp, 2):
            pair = build_induced_pair(lp, R, 2, signs=signs)
            assert in_unitary_algebra(pair.Xi, pair.form)
            assert jordan_type(pair.total()) == add_two(lp, R, 2)


def test_verify_induction_examples():
    rep = verify_induction(Partition((2, 1)), 1)
    assert rep.ok
    assert {str(got) for _, got, _ in rep.outcomes} == {"4,1", "3,2", "2,2,1"}
    assert rep.maximum == Partition((4, 1))
    rep = verify_induction(Partition(()), 1)
    assert [got for _, got, _ in rep.outcomes] == [Partition((2,))]
    assert verify_induction(Partition((1, 1)), 2).maximum == Partition((3, 3))
    with pytest.raises(ShapeError):
        verify_induction(Partition((5, 5)), 4)


def test_block_power_identity_random():
    rng = random.Random(3)
    for k in range(2, 6):
        for _ in range(3):
            h, n = rng.randint(1, 2), rng.randint(1, 3)
            r = lambda a, b: [[rng.randint(-2, 2) for _ in range(b)] for _ in range(a)]
            assert block_power_identity(r(n, n), r(h, n), r(n, h), r(h, h), k)


def test_nilpotency_grows_by_two():
    for n in range(1, 7):
        for lp in partitions_of(n):
            if len(lp) > 3:
                continue
            pair = build_induced_pair(lp, (1,), 1)
            N = pair.total()
            k = lp.parts[0]
            assert not N.power(k + 1).is_zero() and N.power(k + 2).is_zero()


def test_dominance():
    assert dominates(Partition((4, 1)), Partition((3, 2)))
    assert not dominates(Partition((3, 3)), Partition((4, 1, 1)))
    assert dominates(Partition((2, 2)), Partition((2, 1, 1)))


def test_gaussian_arithmetic():
    assert I_UNIT * I_UNIT == GaussQ(Fraction(-1))
    assert (I_UNIT + 1).conj() == GaussQ(Fraction(1), Fraction(-1))
