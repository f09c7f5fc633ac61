import pytest

from orbitgraph.partitions import PairType, Partition, partitions_of
from orbitgraph.series import (
    TruncatedSeries,
    TruncationError,
    coefficient,
    factors_agree,
    genfunc,
    primitive_factors,
    product_factors,
)
from orbitgraph.signed_diagrams import enumerate_syd

from conftest import AIII, CI


@pytest.fixture(scope="module")
def aiii():
    return genfunc(AIII, 6)


def test_aiii_examples(aiii):
    assert coefficient(aiii, Partition((1,)), 1, 0) == 1
    assert coefficient(aiii, Partition((2,)), 1, 1) == 2
    assert coefficient(aiii, Partition((2, 2)), 2, 2) == 3
    assert coefficient(aiii, Partition((1,)), 0, 1) == 1


def test_ci_example():
    assert coefficient(genfunc(CI, 4), Partition((1, 1)), 1, 1) == 1


def test_out_of_truncation(aiii):
    with pytest.raises(TruncationError):
        coefficient(aiii, Partition((4, 3)), 4, 3)
    with pytest.raises(ValueError):
        genfunc(AIII, 0)


def test_factor_lists_follow_primitives():
    for t in PairType:
        for N in (1, 4, 9):
            assert factors_agree(t, N), t


def test_series_from_primitive_factors_is_identical():
    for t in PairType:
        assert genfunc(t, 8) == genfunc(t, 8, factors=primitive_factors(t, 8))


def test_truncation_and_sign_bound():
    s = genfunc(AIII, 7)
    for key, c in s.coeffs.items():
        assert c > 0
        assert s.weight(key) <= 7
        assert key[0] + key[1] == s.weight(key)


def test_shape_totals():
    # summing a^p b^q over p + q = n gives the number of diagrams of each shape
    for t in PairType:
        s = genfunc(t, 8)
        for n in range(1, 9):
            for lam in partitions_of(n):
                total = sum(coefficient(s, lam, p, n - p) for p in range(n + 1))
                brute = sum(len(enumerate_syd(t, lam, p, q)) for p, q in t.signatures(n))
                assert total == brute


def test_series_multiplication():
    one = TruncatedSeries.one(3)
    x = one.times_geometric(one.monomial(1, 0, {1: 1}))  # 1/(1 - a t1)
    sq = x * x
    assert sq.coeffs[(2, 0, 2, 0, 0)] == 3
    assert (x * one) == x
    with pytest.raises(ValueError):
        x * TruncatedSeries.one(4)
