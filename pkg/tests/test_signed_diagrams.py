import itertools

import pytest

from orbitgraph.partitions import PairType, Partition, SignatureError, partitions_of
from orbitgraph.signed_diagrams import (
    MINUS,
    PLUS,
    SignedDiagram,
    VectorError,
    brute_force_syd,
    enumerate_syd,
    from_pi,
    pi_vector,
    primitive_set,
    tiles_by_primitives,
    valid_vectors,
)

from conftest import AIII, BDI, CI, CII


def test_parse_and_canonical_order(D):
    d = D("-+/+-+/+-")
    assert str(d) == "+-+/+-/-+"
    assert d.shape == Partition((3, 2, 2))
    assert d.signature == (4, 3)
    assert D("+-/-+") == D("-+/+-")
    with pytest.raises(ValueError):
        D("++")


def test_json_roundtrip(D):
    d = D("+-+-/-+/+")
    assert d.to_json() == {"shape": [4, 2, 1], "starts": ["+", "-", "+"]}
    assert SignedDiagram.from_json(d.to_json()) == d


def test_primitive_set_examples():
    aiii2 = primitive_set(AIII, 2)
    assert sorted(p.rows for p in aiii2) == sorted([((2, PLUS),), ((2, MINUS),), ((1, PLUS),), ((1, MINUS),)])
    assert len(primitive_set(AIII, 1)) == 2
    cii3 = primitive_set(CII, 3)
    odd3 = [p.rows for p in cii3 if p.lengths == (3, 3)]
    assert sorted(odd3) == [((3, MINUS), (3, MINUS)), ((3, PLUS), (3, PLUS))]
    even2 = [p.rows for p in cii3 if p.lengths == (2, 2)]
    assert even2 == [((2, PLUS), (2, MINUS))]
    assert (cii3[0].plus_count, cii3[0].minus_count) in ((4, 2), (2, 4))
    with pytest.raises(ValueError):
        primitive_set(AIII, 0)


def test_enumerate_examples(P):
    assert {str(d) for d in enumerate_syd(AIII, P(2), 1, 1)} == {"+-", "-+"}
    two_one = enumerate_syd(AIII, P(2, 1), 2, 1)
    assert {str(d) for d in two_one} == {"+-/+", "-+/+"}
    bdi = enumerate_syd(BDI, P(3, 2, 2), 4, 3)
    assert [str(d) for d in bdi] == ["+-+/+-/-+"]
    assert enumerate_syd(BDI, P(2, 1), 2, 1) == []


def test_enumerate_rejects_bad_signature(P):
    with pytest.raises(SignatureError, match="CI"):
        enumerate_syd(CI, P(2), 2, 0)


def test_pi_vector_examples(P):
    d = SignedDiagram.from_starts(P(4, 3, 3, 1, 1), [PLUS, PLUS, MINUS, PLUS, MINUS])
    assert pi_vector(d) == (1, 1, 1)
    assert pi_vector(SignedDiagram.from_starts(P(2, 2), [MINUS, MINUS])) == (0,)
    assert pi_vector(SignedDiagram.from_starts(P(2, 1), [PLUS, PLUS])) == (1, 1)


def test_from_pi_examples(P):
    assert from_pi(AIII, P(2, 1), 2, 1, (1, 1)) == SignedDiagram(((2, PLUS), (1, PLUS)))
    with pytest.raises(VectorError, match="box bound"):
        from_pi(AIII, P(2), 1, 1, (2,))
    assert str(from_pi(AIII, P(1, 1), 1, 1, (1,))) == "+/-"
    with pytest.raises(VectorError, match="parity"):
        from_pi(AIII, P(1, 1), 1, 1, (2,))
    with pytest.raises(VectorError, match="coordinate rule"):
        from_pi(BDI, P(2, 2), 2, 2, (0,))


def test_enumeration_matches_brute_force_and_roundtrips():
    for t in PairType:
        for n in range(1, 11):
            for lam in partitions_of(n):
                for p, q in t.signatures(n):
                    fast = enumerate_syd(t, lam, p, q)
                    assert set(fast) == set(brute_force_syd(t, lam, p, q)), (t, lam, p, q)
                    assert len(set(fast)) == len(fast)
                    for d in fast:
                        assert d.signature == (p, q)
                        assert tiles_by_primitives(t, d)
                        assert from_pi(t, lam, p, q, pi_vector(d)) == d
                    assert [pi_vector(d) for d in fast] == valid_vectors(t, lam, p, q)


def test_primitive_multisets_canonicalise_to_enumerated():
    # every multiset of primitives with total size <= 6 lands in the enumeration
    for t in PairType:
        prims = primitive_set(t, 6)
        for k in range(1, 4):
            for combo in itertools.combinations_with_replacement(prims, k):
                rows = tuple(r for prim in combo for r in prim.rows)
                d = SignedDiagram(rows)
                if d.shape.n > 6:
                    continue
                p, q = d.signature
                assert d in enumerate_syd(t, d.shape, p, q)


def test_aiii_count_symmetry():
    for n in range(1, 9):
        for lam in partitions_of(n):
            for p in range(n + 1):
                assert len(enumerate_syd(AIII, lam, p, n - p)) == len(enumerate_syd(AIII, lam, n - p, p))
