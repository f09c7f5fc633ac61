"""Randomised properties; sizes stay small so brute force is cheap."""

from hypothesis import given, settings, strategies as st

from orbitgraph.matrix_oracle import jordan_type, ExactMatrix
from orbitgraph.orbit_graph import build_graph, component_count_formula, components_bfs
from orbitgraph.partitions import (
    PairType,
    Partition,
    add_column_pair,
    remove_column_pair,
    removable_heights,
)
from orbitgraph.signed_diagrams import SignedDiagram, brute_force_syd, from_pi, is_valid, pi_vector

partitions = st.lists(st.integers(1, 5), min_size=0, max_size=5).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))
ptypes = st.sampled_from(list(PairType))


@st.composite
def cases(draw, max_n=8):
    t = draw(ptypes)
    lam = draw(partitions.filter(lambda l: 1 <= l.n <= max_n))
    sigs = t.signatures(lam.n)
    if not sigs:
        return t, lam, lam.n, 0
    p, q = draw(st.sampled_from(sigs))
    return t, lam, p, q


@given(partitions)
def test_transpose_is_an_involution(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().n == lam.n


@given(partitions, st.integers(1, 6))
def test_column_pair_roundtrip(lam, h):
    big = add_column_pair(lam, h)
    assert big.n == lam.n + 2 * h
    assert h in removable_heights(big)
    assert remove_column_pair(big, h) == lam


@settings(max_examples=60, deadline=None)
@given(cases())
def test_pi_vector_roundtrip(case):
    t, lam, p, q = case
    if (p, q) not in t.signatures(lam.n):
        return
    found = brute_force_syd(t, lam, p, q)
    vectors = [pi_vector(d) for d in found]
    assert len(set(vectors)) == len(found)
    for d, v in zip(found, vectors):
        assert from_pi(t, lam, p, q, v) == d
        assert is_valid(t, d)
        assert SignedDiagram.parse(str(d)) == d


@settings(max_examples=40, deadline=None)
@given(cases(max_n=9))
def test_formula_matches_search(case):
    t, lam, p, q = case
    if (p, q) not in t.signatures(lam.n):
        return
    g = build_graph(t, lam, p, q)
    count = components_bfs(g).count if g.vertices else 0
    assert component_count_formula(t, lam, p, q) == count


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_jordan_type_of_jordan_matrix(blocks):
    assert jordan_type(ExactMatrix.jordan(blocks)) == Partition(tuple(sorted(blocks, reverse=True)))
