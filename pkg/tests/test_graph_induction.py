import pytest

from orbitgraph.graph_induction import (
    fiber_is_connected,
    ind_set,
    ind_set_by_filling,
    removal_height,
    verify_component_bijection,
)
from orbitgraph.partitions import PairType, Partition, ShapeError, partitions_of, removable_heights, remove_column_pair, yd_membership
from orbitgraph.signed_diagrams import SignedDiagram, enumerate_syd

from conftest import AIII, CII, DIII


def test_ind_set_examples(D, P):
    got = ind_set(AIII, D("+-/-+/+"), P(4, 4, 3, 2, 2))
    assert len(got) == 3
    assert all(d.signature == (8, 7) for d in got)
    got = ind_set(AIII, D("+-/+/+/+/-"), P(4, 3, 3, 1, 1))
    assert {str(d) for d in got} == {"+-+-/+-+/-+-/+/+", "+-+-/+-+/+-+/+/-"}
    empty = ind_set(AIII, SignedDiagram(()), P(2, 2))
    assert set(empty) == set(enumerate_syd(AIII, P(2, 2), 2, 2))


def test_ind_set_rejects_non_extension(D, P):
    with pytest.raises(ShapeError):
        ind_set(AIII, D("+-/-+/+"), P(4, 4, 3, 2, 1))
    with pytest.raises(ShapeError):
        removal_height(P(3, 1), P(3))


def test_doubled_types_reject_odd_height(P, D):
    # admissible CII/DIII shapes only have even column heights; odd h is a caller error
    # (3,3,3) has three columns of height 3; removing two gives h = 3
    with pytest.raises(ShapeError, match="even height"):
        ind_set(DIII, D("+/-/+"), P(3, 3, 3))
    with pytest.raises(ShapeError, match="even height"):
        verify_component_bijection(CII, P(2, 2, 2), 3, 4, 2)


def test_fiber_formula_matches_literal_fill():
    for t in PairType:
        for n in range(2, 10):
            for lam in partitions_of(n):
                if not yd_membership(lam, t):
                    continue
                for h in removable_heights(lam):
                    if t.is_doubled and h % 2:
                        continue
                    small = remove_column_pair(lam, h)
                    for p, q in t.signatures(n):
                        if p < h or q < h:
                            continue
                        for tp in enumerate_syd(t, small, p - h, q - h):
                            assert ind_set(t, tp, lam) == ind_set_by_filling(t, tp, lam)


@pytest.mark.parametrize("parts, h, p, q, count", [
    ((6, 4, 4, 2, 2), 5, 9, 9, 1),
    ((4, 3, 3, 1, 1), 3, 6, 6, 2),
    ((2, 2), 2, 2, 2, 1),
])
def test_bijection_examples(parts, h, p, q, count):
    rep = verify_component_bijection(AIII, Partition(parts), h, p, q)
    assert rep.ok, rep.problems
    assert rep.components_small == rep.components_large == count


def test_fibers_are_connected():
    for t in PairType:
        for n in range(2, 9):
            for lam in partitions_of(n):
                if not yd_membership(lam, t):
                    continue
                for h in removable_heights(lam):
                    if t.is_doubled and h % 2:
                        continue
                    small = remove_column_pair(lam, h)
                    for p, q in t.signatures(n):
                        if p >= h and q >= h:
                            for tp in enumerate_syd(t, small, p - h, q - h):
                                assert fiber_is_connected(t, tp, lam, p, q)


def _gind(t, diagrams, lam):
    return frozenset(d for tp in diagrams for d in ind_set(t, tp, lam))


def test_two_removals_commute():
    # inducing through either intermediate shape gives the same images
    checked = 0
    for t in PairType:
        for n in range(4, 13):
            for lam in partitions_of(n):
                if not yd_membership(lam, t):
                    continue
                via = {}
                for h1 in removable_heights(lam):
                    mid = remove_column_pair(lam, h1)
                    for h2 in removable_heights(mid):
                        via.setdefault(remove_column_pair(mid, h2), set()).add(mid)
                for bottom, mids in via.items():
                    mids = sorted(mids)
                    if len(mids) < 2 or not yd_membership(bottom, t):
                        continue
                    drop = (n - bottom.n) // 2
                    for p, q in t.signatures(n):
                        if p < drop or q < drop:
                            continue
                        for tp in enumerate_syd(t, bottom, p - drop, q - drop):
                            images = {_gind(t, ind_set(t, tp, mid), lam) for mid in mids}
                            assert len(images) == 1, (t, lam, tp)
                            checked += 1
    assert checked > 0


def test_report_json():
    rep = verify_component_bijection(AIII, Partition((4, 3, 3, 1, 1)), 3, 6, 6)
    js = rep.to_json()
    assert js["ok"] and js["components"] == [2, 2] and js["reduced_shape"] == [2, 1, 1, 1, 1]
