from collections import Counter

import pytest

from orbitgraph.closure_poset import (
    AIII_PATTERNS,
    TABLE_PATTERNS,
    closure_diagram,
    closure_to_dot,
    closure_to_json,
    codim_one_covers,
    covers_down,
    pattern_instances,
    _eval_length,
)
from orbitgraph.partitions import PairType, orbit_dimension, partitions_of, yd_membership
from orbitgraph.signed_diagrams import MINUS, PLUS, SignedDiagram, enumerate_syd, is_valid, row_counts

from conftest import AIII, BDI, CI, CII, DIII

TABLE_ROWS = [(t, pat) for t, pats in TABLE_PATTERNS.items() for pat in pats]


def test_table_sizes():
    assert {t.value: len(p) for t, p in TABLE_PATTERNS.items()} == {"BDI": 10, "CI": 10, "CII": 5, "DIII": 5}
    assert [p["case"] for p in AIII_PATTERNS] == ["i", "ii", "iii"]


def _params(pat, count=4):
    out = []
    for u in range(pat["vmin"], pat["vmin"] + count):
        for v in range(pat["vmin"], u + 1):
            if pat.get("equal") and u != v:
                continue
            out.append((u, v))
    return out


@pytest.mark.parametrize("ptype, pat", TABLE_ROWS, ids=[f"{t.value}-{p['case']}" for t, p in TABLE_ROWS])
def test_table_row_transcription(ptype, pat):
    for u, v in _params(pat):
        sigs = []
        for side in ("S", "T"):
            total = [0, 0]
            for word, expr in pat[side]:
                length = _eval_length(expr, u, v)
                assert length >= 0
                if length == 0:
                    continue
                # the written last letter must agree with the parity of the length
                ends_like_start = word[-1] == word[0]
                assert ends_like_start == (length % 2 == 1), (word, expr, u, v)
                plus, minus = row_counts(length, PLUS if word[0] == "a" else MINUS)
                total[0] += plus
                total[1] += minus
            sigs.append(tuple(total))
        assert sigs[0] == sigs[1], "S and T residues must carry the same signs"


@pytest.mark.parametrize("ptype, pat", TABLE_ROWS, ids=[f"{t.value}-{p['case']}" for t, p in TABLE_ROWS])
def test_table_row_applies(ptype, pat):
    # apply the row to a diagram consisting of exactly the T residue
    hits = 0
    for case, s_rows, t_rows, _ in pattern_instances(ptype, 9):
        if case != pat["case"] or Counter(s_rows) == Counter(t_rows):
            continue
        t = SignedDiagram(tuple(t_rows))
        if not is_valid(ptype, t):
            continue
        lowers = {c.lower: c for c in covers_down(ptype, t)}
        s = SignedDiagram(tuple(s_rows))
        assert s in lowers
        assert lowers[s].codim >= 1
        assert is_valid(ptype, s) and s.signature == t.signature
        hits += 1
    assert hits > 0


def test_covers_down_examples(D):
    covers = covers_down(AIII, D("+-"))
    assert [(str(c.lower), c.case, c.codim) for c in covers] == [("+/-", "i", 1)]
    assert covers_down(AIII, D("+/-")) == []
    lowers = {str(c.lower) for c in covers_down(AIII, D("+-+-"))}
    assert {"+-+/-", "-+-/+"} <= lowers


def test_cover_relation_invariants():
    for t in PairType:
        for n in range(1, 9):
            for p, q in t.signatures(n):
                for lam in partitions_of(n):
                    if not yd_membership(lam, t):
                        continue
                    for T in enumerate_syd(t, lam, p, q):
                        for c in covers_down(t, T):
                            assert c.lower.shape != c.upper.shape
                            assert c.lower.signature == c.upper.signature
                            assert is_valid(t, c.lower)
                            assert c.codim == orbit_dimension(T.shape, t)[1] - orbit_dimension(c.lower.shape, t)[1] >= 1


def test_codim_one_examples(D):
    assert [str(c.lower) for c in codim_one_covers(AIII, D("+-"))] == ["+/-"]
    cs = codim_one_covers(AIII, D("+-/-+"))
    assert cs and all(c.lower.shape.parts == (2, 1, 1) and c.codim == 1 for c in cs)
    assert codim_one_covers(AIII, D("+/-")) == []


def test_codim_one_rule_matches_dimensions_up_to_10():
    # codim_one_covers raises if the side condition and the dimension formula disagree
    for t in PairType:
        for n in range(1, 11):
            for p, q in t.signatures(n):
                for lam in partitions_of(n):
                    if yd_membership(lam, t):
                        for T in enumerate_syd(t, lam, p, q):
                            codim_one_covers(t, T)


def test_closure_diagram_small():
    cd = closure_diagram(AIII, 1, 0)
    assert [str(d) for d in cd.nodes] == ["+"] and cd.covers == ()
    cd = closure_diagram(AIII, 1, 1)
    assert sorted(str(d) for d in cd.nodes) == ["+-", "+/-", "-+"]
    assert len(cd.covers) == 2 and not cd.implied


def test_closure_diagram_ranked_and_limited():
    cd = closure_diagram(AIII, 3, 3)
    for lo, hi, case, codim in cd.covers:
        assert cd.dims[hi] - cd.dims[lo] == codim >= 1
    assert set(cd.hasse()) | {c for c in cd.covers if (c[0], c[1]) in cd.implied} == set(cd.covers)
    with pytest.raises(ValueError):
        closure_diagram(AIII, 7, 6)


def test_implied_relations_are_flagged():
    cd = closure_diagram(AIII, 2, 2)
    names = {(str(cd.nodes[lo]), str(cd.nodes[hi])) for lo, hi in cd.implied}
    assert ("-+/+/-", "-+-/+") in names
    # codimension-one relations are never implied
    assert all(codim > 1 for lo, hi, _, codim in cd.covers if (lo, hi) in cd.implied)


def test_closure_emitters():
    cd = closure_diagram(AIII, 1, 1)
    js = closure_to_json(cd)
    assert js["schema"] == 1 and len(js["nodes"]) == 3 and len(js["covers"]) == 2
    dot = closure_to_dot(cd)
    assert dot.startswith("// closure order type=AIII signature=(1,1)")
    assert dot.count("->") == 2 and "rank=same" in dot
