"""Combinatorial induction along the insertion of a column pair.

Given a diagram T' of shape lam' = lam minus two columns of height h, ind_set
returns every diagram of shape lam obtained by lengthening h rows of T' by two
boxes (zero rows count as rows of length 0). Adding two boxes in front of a row
keeps its starting sign, so a lengthened row of T' is determined by T'; only
new rows of length 2 carry a free start.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .orbit_graph import build_graph, components_bfs
from .partitions import Partition, PairType, ShapeError, remove_column_pair, transpose
from .signed_diagrams import MINUS, PLUS, SignedDiagram, is_valid


def removal_height(lam: Partition, lam_prime: Partition) -> int:
    """The h with remove_column_pair(lam, h) == lam_prime; ShapeError if there is none."""
    cols = Counter(transpose(lam).parts)
    for h, c in cols.items():
        if c >= 2 and remove_column_pair(lam, h) == lam_prime:
            return h
    raise ShapeError(f"({lam}) is not ({lam_prime}) plus a pair of equal columns")


def _extension_counts(lam: Partition, lam_prime: Partition, h: int) -> dict[int, int]:
    """How many rows of each length of lam' get lengthened (length 0 = new rows)."""
    padded = list(lam_prime.parts) + [0] * (len(lam) - len(lam_prime))
    # rows 1..h of lam are exactly the lengthened ones; they are the h longest of lam' after +2
    grown = Counter(x - 2 for x in lam.parts[:h])
    kept = Counter(lam.parts[h:])
    if grown + kept != Counter(padded):
        raise ShapeError(f"({lam}) is not ({lam_prime}) with 2 added to {h} rows")
    return dict(grown)


def _check_type(ptype: PairType, h: int) -> None:
    if ptype.is_doubled and h % 2:
        raise ShapeError(f"{ptype.value}: column pairs have even height, got h = {h}")


def ind_set(ptype: PairType, t_prime: SignedDiagram, lam: Partition) -> list[SignedDiagram]:
    """Diagrams of shape lam induced from t_prime (fiber formula)."""
    lam_prime = t_prime.shape
    h = removal_height(lam, lam_prime)
    _check_type(ptype, h)
    grow = _extension_counts(lam, lam_prime, h)
    tc = t_prime.counter()
    per_length = []
    for length, c in sorted(grow.items(), reverse=True):
        if length == 0:
            # new rows of length 2, any number starting with +
            opts = [Counter({(2, PLUS): x, (2, MINUS): c - x}) for x in range(c + 1)]
        else:
            plus, minus = tc[(length, PLUS)], tc[(length, MINUS)]
            opts = []
            for x in range(max(0, c - minus), min(c, plus) + 1):
                opts.append(Counter({(length, PLUS): -x, (length, MINUS): -(c - x),
                                     (length + 2, PLUS): x, (length + 2, MINUS): c - x}))
        per_length.append(opts)
    out = set()
    for choice in itertools.product(*per_length):
        total = Counter(tc)
        for delta in choice:
            total.update(delta)
        d = SignedDiagram(tuple(total.elements()))
        if is_valid(ptype, d):
            out.add(d)
    return sorted(out, key=lambda d: d.rows)


def ind_set_by_filling(ptype: PairType, t_prime: SignedDiagram, lam: Partition) -> list[SignedDiagram]:
    """Reference version: try every choice of h rows (plus zero rows) and every start for new rows."""
    lam_prime = t_prime.shape
    h = removal_height(lam, lam_prime)
    _check_type(ptype, h)
    rows = list(t_prime.rows) + [(0, PLUS)] * (len(lam) - len(lam_prime))
    out = set()
    for chosen in itertools.combinations(range(len(rows)), h):
        if sorted((rows[j][0] + 2 if j in chosen else rows[j][0]) for j in range(len(rows))) != sorted(lam.parts):
            continue
        fresh = [j for j in chosen if rows[j][0] == 0]
        for signs in itertools.product((PLUS, MINUS), repeat=len(fresh)):
            new = [(l + 2, s) if j in chosen else (l, s) for j, (l, s) in enumerate(rows)]
            for j, s in zip(fresh, signs):
                new[j] = (2, s)
            d = SignedDiagram(tuple(new))
            if is_valid(ptype, d):
                out.add(d)
    return sorted(out, key=lambda d: d.rows)


@dataclass
class BijectionReport:
    ptype: PairType
    shape: Partition
    h: int
    signature: tuple[int, int]
    reduced_shape: Partition
    components_small: int = 0
    components_large: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "type": self.ptype.value,
            "shape": list(self.shape.parts),
            "h": self.h,
            "signature": list(self.signature),
            "reduced_shape": list(self.reduced_shape.parts),
            "components": [self.components_small, self.components_large],
            "ok": self.ok,
            "problems": list(self.problems),
        }


def verify_component_bijection(ptype: PairType, lam: Partition, h: int, p: int, q: int) -> BijectionReport:
    """Check that gind maps the components for lam' one-to-one onto those for lam."""
    ptype.check_signature(p, q, lam.n)
    _check_type(ptype, h)
    lam_prime = remove_column_pair(lam, h)
    rep = BijectionReport(ptype, lam, h, (p, q), lam_prime)
    p2, q2 = p - h, q - h
    big = build_graph(ptype, lam, p, q)
    if p2 < 0 or q2 < 0:
        if big.vertices:
            rep.problems.append(f"no diagrams for ({lam_prime}) but {len(big.vertices)} for ({lam})")
        return rep
    small = build_graph(ptype, lam_prime, p2, q2)
    comp_small, comp_big = components_bfs(small), components_bfs(big)
    rep.components_small = comp_small.count if small.vertices else 0
    rep.components_large = comp_big.count if big.vertices else 0

    owner: dict[SignedDiagram, SignedDiagram] = {}
    fibers = {}
    for i in range(len(small.vertices)):
        tp = small.diagram(i)
        fib = ind_set(ptype, tp, lam)
        fibers[i] = fib
        if not fib:
            rep.problems.append(f"empty fiber over {tp}")
        for d in fib:
            if d in owner:
                rep.problems.append(f"{d} lies over both {owner[d]} and {tp}")
            owner[d] = tp
    all_big = {big.diagram(i) for i in range(len(big.vertices))}
    for d in all_big - set(owner):
        rep.problems.append(f"{d} lies over no diagram of shape ({lam_prime})")

    index = {big.diagram(i): i for i in range(len(big.vertices))}
    hit = set()
    for members in (comp_small.members() if small.vertices else []):
        image = {index[d] for i in members for d in fibers[i] if d in index}
        labels = {comp_big.labels[j] for j in image}
        if len(labels) != 1:
            rep.problems.append(f"gind of component {members[0]} meets {len(labels)} components")
            continue
        (lab,) = labels
        whole = {j for j, c in enumerate(comp_big.labels) if c == lab}
        if image != whole:
            rep.problems.append(f"gind of component {members[0]} is a proper part of component {lab}")
        if lab in hit:
            rep.problems.append(f"component {lab} is hit twice")
        hit.add(lab)
    if rep.components_small != rep.components_large:
        rep.problems.append(f"component counts differ: {rep.components_small} vs {rep.components_large}")
    return rep


def fiber_is_connected(ptype: PairType, t_prime: SignedDiagram, lam: Partition, p: int, q: int) -> bool:
    """Is the full subgraph on ind_set(t_prime) connected?"""
    g = build_graph(ptype, lam, p, q)
    idx = {g.diagram(i): i for i in range(len(g.vertices))}
    verts = {idx[d] for d in ind_set(ptype, t_prime, lam)}
    if not verts:
        return True
    adj = g.neighbours()
    seen, stack = set(), [next(iter(verts))]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        stack.extend(w for w in adj[u] if w in verts)
    return seen == verts

