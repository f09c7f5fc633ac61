"""Cover relations between nilpotent K-orbits and the closure order they generate.

Cover patterns are stored as data. Each pattern lists the rows left in the
lower diagram S and the upper diagram T once their common rows are removed.
A row template is ``(anchor, letter, length)``:

* ``anchor`` is ``"start"`` or ``"end"``, saying which end of the row carries ``letter``;
* ``letter`` is ``"a"`` or ``"b"`` with ``{a, b} = {+, -}``;
* ``length`` is an integer expression in ``u`` and ``v``.

For the four non-AIII types every row is written ``ab..ab``/``ab..ba``/``ba..ab``/``ba..ba``
and the template also keeps that literal string, so a test can check that the
written ending agrees with the parity of the length.
"""

from __future__ import annotations

from collections import Counter
import re
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, PairType, orbit_dimension, partitions_of, yd_membership
from .signed_diagrams import MINUS, PLUS, SignedDiagram, enumerate_syd

# (row word, length) for the tables; word is one of ab..ab, ab..ba, ba..ab, ba..ba
def _rows(*spec):
    return tuple(spec)


# u >= v >= vmin; ``equal`` forces u == v.
TABLE_PATTERNS: dict[PairType, list[dict]] = {
    PairType.DIII: [
        dict(case="1", vmin=1, S=_rows(("ab..ba", "2u-1"), ("ba..ab", "2u-1"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1")),
             T=_rows(("ab..ab", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v-2"), ("ba..ba", "2v-2"))),
        dict(case="2", vmin=1, S=_rows(("ba..ba", "2u"), ("ba..ba", "2u"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1")),
             T=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ba..ba", "2v-2"), ("ba..ba", "2v-2"))),
        dict(case="3", vmin=1, S=_rows(("ab..ba", "2u-1"), ("ba..ab", "2u-1"), ("ba..ba", "2v"), ("ba..ba", "2v")),
             T=_rows(("ba..ba", "2u"), ("ba..ba", "2u"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1"))),
        dict(case="4", vmin=1, S=_rows(("ab..ab", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v"), ("ba..ba", "2v")),
             T=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1"))),
        dict(case="5", vmin=1, S=_rows(("ba..ba", "2u"), ("ba..ba", "2u"), ("ba..ba", "2v"), ("ba..ba", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ba..ba", "2u+2"), ("ba..ba", "2v-2"), ("ba..ba", "2v-2"))),
    ],
    PairType.CII: [
        dict(case="1", vmin=1, S=_rows(("ba..ba", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v"), ("ab..ab", "2v")),
             T=_rows(("ba..ab", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v-1"), ("ab..ba", "2v-1"))),
        dict(case="2", vmin=1, S=_rows(("ab..ba", "2u+1"), ("ab..ba", "2u+1"), ("ba..ba", "2v"), ("ab..ab", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2u+2"), ("ab..ba", "2v-1"), ("ab..ba", "2v-1"))),
        dict(case="3", vmin=0, S=_rows(("ba..ba", "2u"), ("ab..ab", "2u"), ("ab..ba", "2v+1"), ("ab..ba", "2v+1")),
             T=_rows(("ab..ba", "2u+1"), ("ab..ba", "2u+1"), ("ba..ba", "2v"), ("ab..ab", "2v"))),
        dict(case="4", vmin=0, S=_rows(("ba..ab", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v+1"), ("ab..ba", "2v+1")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2u+2"), ("ba..ba", "2v"), ("ab..ab", "2v"))),
        dict(case="5", vmin=1, S=_rows(("ab..ba", "2u+1"), ("ab..ba", "2u+1"), ("ab..ba", "2v+1"), ("ab..ba", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ab..ba", "2u+3"), ("ab..ba", "2v-1"), ("ab..ba", "2v-1"))),
    ],
    PairType.CI: [
        dict(case="1", vmin=1, equal=True, S=_rows(("ab..ba", "2u-1"), ("ba..ab", "2u-1")),
             T=_rows(("ab..ab", "2u"), ("ba..ba", "2u-2"))),
        dict(case="2", vmin=1, S=_rows(("ba..ba", "2u"), ("ba..ba", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ba..ba", "2v-2"))),
        dict(case="3", vmin=1, S=_rows(("ba..ba", "2u"), ("ab..ab", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2v-2"))),
        dict(case="4", vmin=1, S=_rows(("ba..ba", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v")),
             T=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ba..ba", "2v-2"))),
        dict(case="5", vmin=1, S=_rows(("ba..ba", "2u"), ("ba..ba", "2v"), ("ab..ab", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ba..ab", "2v-1"), ("ab..ba", "2v-1"))),
        dict(case="6", vmin=1, S=_rows(("ba..ba", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v"), ("ab..ab", "2v")),
             T=_rows(("ba..ab", "2u+1"), ("ab..ba", "2u+1"), ("ba..ab", "2v-1"), ("ab..ba", "2v-1"))),
        dict(case="7", vmin=1, S=_rows(("ab..ab", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v"), ("ba..ba", "2v")),
             T=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1"))),
        dict(case="8", vmin=1, S=_rows(("ab..ab", "2u"), ("ba..ba", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2v-2"))),
        dict(case="9", vmin=1, S=_rows(("ab..ab", "2u"), ("ba..ba", "2v"), ("ba..ba", "2v")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ba", "2v-1"), ("ba..ab", "2v-1"))),
        dict(case="10", vmin=1, S=_rows(("ab..ab", "2u"), ("ab..ab", "2u"), ("ba..ba", "2v")),
             T=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ab..ab", "2v-2"))),
    ],
    PairType.BDI: [
        dict(case="1", vmin=1, equal=True, S=_rows(("ba..ba", "2u"), ("ab..ab", "2u")),
             T=_rows(("ba..ab", "2u+1"), ("ab..ba", "2u-1"))),
        dict(case="2", vmin=1, S=_rows(("ab..ba", "2u+1"), ("ab..ba", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ab..ba", "2v-1"))),
        dict(case="3", vmin=1, S=_rows(("ab..ba", "2u+1"), ("ba..ab", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ba..ab", "2v-1"))),
        dict(case="4", vmin=1, S=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v+1")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2u+2"), ("ab..ba", "2v-1"))),
        dict(case="5", vmin=0, S=_rows(("ab..ba", "2u+1"), ("ab..ba", "2v+1"), ("ba..ab", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ab..ab", "2v"), ("ba..ba", "2v"))),
        dict(case="6", vmin=0, S=_rows(("ab..ba", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v+1"), ("ba..ab", "2v+1")),
             T=_rows(("ab..ab", "2u+2"), ("ba..ba", "2u+2"), ("ab..ab", "2v"), ("ba..ba", "2v"))),
        dict(case="7", vmin=0, S=_rows(("ba..ab", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v+1"), ("ab..ba", "2v+1")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2u+2"), ("ba..ba", "2v"), ("ab..ab", "2v"))),
        dict(case="8", vmin=1, S=_rows(("ba..ab", "2u+1"), ("ab..ba", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ba..ab", "2v-1"))),
        dict(case="9", vmin=0, S=_rows(("ba..ab", "2u+1"), ("ab..ba", "2v+1"), ("ab..ba", "2v+1")),
             T=_rows(("ab..ba", "2u+3"), ("ba..ba", "2v"), ("ab..ab", "2v"))),
        dict(case="10", vmin=1, S=_rows(("ba..ab", "2u+1"), ("ba..ab", "2u+1"), ("ab..ba", "2v+1")),
             T=_rows(("ba..ba", "2u+2"), ("ab..ab", "2u+2"), ("ba..ab", "2v-1"))),
    ],
}

# AIII: rows anchored at whichever end the pattern displays.
AIII_PATTERNS = [
    dict(case="i", vmin=1, S=(("end", "b", "u"), ("end", "a", "v")),
         T=(("end", "a", "u+1"), ("end", "b", "v-1"))),
    dict(case="ii", vmin=1, S=(("start", "b", "u"), ("start", "a", "v")),
         T=(("start", "a", "u+1"), ("start", "b", "v-1"))),
    dict(case="iii", vmin=2, parity=True, S=(("end", "a", "u"), ("end", "a", "v")),
         T=(("end", "a", "u+2"), ("end", "a", "v-2"))),
]

# cases whose covers can have codimension one
CODIM_ONE_CASES = {
    PairType.AIII: {"i", "ii"},
    PairType.BDI: {str(c) for c in range(1, 11)},
    PairType.CI: {str(c) for c in range(1, 11)},
    PairType.CII: {"1"},
    PairType.DIII: {"1"},
}


_AFFINE = re.compile(r"^(\d*)([uv])([+-]\d+)?$")


@lru_cache(maxsize=None)
def _parse_length(expr: str) -> tuple[int, str, int]:
    """'2u-1' -> (2, 'u', -1)."""
    m = _AFFINE.match(expr.replace(" ", ""))
    if not m:
        raise ValueError(f"bad length expression {expr!r}")
    return int(m.group(1) or 1), m.group(2), int(m.group(3) or 0)


def _eval_length(expr: str, u: int, v: int) -> int:
    k, var, c = _parse_length(expr)
    return k * (u if var == "u" else v) + c


def word_template(word: str, expr: str) -> tuple[str, str, str]:
    """Turn 'ab..ba'-style words into a start-anchored template."""
    return ("start", word[0], expr)


def templates(ptype: PairType) -> list[dict]:
    if ptype is PairType.AIII:
        return AIII_PATTERNS
    out = []
    for pat in TABLE_PATTERNS[ptype]:
        out.append(dict(pat, S=tuple(word_template(w, e) for w, e in pat["S"]),
                        T=tuple(word_template(w, e) for w, e in pat["T"])))
    return out


def _instantiate(rows, a_sign: int, u: int, v: int):
    """Template rows -> list of (length, start); None if a length is negative."""
    out = []
    for anchor, letter, expr in rows:
        length = _eval_length(expr, u, v)
        if length < 0:
            return None
        if length == 0:
            continue
        sign = a_sign if letter == "a" else -a_sign
        if anchor == "end" and length % 2 == 0:
            sign = -sign
        out.append((length, sign))
    return out


def pattern_instances(ptype: PairType, max_length: int):
    """Yield (case, S rows, T rows, T lengths incl. zeros) for all parameters with lengths up to max_length."""
    for pat in templates(ptype):
        for u in range(0, max_length + 1):
            for v in range(pat["vmin"], u + 1):
                if pat.get("equal") and u != v:
                    continue
                if pat.get("parity") and (u - v) % 2:
                    continue
                for a_sign in (PLUS, MINUS):
                    s_rows = _instantiate(pat["S"], a_sign, u, v)
                    t_rows = _instantiate(pat["T"], a_sign, u, v)
                    if s_rows is None or t_rows is None or not t_rows:
                        continue
                    if max(l for l, _ in t_rows) > max_length:
                        continue
                    t_lengths = tuple(_eval_length(e, u, v) for _, _, e in pat["T"])
                    yield pat["case"], s_rows, t_rows, t_lengths


@dataclass(frozen=True)
class CoverRelation:
    lower: SignedDiagram
    upper: SignedDiagram
    case: str
    codim: int

    def residues(self):
        a, b = self.lower.counter(), self.upper.counter()
        return a - b, b - a


def _dim_k(ptype: PairType, d: SignedDiagram) -> int:
    return orbit_dimension(d.shape, ptype)[1]


def _lengths_between(shape: Partition, t_lengths) -> bool:
    """True when some row of the shape lies strictly between the T-residue lengths.

    Residue rows of length zero still count as the lower end.
    """
    lo, hi = min(t_lengths), max(t_lengths)
    return any(lo < x < hi for x in shape.parts)


def _apply(ptype: PairType, t: SignedDiagram, only_codim_one_cases: bool):
    tc = t.counter()
    max_len = t.shape.parts[0] if t.rows else 0
    for case, s_rows, t_rows, t_lengths in pattern_instances(ptype, max_len):
        if only_codim_one_cases and case not in CODIM_ONE_CASES[ptype]:
            continue
        need = Counter(t_rows)
        if any(tc[r] < c for r, c in need.items()):
            continue
        s = SignedDiagram(tuple((tc - need + Counter(s_rows)).elements()))
        sc = s.counter()
        if sc - tc != Counter(s_rows) or tc - sc != need:
            continue  # displayed rows must be exactly the residues
        yield case, s, t_lengths


def covers_down(ptype: PairType, t: SignedDiagram) -> list[CoverRelation]:
    """All orbits covered by T, one relation per lower diagram."""
    dim_t = _dim_k(ptype, t)
    seen = {}
    for case, s, _ in _apply(ptype, t, False):
        if s not in seen:
            seen[s] = CoverRelation(s, t, case, dim_t - _dim_k(ptype, s))
    return sorted(seen.values(), key=lambda c: (c.codim, c.lower.rows))


def codim_one_covers(ptype: PairType, t: SignedDiagram) -> list[CoverRelation]:
    """Codimension-one covers selected by the no-intermediate-rows condition.

    Raises AssertionError if the selection disagrees with the dimension formula.
    """
    by_rule = {}
    dim_t = _dim_k(ptype, t)
    for case, s, t_lengths in _apply(ptype, t, True):
        if not _lengths_between(t.shape, t_lengths) and s not in by_rule:
            by_rule[s] = CoverRelation(s, t, case, dim_t - _dim_k(ptype, s))
    by_dim = {c.lower for c in covers_down(ptype, t) if c.codim == 1}
    if set(by_rule) != by_dim:
        raise AssertionError(f"codimension-one covers of {t} disagree: rule {sorted(map(str, by_rule))}, "
                             f"dimension {sorted(map(str, by_dim))}")
    return sorted(by_rule.values(), key=lambda c: c.lower.rows)


def all_diagrams(ptype: PairType, p: int, q: int) -> list[SignedDiagram]:
    ptype.check_signature(p, q)
    out = []
    for lam in partitions_of(p + q):
        if yd_membership(lam, ptype):
            out.extend(enumerate_syd(ptype, lam, p, q))
    return out


@dataclass(frozen=True)
class ClosureDiagram:
    ptype: PairType
    signature: tuple[int, int]
    nodes: tuple[SignedDiagram, ...]
    dims: tuple[int, ...]
    covers: tuple[tuple[int, int, str, int], ...]  # (lower, upper, case, codim)
    implied: frozenset = frozenset()  # (lower, upper) pairs also reachable through a longer chain

    def hasse(self) -> list[tuple[int, int, str, int]]:
        return [c for c in self.covers if (c[0], c[1]) not in self.implied]


DEFAULT_CLOSURE_LIMIT = 12


def _implied_pairs(n_nodes: int, edges) -> frozenset:
    """Edges lo -> hi that are also reachable lo -> x -> ... -> hi."""
    up = [set() for _ in range(n_nodes)]
    for lo, hi in edges:
        up[lo].add(hi)
    reach: dict[int, frozenset] = {}

    def above(i):
        if i not in reach:
            acc = set()
            for j in up[i]:
                acc.add(j)
                acc |= above(j)
            reach[i] = frozenset(acc)
        return reach[i]

    # nodes are sorted by decreasing dimension, so recursion depth is bounded by the rank
    for i in sorted(range(n_nodes), reverse=True):
        above(i)
    out = set()
    for lo, hi in edges:
        if any(hi in reach[j] for j in up[lo] if j != hi):
            out.add((lo, hi))
    return frozenset(out)


def closure_diagram(ptype: PairType, p: int, q: int, limit: int = DEFAULT_CLOSURE_LIMIT) -> ClosureDiagram:
    """All orbits of signature (p, q) with the relations produced by covers_down."""
    if p + q > limit:
        raise ValueError(f"n = {p + q} exceeds the closure-diagram size limit {limit}")
    nodes = sorted(all_diagrams(ptype, p, q), key=lambda d: (-_dim_k(ptype, d), d.shape.parts, d.rows))
    index = {d: i for i, d in enumerate(nodes)}
    dims = tuple(_dim_k(ptype, d) for d in nodes)
    covers = []
    for i, t in enumerate(nodes):
        for c in covers_down(ptype, t):
            covers.append((index[c.lower], i, c.case, c.codim))
    covers.sort()
    implied = _implied_pairs(len(nodes), [(lo, hi) for lo, hi, _, _ in covers])
    return ClosureDiagram(ptype, (p, q), tuple(nodes), dims, tuple(covers), implied)


def closure_to_json(cd: ClosureDiagram) -> dict:
    return {
        "schema": 1,
        "type": cd.ptype.value,
        "signature": list(cd.signature),
        "nodes": [{"diagram": str(d), "dim": k, **d.to_json()} for d, k in zip(cd.nodes, cd.dims)],
        "covers": [[lo, hi, case, codim] for lo, hi, case, codim in cd.covers],
        "implied": sorted([list(e) for e in cd.implied]),
    }


def closure_to_dot(cd: ClosureDiagram) -> str:
    p, q = cd.signature
    lines = [f"// closure order type={cd.ptype.value} signature=({p},{q})",
             "digraph closure {", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for dim in sorted(set(cd.dims), reverse=True):
        members = " ".join(f"n{i};" for i, k in enumerate(cd.dims) if k == dim)
        lines.append(f"  {{ rank=same; {members} }}  // dim {dim}")
    for i, d in enumerate(cd.nodes):
        label = str(d).replace("/", "\\n") or "empty"
        lines.append(f'  n{i} [label="{label}"];')
    for lo, hi, case, codim in cd.covers:
        style = ", style=dashed" if (lo, hi) in cd.implied else ""
        lines.append(f'  n{lo} -> n{hi} [label="{case}:{codim}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
