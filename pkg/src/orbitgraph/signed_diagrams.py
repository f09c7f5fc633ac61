"""Signed Young diagrams of the five classical types.

A row of a signed diagram is determined by its length and its first sign,
since signs alternate along a row. A diagram is therefore a multiset of
``(length, start)`` pairs with ``start`` in ``{+1, -1}``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .partitions import Partition, PairType, SignatureError

PLUS, MINUS = 1, -1
_SIGN_CHAR = {PLUS: "+", MINUS: "-"}
_CHAR_SIGN = {"+": PLUS, "-": MINUS, "−": MINUS}


class VectorError(ValueError):
    """A pi-vector violates a lattice constraint."""


def row_signs(length: int, start: int) -> str:
    return "".join(_SIGN_CHAR[start if k % 2 == 0 else -start] for k in range(length))


def row_counts(length: int, start: int) -> tuple[int, int]:
    """(plus boxes, minus boxes) of one row."""
    first = (length + 1) // 2
    second = length // 2
    return (first, second) if start == PLUS else (second, first)


def row_end(length: int, start: int) -> int:
    return start if length % 2 else -start


@dataclass(frozen=True)
class SignedDiagram:
    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple((int(l), int(s)) for l, s in self.rows if int(l) > 0)
        for _, s in rows:
            if s not in (PLUS, MINUS):
                raise ValueError(f"row start must be +1 or -1, got {s}")
        # canonical: longer rows first, + before - among equal lengths
        object.__setattr__(self, "rows", tuple(sorted(rows, key=lambda r: (-r[0], -r[1]))))

    @classmethod
    def from_starts(cls, shape: Partition, starts) -> "SignedDiagram":
        starts = list(starts)
        if len(starts) != len(shape):
            raise ValueError("one start sign per row is required")
        return cls(tuple(zip(shape.parts, starts)))

    @classmethod
    def parse(cls, text: str) -> "SignedDiagram":
        text = text.strip()
        if not text:
            return cls(())
        rows = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            signs = [_CHAR_SIGN[c] for c in chunk]
            if any(signs[k] == signs[k + 1] for k in range(len(signs) - 1)):
                raise ValueError(f"signs must alternate along a row: {chunk!r}")
            rows.append((len(signs), signs[0]))
        return cls(tuple(rows))

    def __str__(self) -> str:
        return "/".join(row_signs(l, s) for l, s in self.rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "starts": [_SIGN_CHAR[s] for _, s in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SignedDiagram":
        return cls.from_starts(Partition(tuple(obj["shape"])), [_CHAR_SIGN[c] for c in obj["starts"]])

    @cached_property
    def shape(self) -> Partition:
        return Partition(tuple(l for l, _ in self.rows))

    @property
    def starts(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.rows)

    @cached_property
    def signature(self) -> tuple[int, int]:
        p = q = 0
        for l, s in self.rows:
            a, b = row_counts(l, s)
            p += a
            q += b
        return p, q

    def counter(self) -> Counter:
        return Counter(self.rows)

    def plus_count(self, length: int) -> int:
        return sum(1 for l, s in self.rows if l == length and s == PLUS)


@dataclass(frozen=True)
class Primitive:
    """One block of Table-2 style rows; ``rows`` are (length, start) pairs."""

    ptype: PairType
    rows: tuple[tuple[int, int], ...]

    @property
    def plus_count(self) -> int:
        return sum(row_counts(l, s)[0] for l, s in self.rows)

    @property
    def minus_count(self) -> int:
        return sum(row_counts(l, s)[1] for l, s in self.rows)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.rows)


def _primitive_rows(ptype: PairType, length: int) -> list[tuple[tuple[int, int], ...]]:
    odd = length % 2 == 1
    single = [((length, PLUS),), ((length, MINUS),)]
    opposite = [((length, PLUS), (length, MINUS))]
    same = [((length, PLUS), (length, PLUS)), ((length, MINUS), (length, MINUS))]
    if ptype is PairType.AIII:
        return single
    if ptype is PairType.BDI:
        return single if odd else opposite
    if ptype is PairType.CI:
        return opposite if odd else single
    if ptype is PairType.CII:
        return same if odd else opposite
    return opposite if odd else same


def primitive_set(ptype: PairType, max_length: int) -> list[Primitive]:
    """Every primitive of the type whose rows have length at most max_length."""
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    out = []
    for length in range(max_length, 0, -1):
        out.extend(Primitive(ptype, rows) for rows in _primitive_rows(ptype, length))
    return out


def tiles_by_primitives(ptype: PairType, diagram: SignedDiagram) -> bool:
    """Greedy pairing check: can the rows be grouped into primitives of the type?"""
    cnt = diagram.counter()
    for length in set(l for l, _ in diagram.rows):
        plus, minus = cnt[(length, PLUS)], cnt[(length, MINUS)]
        blocks = _primitive_rows(ptype, length)
        size = len(blocks[0])
        if size == 1:
            continue
        if blocks[0][0][1] != blocks[0][1][1]:
            if plus != minus:
                return False
        elif plus % 2 or minus % 2:
            return False
    return True


def _coordinate_choices(ptype: PairType, length: int, mult: int) -> list[int]:
    """Allowed numbers of +-starting rows of this length for the type."""
    odd = length % 2 == 1
    full = list(range(mult + 1))
    if ptype is PairType.AIII:
        return full
    half = [mult // 2] if mult % 2 == 0 else []
    evens = [a for a in full if a % 2 == 0 and (mult - a) % 2 == 0]
    if ptype is PairType.BDI:
        return full if odd else half
    if ptype is PairType.CI:
        return half if odd else full
    if ptype is PairType.CII:
        return evens if odd else half
    return half if odd else evens


def pi_vector(diagram: SignedDiagram) -> tuple[int, ...]:
    """Number of +-starting rows for each distinct row length, longest first."""
    return tuple(diagram.plus_count(i) for i in diagram.shape.distinct_lengths)


def parity_defect(shape: Partition, p: int, q: int, vector) -> int:
    """(p - q) minus the signature difference forced by the odd-length coordinates."""
    total = 0
    for (i, m), a in zip(shape.multiplicities, vector):
        if i % 2:
            total += 2 * a - m
    return (p - q) - total


def check_vector(ptype: PairType, shape: Partition, p: int, q: int, vector) -> None:
    """Raise VectorError naming the first violated constraint."""
    vector = tuple(vector)
    mult = shape.multiplicities
    if len(vector) != len(mult):
        raise VectorError(f"vector has {len(vector)} coordinates, shape has {len(mult)} distinct lengths")
    if p + q != shape.n:
        raise VectorError(f"signature ({p},{q}) does not sum to |lambda| = {shape.n}")
    for (i, m), a in zip(mult, vector):
        if not 0 <= a <= m:
            raise VectorError(f"box bound violated: 0 <= m+({i}) <= {m} fails for {a}")
    if parity_defect(shape, p, q, vector) != 0:
        raise VectorError(f"parity condition violated for p - q = {p - q}")
    for (i, m), a in zip(mult, vector):
        if a not in _coordinate_choices(ptype, i, m):
            raise VectorError(f"{ptype.value} coordinate rule violated at length {i}: m+ = {a}, m = {m}")


def valid_vectors(ptype: PairType, shape: Partition, p: int, q: int) -> list[tuple[int, ...]]:
    """Lattice points satisfying box, parity and type constraints, sorted lexicographically."""
    ptype.check_signature(p, q, shape.n)
    if p + q != shape.n:
        return []
    mult = shape.multiplicities
    choices = [_coordinate_choices(ptype, i, m) for i, m in mult]
    odd_idx = [r for r, (i, _) in enumerate(mult) if i % 2]
    odd_total = sum(mult[r][1] for r in odd_idx)
    twice_d = p - q + odd_total
    if twice_d % 2:
        return []
    d = twice_d // 2
    out = []
    for vec in itertools.product(*choices):
        if sum(vec[r] for r in odd_idx) == d:
            out.append(vec)
    return out


def from_pi(ptype: PairType, shape: Partition, p: int, q: int, vector) -> SignedDiagram:
    ptype.check_signature(p, q, shape.n)
    check_vector(ptype, shape, p, q, vector)
    rows = []
    for (i, m), a in zip(shape.multiplicities, vector):
        rows += [(i, PLUS)] * a + [(i, MINUS)] * (m - a)
    return SignedDiagram(tuple(rows))


def enumerate_syd(ptype: PairType, shape: Partition, p: int, q: int) -> list[SignedDiagram]:
    """All signed diagrams of the type with this shape and signature, in pi-vector order."""
    return [from_pi(ptype, shape, p, q, v) for v in valid_vectors(ptype, shape, p, q)]


def brute_force_syd(ptype: PairType, shape: Partition, p: int, q: int) -> list[SignedDiagram]:
    """Reference enumeration over all 2^len start assignments (test oracle)."""
    ptype.check_signature(p, q, shape.n)
    found = set()
    for starts in itertools.product((PLUS, MINUS), repeat=len(shape)):
        d = SignedDiagram.from_starts(shape, starts)
        if d.signature == (p, q) and tiles_by_primitives(ptype, d):
            found.add(d)
    return sorted(found, key=pi_vector)


def is_valid(ptype: PairType, diagram: SignedDiagram) -> bool:
    p, q = diagram.signature
    try:
        ptype.check_signature(p, q)
    except SignatureError:
        return False
    return tiles_by_primitives(ptype, diagram)
