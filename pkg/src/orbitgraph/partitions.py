"""Partitions, pair types and the shape-level data used everywhere else."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator


class SignatureError(ValueError):
    """A signature (p, q) violates the constraint of its pair type."""


class ShapeError(ValueError):
    """A partition is not admissible for the requested operation."""


class PairType(enum.Enum):
    AIII = "AIII"
    BDI = "BDI"
    CI = "CI"
    CII = "CII"
    DIII = "DIII"

    @classmethod
    def parse(cls, name: str) -> "PairType":
        try:
            return cls(name.upper())
        except ValueError:
            raise ValueError(
                f"unknown pair type {name!r}; expected one of "
                + ", ".join(t.value for t in cls)
            ) from None

    @property
    def is_doubled(self) -> bool:
        """CII and DIII move rows in same-sign pairs, so graph steps have size 2."""
        return self in (PairType.CII, PairType.DIII)

    @property
    def lie_algebra(self) -> str:
        return {
            PairType.AIII: "gl",
            PairType.BDI: "o",
            PairType.CI: "sp",
            PairType.CII: "sp",
            PairType.DIII: "o",
        }[self]

    def check_signature(self, p: int, q: int, n: int | None = None) -> None:
        if n is not None and p + q != n:
            raise SignatureError(f"{self.value}: signature ({p},{q}) does not add up to n = {n}")
        if p < 0 or q < 0:
            raise SignatureError(f"{self.value}: signature ({p},{q}) has a negative entry")
        if self in (PairType.CI, PairType.DIII) and p != q:
            raise SignatureError(f"{self.value}: requires p = q, got ({p},{q})")
        if self is PairType.CII and (p % 2 or q % 2):
            raise SignatureError(f"CII: requires p and q even, got ({p},{q})")

    def signatures(self, n: int) -> list[tuple[int, int]]:
        """All valid (p, q) with p + q = n."""
        out = []
        for p in range(n + 1):
            try:
                self.check_signature(p, n - p)
            except SignatureError:
                continue
            out.append((p, n - p))
        return out


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(tuple(sorted((int(x) for x in parts if int(x) > 0), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(x) for x in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def n(self) -> int:
        return sum(self.parts)

    def row(self, j: int) -> int:
        """1-based row length, 0 past the last row."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    @cached_property
    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """(length, count) pairs, longest first."""
        c = Counter(self.parts)
        return tuple((i, c[i]) for i in sorted(c, reverse=True))

    @property
    def distinct_lengths(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.multiplicities)

    def multiplicity(self, i: int) -> int:
        return dict(self.multiplicities).get(i, 0)

    def transpose(self) -> "Partition":
        return transpose(self)

    @property
    def odd_parts(self) -> int:
        return sum(1 for x in self.parts if x % 2)


def transpose(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in lam.parts if x >= j) for j in range(1, lam.parts[0] + 1)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def removable_heights(lam: Partition) -> list[int]:
    """Column heights h occurring at least twice in the transpose."""
    c = Counter(transpose(lam).parts)
    return sorted((h for h, k in c.items() if k >= 2), reverse=True)


def remove_column_pair(lam: Partition, h: int) -> Partition:
    """Delete two columns of height h; equivalently subtract 2 from the first h rows."""
    if h <= 0 or transpose(lam).parts.count(h) < 2:
        raise ShapeError(f"height {h} does not occur twice among the column lengths of ({lam})")
    rows = [x - 2 if j < h else x for j, x in enumerate(lam.parts)]
    return Partition.from_parts(rows)


def add_column_pair(lam: Partition, h: int) -> Partition:
    """Add 2 to the first h rows (zero-padded) and re-sort: the inverse of remove_column_pair."""
    rows = list(lam.parts) + [0] * max(0, h - len(lam))
    rows = [x + 2 if j < h else x for j, x in enumerate(rows)]
    return Partition.from_parts(rows)


def reduce_to_distinct_columns(lam: Partition) -> tuple[Partition, int]:
    """Strip equal column pairs until all column lengths differ.

    Returns the reduced shape and the total height removed (p and q each drop by it).
    """
    removed = 0
    while True:
        hs = removable_heights(lam)
        if not hs:
            return lam, removed
        lam = remove_column_pair(lam, hs[0])
        removed += hs[0]


@dataclass(frozen=True)
class KSequence:
    """Row indices k_1 < ... < k_m where lambda_j - lambda_{j+1} is odd.

    ``ks`` excludes the leading k_0 = 0. A shape with no odd part gets the
    formal sequence (0,), i.e. m = 1 and k_1 = 0.
    """

    ks: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.ks)

    @property
    def formal(self) -> bool:
        return self.ks == (0,)

    def blocks(self) -> list[tuple[int, int]]:
        """(k_{s-1}, k_s) for s = 1..m."""
        prev = [0] + list(self.ks[:-1])
        return list(zip(prev, self.ks))


def k_sequence(lam: Partition) -> KSequence:
    ks = tuple(j for j in range(1, len(lam) + 1) if (lam.row(j) - lam.row(j + 1)) % 2)
    return KSequence(ks if ks else (0,))


def yd_membership(lam: Partition, ptype: PairType) -> bool:
    """Whether lam is the shape of some signed diagram of the given type."""
    mult = lam.multiplicities
    if ptype is PairType.AIII:
        return True
    if ptype is PairType.BDI:
        return all(k % 2 == 0 for i, k in mult if i % 2 == 0)
    if ptype is PairType.CI:
        return all(k % 2 == 0 for i, k in mult if i % 2 == 1)
    return all(k % 2 == 0 for _, k in mult)


def is_even_orbit(lam: Partition) -> bool:
    return len({x % 2 for x in lam.parts}) <= 1


def orbit_dimension(lam: Partition, ptype: PairType) -> tuple[int, int]:
    """(dim of the G-orbit, dim of each K-orbit inside it)."""
    if not yd_membership(lam, ptype):
        raise ShapeError(f"({lam}) is not a {ptype.value} shape")
    n = lam.n
    sq = sum(c * c for c in transpose(lam).parts)
    odd_mult = sum(k for i, k in lam.multiplicities if i % 2)
    algebra = ptype.lie_algebra
    if algebra == "gl":
        twice = 2 * (n * n - sq)
    elif algebra == "o":
        twice = n * (n - 1) - sq + odd_mult
    else:
        twice = n * (n + 1) - sq - odd_mult
    if twice % 4:
        raise ShapeError(f"orbit dimension of ({lam}) for {ptype.value} is not an even integer")
    dim_g = twice // 2
    return dim_g, dim_g // 2
