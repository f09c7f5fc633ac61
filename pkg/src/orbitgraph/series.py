"""Truncated generating functions for the number of signed diagrams.

Monomials are stored as exponent tuples ``(a, b, m_1, ..., m_N)`` where
``m_i`` is the exponent of ``t_i``. Everything with t-weight ``sum i*m_i``
above N is dropped. Each box carries exactly one sign, so a + b equals the
t-weight and the a, b exponents need no separate bound.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .partitions import Partition, PairType
from .signed_diagrams import primitive_set


class TruncationError(ValueError):
    """Query beyond the truncation bound of a series."""


@dataclass
class TruncatedSeries:
    N: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls(N, {(0, 0) + (0,) * N: 1})

    def weight(self, key) -> int:
        return sum(i * m for i, m in enumerate(key[2:], start=1))

    def monomial(self, a: int, b: int, lengths: dict[int, int]) -> tuple | None:
        """Exponent key for a^a b^b prod t_i^{m_i}, or None if it is past the truncation."""
        if any(i > self.N for i in lengths):
            return None
        ms = [0] * self.N
        for i, m in lengths.items():
            ms[i - 1] += m
        key = (a, b) + tuple(ms)
        return key if self.weight(key) <= self.N else None

    def times_geometric(self, key) -> "TruncatedSeries":
        """Multiply by 1/(1 - x) for the monomial x = key."""
        w = self.weight(key)
        if w == 0:
            raise ValueError("1/(1-x) needs a monomial of positive t-weight")
        out = defaultdict(int)
        for k, c in self.coeffs.items():
            cur = k
            while self.weight(cur) <= self.N:
                out[cur] += c
                cur = tuple(x + y for x, y in zip(cur, key))
        return TruncatedSeries(self.N, {k: c for k, c in out.items() if c})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.N != other.N:
            raise ValueError("truncation bounds differ")
        out = defaultdict(int)
        for k1, c1 in self.coeffs.items():
            w1 = self.weight(k1)
            for k2, c2 in other.coeffs.items():
                if w1 + self.weight(k2) <= self.N:
                    out[tuple(x + y for x, y in zip(k1, k2))] += c1 * c2
        return TruncatedSeries(self.N, {k: c for k, c in out.items() if c})

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.N == other.N and self.coeffs == other.coeffs

    def items(self):
        return sorted(self.coeffs.items())


# Each factor 1/(1 - a^x b^y prod t) is (x, y, {length: count}), written as a function of k.
def _aiii(k):
    return [(k, k, {2 * k: 1}), (k, k, {2 * k: 1}), (k - 1, k, {2 * k - 1: 1}), (k, k - 1, {2 * k - 1: 1})]


def _bdi(k):
    return [(2 * k, 2 * k, {2 * k: 2}), (k - 1, k, {2 * k - 1: 1}), (k, k - 1, {2 * k - 1: 1})]


def _ci(k):
    return [(k, k, {2 * k: 1}), (k, k, {2 * k: 1}), (2 * k - 1, 2 * k - 1, {2 * k - 1: 2})]


def _cii(k):
    return [(2 * k - 2, 2 * k, {2 * k - 1: 2}), (2 * k, 2 * k - 2, {2 * k - 1: 2}), (2 * k, 2 * k, {2 * k: 2})]


def _diii(k):
    return [(2 * k, 2 * k, {2 * k: 2}), (2 * k, 2 * k, {2 * k: 2}), (2 * k - 1, 2 * k - 1, {2 * k - 1: 2})]


PRODUCT_FACTORS = {
    PairType.AIII: _aiii,
    PairType.BDI: _bdi,
    PairType.CI: _ci,
    PairType.CII: _cii,
    PairType.DIII: _diii,
}


def product_factors(ptype: PairType, N: int) -> list[tuple[int, int, dict]]:
    """Factors of the product formula that can contribute below weight N."""
    out = []
    for k in range(1, N // 2 + 2):
        for x, y, lengths in PRODUCT_FACTORS[ptype](k):
            if sum(i * m for i, m in lengths.items()) <= N:
                out.append((x, y, lengths))
    return out


def primitive_factors(ptype: PairType, N: int) -> list[tuple[int, int, dict]]:
    """One factor per primitive: k_+ and k_- signs, rows of the given lengths."""
    out = []
    for prim in primitive_set(ptype, N):
        lengths = dict(Counter(prim.lengths))
        if sum(i * m for i, m in lengths.items()) <= N:
            out.append((prim.plus_count, prim.minus_count, lengths))
    return out


def _factor_key(f):
    x, y, lengths = f
    return (x, y, tuple(sorted(lengths.items())))


def factors_agree(ptype: PairType, N: int) -> bool:
    return Counter(map(_factor_key, product_factors(ptype, N))) == Counter(map(_factor_key, primitive_factors(ptype, N)))


def genfunc(ptype: PairType, N: int, factors=None) -> TruncatedSeries:
    """Expand the product formula up to t-weight N."""
    if N < 1:
        raise ValueError("truncation bound N must be at least 1")
    s = TruncatedSeries.one(N)
    for x, y, lengths in (factors if factors is not None else product_factors(ptype, N)):
        key = s.monomial(x, y, lengths)
        if key is not None:
            s = s.times_geometric(key)
    for key in s.coeffs:
        assert key[0] + key[1] == s.weight(key), "a+b must equal the t-weight"
    return s


def coefficient(s: TruncatedSeries, lam: Partition, p: int, q: int) -> int:
    """Coefficient of a^p b^q t_lam."""
    if lam.n > s.N:
        raise TruncationError(f"|lambda| = {lam.n} exceeds the truncation bound {s.N}")
    key = s.monomial(p, q, dict(Counter(lam.parts)))
    return s.coeffs.get(key, 0) if key is not None else 0
