"""Exact check that X + Xi lengthens h Jordan cells of X by two.

Coordinates follow the block form of u(p, q) adapted to the parabolic:
``[h | n' | h]`` with basis f_r = e_r + e_{n-r+1}, the middle space, and
g_r = e_r - e_{n-r+1}. In this basis the Hermitian form is

    M = [[0, 0, 2I], [0, H, 0], [2I, 0, 0]]

where H is a form on the middle space for which X is skew-adjoint. A matrix
Y lies in u(M) iff Y* M + M Y = 0. For the nilradical element
Xi = [[0, xi, B], [0, 0, eta], [0, 0, 0]] that means xi = -eta* H / 2 and B* = -B.

Each Jordan cell J_m (basis c_1..c_m with X c_j = c_{j-1}) gets the form
(c_j, c_k) = s * i^(m+1) * (-1)^j when j + k = m + 1, where s = +-1 is the sign of the row.
The factor i^(m+1) makes the form Hermitian, which is why entries are
Gaussian rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .partitions import Partition, ShapeError, transpose


class NotNilpotentError(ValueError):
    pass


@dataclass(frozen=True)
class GaussQ:
    """Exact Gaussian rational re + im*i."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, complex):
            return GaussQ(Fraction(x.real), Fraction(x.imag))
        return GaussQ(Fraction(x), Fraction(0))

    def __add__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-GaussQ.of(o))

    def __mul__(self, o):
        o = GaussQ.of(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussQ(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        o = GaussQ.of(o)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


ZERO = GaussQ()
ONE = GaussQ(Fraction(1))
I_UNIT = GaussQ(Fraction(0), Fraction(1))


class ExactMatrix:
    """Dense square matrix over the Gaussian rationals."""

    def __init__(self, rows):
        self.rows = [[GaussQ.of(x) for x in r] for r in rows]
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def jordan(cls, sizes) -> "ExactMatrix":
        """Direct sum of nilpotent Jordan cells, 1s on the superdiagonal."""
        n = sum(sizes)
        m = cls.zeros(n)
        pos = 0
        for s in sizes:
            for j in range(1, s):
                m[pos + j - 1, pos + j] = ONE
            pos += s
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, val):
        i, j = ij
        self.rows[i][j] = GaussQ.of(val)

    def __add__(self, o: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __mul__(self, o: "ExactMatrix") -> "ExactMatrix":
        cols = list(zip(*o.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), ZERO) for c in cols])
        return ExactMatrix(out)

    def __eq__(self, o) -> bool:
        return isinstance(o, ExactMatrix) and self.rows == o.rows

    def adjoint(self) -> "ExactMatrix":
        return ExactMatrix([[self.rows[j][i].conj() for j in range(self.n)] for i in range(self.n)])

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def power(self, k: int) -> "ExactMatrix":
        out = ExactMatrix.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def rank(self) -> int:
        return bareiss_rank(self)


def _gauss_int_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Exact division of Gaussian integers; raises if not exact."""
    (x, y), (u, v) = a, b
    norm = u * u + v * v
    re, im = x * u + y * v, y * u - x * v
    if re % norm or im % norm:
        raise ArithmeticError("inexact division in fraction-free elimination")
    return re // norm, im // norm


def bareiss_rank(m: ExactMatrix) -> int:
    """Rank by fraction-free elimination over the Gaussian integers."""
    den = 1
    for r in m.rows:
        for x in r:
            den = lcm(den, x.re.denominator, x.im.denominator)
    a = [[(int(x.re * den), int(x.im * den)) for x in r] for r in m.rows]
    rows, cols = m.n, m.n
    prev = (1, 0)
    rank = 0
    for k in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][k] != (0, 0)), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr, pi = a[rank][k]
        for i in range(rank + 1, rows):
            qr, qi = a[i][k]
            for j in range(k + 1, cols):
                xr, xi = a[i][j]
                yr, yi = a[rank][j]
                num = (pr * xr - pi * xi - (qr * yr - qi * yi), pr * xi + pi * xr - (qr * yi + qi * yr))
                a[i][j] = _gauss_int_div(num, prev)
            a[i][k] = (0, 0)
        prev = (pr, pi)
        rank += 1
    return rank


def field_rank(m: ExactMatrix) -> int:
    """Plain Gaussian elimination over the field; used to cross-check bareiss_rank."""
    a = [list(r) for r in m.rows]
    rank = 0
    for k in range(m.n):
        piv = next((i for i in range(rank, m.n) if a[i][k]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][k]
        norm = p.re * p.re + p.im * p.im
        inv = GaussQ(p.re / norm, -p.im / norm)
        for i in range(rank + 1, m.n):
            if a[i][k]:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def jordan_type(N: ExactMatrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix from the ranks of its powers."""
    n = N.n
    ranks = [n]
    power = ExactMatrix.identity(n)
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise NotNilpotentError("matrix is not nilpotent")
        power = power * N
        r = power.rank()
        if r == ranks[-1]:
            raise NotNilpotentError("matrix is not nilpotent")
        ranks.append(r)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return transpose(Partition(tuple(x for x in at_least if x)))


def _cell_form(m: int, sign: int) -> list[list[GaussQ]]:
    scale = {0: ONE, 1: I_UNIT, 2: -ONE, 3: -I_UNIT}[(m + 1) % 4] * sign
    h = [[ZERO] * m for _ in range(m)]
    for j in range(1, m + 1):
        h[j - 1][m - j] = scale * (-1) ** j
    return h


@dataclass
class InducedPair:
    X: ExactMatrix
    Xi: ExactMatrix
    form: ExactMatrix
    rows: tuple[int, ...]
    h: int

    def total(self) -> ExactMatrix:
        return self.X + self.Xi


def build_induced_pair(lam_prime: Partition, R, h: int, signs=None) -> InducedPair:
    """X = embedded J_{lam'}, Xi in the nilradical lengthening the rows in R.

    R holds 1-based row indices; indices len(lam')+1 .. len(lam')+h stand for
    empty rows and are realised through the B block.
    """
    R = list(R)
    ell = len(lam_prime)
    if len(set(R)) != len(R):
        raise ValueError(f"duplicate rows in R = {R}")
    if len(R) > h:
        raise ValueError(f"|R| = {len(R)} exceeds h = {h}")
    if any(not 1 <= r <= ell + h for r in R):
        raise ValueError(f"row index out of range 1..{ell + h}: {R}")
    signs = list(signs) if signs is not None else [1] * ell
    parts = list(lam_prime.parts)
    n_mid = sum(parts)
    n = n_mid + 2 * h
    X = ExactMatrix.zeros(n)
    J = ExactMatrix.jordan(parts)
    H = ExactMatrix.zeros(n_mid)
    starts = []
    pos = 0
    for m, s in zip(parts, signs):
        starts.append(pos)
        cell = _cell_form(m, s)
        for a in range(m):
            for b in range(m):
                H[pos + a, pos + b] = cell[a][b]
        pos += m
    for a in range(n_mid):
        for b in range(n_mid):
            X[h + a, h + b] = J[a, b]

    M = ExactMatrix.zeros(n)
    for r in range(h):
        M[r, n - h + r] = 2
        M[n - h + r, r] = 2
    for a in range(n_mid):
        for b in range(n_mid):
            M[h + a, h + b] = H[a, b]

    # eta: slot r maps g_r to the top vector c_m of the chosen cell
    eta = [[ZERO] * h for _ in range(n_mid)]
    B = [[ZERO] * h for _ in range(h)]
    for slot, row in enumerate(R):
        if row <= ell:
            top = starts[row - 1] + parts[row - 1] - 1
            eta[top][slot] = ONE
        else:
            B[slot][slot] = I_UNIT  # skew-Hermitian: g_r -> i f_r gives a J_2
    # xi = -eta^* H / 2
    xi = [[ZERO] * n_mid for _ in range(h)]
    for r in range(h):
        for b in range(n_mid):
            acc = ZERO
            for a in range(n_mid):
                if eta[a][r]:
                    acc = acc + eta[a][r].conj() * H[a, b]
            xi[r][b] = acc * GaussQ(Fraction(-1, 2))
    Xi = ExactMatrix.zeros(n)
    for r in range(h):
        for b in range(n_mid):
            Xi[r, h + b] = xi[r][b]
        for s in range(h):
            Xi[r, n - h + s] = B[r][s]
    for a in range(n_mid):
        for r in range(h):
            Xi[h + a, n - h + r] = eta[a][r]
    return InducedPair(X, Xi, M, tuple(R), h)


def in_unitary_algebra(Y: ExactMatrix, M: ExactMatrix) -> bool:
    return (Y.adjoint() * M + M * Y).is_zero()


def add_two(lam_prime: Partition, R, h: int) -> Partition:
    """lam' with 2 added at the rows of R (zero rows padded as needed), re-sorted."""
    parts = list(lam_prime.parts) + [0] * h
    for r in R:
        parts[r - 1] += 2
    return Partition.from_parts(parts)


def dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a.row(k + 1)
        sb += b.row(k + 1)
        if sa < sb:
            return False
    return True


def admissible_row_sets(lam_prime: Partition, h: int) -> list[tuple[int, ...]]:
    """All R with |R| = h: some real rows plus the first few empty rows."""
    ell = len(lam_prime)
    out = []
    for s in range(min(h, ell) + 1):
        for real in itertools.combinations(range(1, ell + 1), s):
            out.append(real + tuple(range(ell + 1, ell + 1 + h - s)))
    return out


def block_power_identity(X, xi, eta, B, k: int) -> bool:
    """(X+Xi)^k = [[0, xi X^(k-1), xi X^(k-2) eta], [0, X^k, X^(k-1) eta], [0, 0, 0]] for k >= 2."""
    hh, nm = len(xi), len(X)
    n = nm + 2 * hh

    def embed(blocks):
        m = ExactMatrix.zeros(n)
        offs = [0, hh, hh + nm]
        for (bi, bj), blk in blocks.items():
            for a, row in enumerate(blk):
                for b, val in enumerate(row):
                    m[offs[bi] + a, offs[bj] + b] = val
        return m

    def mul(p, q):
        return [[sum((p[i][t] * q[t][j] for t in range(len(q))), ZERO) for j in range(len(q[0]))] for i in range(len(p))]

    def mpow(m, e):
        out = [[ONE if i == j else ZERO for j in range(len(m))] for i in range(len(m))]
        for _ in range(e):
            out = mul(out, m)
        return out

    G = lambda rows: [[GaussQ.of(x) for x in r] for r in rows]
    X, xi, eta, B = G(X), G(xi), G(eta), G(B)
    total = embed({(0, 1): xi, (0, 2): B, (1, 1): X, (1, 2): eta})
    lhs = total.power(k)
    rhs = embed({
        (0, 1): mul(xi, mpow(X, k - 1)),
        (0, 2): mul(mul(xi, mpow(X, k - 2)), eta),
        (1, 1): mpow(X, k),
        (1, 2): mul(mpow(X, k - 1), eta),
    })
    return lhs == rhs


DEFAULT_LIMIT = 16


@dataclass
class InductionReport:
    lam_prime: Partition
    h: int
    outcomes: list[tuple[tuple[int, ...], Partition, Partition]] = field(default_factory=list)
    maximum: Partition | None = None
    expected_max: Partition | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "shape": list(self.lam_prime.parts),
            "h": self.h,
            "outcomes": [{"R": list(R), "jordan_type": list(got.parts), "expected": list(exp.parts)}
                         for R, got, exp in self.outcomes],
            "maximum": list(self.maximum.parts) if self.maximum else None,
            "expected_maximum": list(self.expected_max.parts) if self.expected_max else None,
            "ok": self.ok,
            "problems": list(self.problems),
        }


def verify_induction(lam_prime: Partition, h: int, limit: int = DEFAULT_LIMIT) -> InductionReport:
    """Sweep every admissible R and compare Jordan types with the add-2 rule."""
    if h < 1:
        raise ValueError("h must be positive")
    if lam_prime.n + 2 * h > limit:
        raise ShapeError(f"matrix size {lam_prime.n + 2 * h} exceeds the limit {limit}")
    rep = InductionReport(lam_prime, h)
    for R in admissible_row_sets(lam_prime, h):
        pair = build_induced_pair(lam_prime, R, h)
        for name, Y in (("X", pair.X), ("Xi", pair.Xi)):
            if not in_unitary_algebra(Y, pair.form):
                rep.problems.append(f"R={R}: {name} is not in u(p,q)")
        got = jordan_type(pair.total())
        exp = add_two(lam_prime, R, h)
        rep.outcomes.append((R, got, exp))
        if got != exp:
            rep.problems.append(f"R={R}: Jordan type ({got}) but expected ({exp})")
    shapes = {got for _, got, _ in rep.outcomes}
    maxima = [s for s in shapes if all(dominates(s, t) for t in shapes)]
    rep.maximum = maxima[0] if maxima else None
    rep.expected_max = add_two(lam_prime, range(1, h + 1), h)
    if rep.maximum != rep.expected_max:
        rep.problems.append(f"dominance maximum ({rep.maximum}) differs from ({rep.expected_max})")
    return rep
