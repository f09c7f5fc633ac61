"""Orbit graphs: vertices are pi-vectors, edges are codimension-one adjacencies."""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from math import prod

from .partitions import (
    Partition,
    PairType,
    k_sequence,
    reduce_to_distinct_columns,
    yd_membership,
)
from .signed_diagrams import (
    PLUS,
    MINUS,
    SignedDiagram,
    from_pi,
    valid_vectors,
)


def unit(k: int, r: int, scale: int = 1) -> tuple[int, ...]:
    return tuple(scale if j == r else 0 for j in range(k))


def simple_root(k: int, r: int, scale: int = 1) -> tuple[int, ...]:
    """scale * (e_r - e_{r+1}), 0-based r."""
    return tuple(scale if j == r else (-scale if j == r + 1 else 0) for j in range(k))


def allowed_steps(ptype: PairType, shape: Partition) -> list[tuple[int, ...]]:
    """Positive edge directions; the negatives are implied."""
    lengths = shape.distinct_lengths
    k = len(lengths)
    steps = []
    scale = 2 if ptype.is_doubled else 1
    if ptype is PairType.AIII:
        steps = [simple_root(k, r) for r in range(k - 1)]
        if k:
            steps.append(unit(k, k - 1))
        return steps
    want_odd = ptype in (PairType.BDI, PairType.CII)
    for r in range(k - 1):
        if lengths[r] % 2 == want_odd and lengths[r + 1] % 2 == want_odd:
            steps.append(simple_root(k, r, scale))
    if not want_odd and k and lengths[-1] % 2 == 0:
        steps.append(unit(k, k - 1, scale))
    return steps


def superset_steps(ptype: PairType, shape: Partition) -> list[tuple[int, ...]]:
    """Unrestricted step set: all simple roots and the last unit vector (doubled for CII/DIII)."""
    k = len(shape.distinct_lengths)
    scale = 2 if ptype.is_doubled else 1
    steps = [simple_root(k, r, scale) for r in range(k - 1)]
    if k:
        steps.append(unit(k, k - 1, scale))
    return steps


@dataclass(frozen=True)
class OrbitGraph:
    ptype: PairType
    shape: Partition
    signature: tuple[int, int]
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    edge_vectors: tuple[tuple[int, ...], ...]
    index: dict = field(compare=False, repr=False, hash=False, default=None)

    def diagram(self, i: int) -> SignedDiagram:
        p, q = self.signature
        return from_pi(self.ptype, self.shape, p, q, self.vertices[i])

    def neighbours(self) -> list[list[int]]:
        adj = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def build_graph(ptype: PairType, shape: Partition, p: int, q: int, steps=None) -> OrbitGraph:
    """Vertices from the valid lattice, edges by stepping along allowed directions."""
    vertices = valid_vectors(ptype, shape, p, q)
    index = {v: i for i, v in enumerate(vertices)}
    if steps is None:
        steps = allowed_steps(ptype, shape)
    edges = []
    vecs = []
    for i, v in enumerate(vertices):
        for s in steps:
            w = tuple(a + b for a, b in zip(v, s))
            j = index.get(w)
            if j is not None:
                edges.append((i, j))
                vecs.append(s)
    order = sorted(range(len(edges)), key=lambda e: edges[e])
    return OrbitGraph(
        ptype,
        shape,
        (p, q),
        tuple(vertices),
        tuple(edges[e] for e in order),
        tuple(vecs[e] for e in order),
        index,
    )


def edge_set(g: OrbitGraph) -> set[frozenset]:
    return {frozenset((g.vertices[a], g.vertices[b])) for a, b in g.edges}


@dataclass(frozen=True)
class ComponentLabel:
    labels: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        out = [[] for _ in range(self.count)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return out


def components_bfs(g: OrbitGraph) -> ComponentLabel:
    """Connected components; ids follow the smallest vertex index they contain."""
    adj = g.neighbours()
    labels = [-1] * len(g.vertices)
    count = 0
    for start in range(len(labels)):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if labels[w] < 0:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return ComponentLabel(tuple(labels), count)


# -- pattern oracle -----------------------------------------------------------


def _residues(t: SignedDiagram, u: SignedDiagram):
    a, b = t.counter(), u.counter()
    return sorted((a - b).elements(), reverse=True), sorted((b - a).elements(), reverse=True)


def _no_rows_between(shape: Partition, hi: int, lo: int) -> bool:
    return not any(lo < x < hi for x in shape.parts)


def adjacency_by_pattern(ptype: PairType, t: SignedDiagram, u: SignedDiagram) -> bool:
    """Row-pattern adjacency test, independent of pi-vectors.

    After cancelling common rows, T keeps a long row starting with a and a short
    row starting with b (the short one may be empty); T' has the same rows with
    starts exchanged. Lengths must both be odd (AIII, BDI, CII) or both even
    (AIII, CI, DIII), and no row of the shape may fall strictly between them.
    CII and DIII move two identical rows at once.
    """
    if t.shape != u.shape or t.signature != u.signature:
        raise ValueError("diagrams must share shape and signature")
    if t == u:
        return False
    tbar, ubar = _residues(t, u)
    if len(tbar) != len(ubar):
        return False
    rep = 2 if ptype.is_doubled else 1
    if len(tbar) == 2 * rep:
        long_rows, short_rows = tbar[:rep], tbar[rep:]
    elif len(tbar) == rep:
        long_rows, short_rows = tbar, []
    else:
        return False
    if len(set(long_rows)) != 1 or len(set(short_rows)) > 1:
        return False
    L, a = long_rows[0]
    S, b = short_rows[0] if short_rows else (0, -a)
    if short_rows and (S >= L or b != -a):
        return False
    expected = sorted([(L, -a)] * rep + ([(S, -b)] * rep if short_rows else []), reverse=True)
    if ubar != expected:
        return False
    if (L - S) % 2:
        return False
    odd = L % 2 == 1
    if not short_rows and odd:
        return False  # a lone odd row flip changes the signature
    if ptype in (PairType.BDI, PairType.CII) and not odd:
        return False
    if ptype in (PairType.CI, PairType.DIII) and odd:
        return False
    return _no_rows_between(t.shape, L, S)


# -- closed forms --------------------------------------------------------------


def _coeff_bounded(bounds: list[int], d: int) -> int:
    """Coefficient of t^d in prod (1 + t + ... + t^b)."""
    poly = [1]
    for b in bounds:
        new = [0] * (len(poly) + b)
        for i, c in enumerate(poly):
            if c:
                for j in range(b + 1):
                    new[i + j] += c
        poly = new
    return poly[d] if 0 <= d < len(poly) else 0


def distinct_column_count(ptype: PairType, shape: Partition, p: int, q: int) -> int:
    """Vertex count of an orbit graph whose shape has distinct column lengths."""
    if p < 0 or q < 0 or p + q != shape.n:
        return 0
    twice_d = p - q + shape.odd_parts
    if twice_d % 2:
        return 0
    d = twice_d // 2
    ks = k_sequence(shape)
    if ks.formal:
        return 1 if d == 0 else 0
    odd_sizes, even_sizes = [], []
    for prev, k in ks.blocks():
        (odd_sizes if shape.row(k) % 2 else even_sizes).append(k - prev)
    if ptype is PairType.AIII:
        return _coeff_bounded(odd_sizes, d) * prod(1 + s for s in even_sizes)
    if ptype is PairType.BDI:
        return _coeff_bounded(odd_sizes, d)
    if ptype is PairType.CI:
        return prod(1 + s for s in even_sizes)
    if ptype is PairType.CII:
        if d % 2:
            return 0
        return _coeff_bounded([s // 2 for s in odd_sizes], d // 2)
    return prod(1 + s // 2 for s in even_sizes)


def component_count_formula(ptype: PairType, shape: Partition, p: int, q: int) -> int:
    """Number of connected components via column-pair reduction and the closed form."""
    ptype.check_signature(p, q, shape.n)
    if p + q != shape.n or not yd_membership(shape, ptype):
        return 0
    reduced, removed = reduce_to_distinct_columns(shape)
    return distinct_column_count(ptype, reduced, p - removed, q - removed)


def _is_odd_then_even(parts) -> bool:
    seen_even = False
    for x in parts:
        if x % 2 == 0:
            seen_even = True
        elif seen_even:
            return False
    return True


def _is_even_odd_even(parts) -> bool:
    state = 0  # 0 leading evens, 1 odds, 2 trailing evens
    for x in parts:
        odd = x % 2 == 1
        if state == 0 and odd:
            state = 1
        elif state == 1 and not odd:
            state = 2
        elif state == 2 and odd:
            return False
    return True


def classify(ptype: PairType, shape: Partition, p: int, q: int) -> dict[str, bool]:
    """Closed-form structural flags for the orbit graph."""
    count = component_count_formula(ptype, shape, p, q)
    flags = {"empty": count == 0, "single_vertex": False, "edgeless": False,
             "connected": False, "disconnected": False, "column_rule_edgeless": False}
    if count == 0:
        return flags
    parts = shape.parts
    odd_parts = [x for x in parts if x % 2]
    if ptype is PairType.AIII:
        single = len(odd_parts) == len(parts) and (len(parts) == abs(p - q) or len(set(parts)) <= 1)
    elif ptype in (PairType.BDI, PairType.CII):
        single = len(odd_parts) == abs(p - q) or len(set(odd_parts)) <= 1
    else:
        single = len(odd_parts) == len(parts)
    flags["single_vertex"] = single

    cols = Counter(shape.transpose().parts)
    if single:
        edgeless = True
    elif ptype is PairType.AIII:
        edgeless = all(c % 2 for c in cols.values())
    else:
        want = 0 if ptype in (PairType.BDI, PairType.CII) else 1
        edgeless = all(c % 2 or shape.row(h) % 2 == want for h, c in cols.items())
    flags["column_rule_edgeless"] = edgeless
    # The column rule is sufficient but not necessary for AIII: the signature can pin
    # every odd coordinate, e.g. (4,3,1) with (3,5). Then each vertex is its own component.
    if not edgeless and ptype is PairType.AIII:
        edgeless = count == len(valid_vectors(ptype, shape, p, q))
    flags["edgeless"] = edgeless

    if ptype in (PairType.AIII, PairType.CI, PairType.DIII):
        connected = _is_odd_then_even(parts)
    else:
        connected = _is_even_odd_even(parts) or len(odd_parts) == abs(p - q)
    flags["connected"] = connected
    flags["disconnected"] = not connected
    return flags


# -- AIII representatives and product structure ---------------------------------


def p_tuples(shape: Partition, p: int, q: int) -> list[tuple[int, ...]]:
    """The index set P(lambda; p, q) of connected components (type AIII)."""
    PairType.AIII.check_signature(p, q, shape.n)
    if p + q != shape.n:
        return []
    ks = k_sequence(shape)
    if ks.formal:
        return [(0,)] if p == q else []
    ranges, odd_flags = [], []
    for prev, k in ks.blocks():
        ranges.append(range(k - prev + 1))
        odd_flags.append(shape.row(k) % 2 == 1)
    out = []
    for tup in itertools.product(*ranges):
        if 2 * sum(x for x, o in zip(tup, odd_flags) if o) - shape.odd_parts == p - q:
            out.append(tup)
    return out


def representatives(shape: Partition, p: int, q: int) -> list[tuple[tuple[int, ...], SignedDiagram]]:
    """One diagram per component: in block s the first p_s rows start with +."""
    out = []
    ks = k_sequence(shape)
    for tup in p_tuples(shape, p, q):
        starts = [MINUS] * len(shape)
        if not ks.formal:
            for (prev, _), ps in zip(ks.blocks(), tup):
                for j in range(prev, prev + ps):
                    starts[j] = PLUS
        out.append((tup, SignedDiagram.from_starts(shape, starts)))
    return out


@dataclass(frozen=True)
class ProductFactor:
    kind: str  # "A" or "C"
    bounds: tuple[int, ...]
    level: int | None = None

    def __str__(self) -> str:
        inner = ",".join(map(str, self.bounds))
        return f"A({inner};{self.level})" if self.kind == "A" else f"C({inner})"

    def vertices(self) -> list[tuple[int, ...]]:
        pts = itertools.product(*(range(b + 1) for b in self.bounds))
        if self.kind == "A":
            return [v for v in pts if sum(v) == self.level]
        return list(pts)

    def steps(self) -> list[tuple[int, ...]]:
        k = len(self.bounds)
        steps = [simple_root(k, r) for r in range(k - 1)]
        if self.kind == "C" and k:
            steps.append(unit(k, k - 1))
        return steps

    def graph(self) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
        verts = self.vertices()
        index = {v: i for i, v in enumerate(verts)}
        edges = []
        for i, v in enumerate(verts):
            for s in self.steps():
                j = index.get(tuple(a + b for a, b in zip(v, s)))
                if j is not None:
                    edges.append((i, j))
        return verts, edges


def block_ranges(shape: Partition) -> tuple[list[tuple[int, int]], tuple[int, int] | None]:
    """Coordinate slices (0-based, half-open) of the A-factors and the trailing C-factor."""
    ks = k_sequence(shape)
    k = len(shape.distinct_lengths)
    if ks.formal:
        return [], (0, k) if k else (0, 0)
    rs = [len(set(shape.parts[:kk])) for kk in ks.ks]
    a_ranges = list(zip([0] + rs[:-1], rs))
    c_range = (rs[-1], k) if rs[-1] < k else None
    return a_ranges, c_range


def product_decomposition(shape: Partition, p: int, q: int) -> list[tuple[tuple[int, ...], list[ProductFactor]]]:
    """For each component index, the factor graphs whose product it is (type AIII)."""
    mults = [m for _, m in shape.multiplicities]
    a_ranges, c_range = block_ranges(shape)
    out = []
    for tup in p_tuples(shape, p, q):
        factors = []
        if a_ranges:
            for (lo, hi), level in zip(a_ranges, tup):
                factors.append(ProductFactor("A", tuple(mults[lo:hi]), level))
        if c_range is not None:
            lo, hi = c_range
            factors.append(ProductFactor("C", tuple(mults[lo:hi])))
        out.append((tup, factors))
    return out


def split_vector(shape: Partition, vector) -> tuple[tuple[int, ...], ...]:
    """Cut a pi-vector into the coordinate blocks of the product factors."""
    a_ranges, c_range = block_ranges(shape)
    pieces = [tuple(vector[lo:hi]) for lo, hi in a_ranges]
    if c_range is not None:
        pieces.append(tuple(vector[c_range[0]:c_range[1]]))
    return tuple(pieces)


def product_graph(factors: list[ProductFactor]):
    """Direct product: vertex tuples, edges where exactly one factor moves along its edge."""
    parts = [f.graph() for f in factors]
    verts = list(itertools.product(*(v for v, _ in parts)))
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for i, v in enumerate(verts):
        for f, (fv, fe) in enumerate(parts):
            fidx = {x: j for j, x in enumerate(fv)}
            here = fidx[v[f]]
            for a, b in fe:
                if a == here:
                    w = list(v)
                    w[f] = fv[b]
                    edges.add(frozenset((i, index[tuple(w)])))
    return verts, edges


def verify_product(shape: Partition, p: int, q: int) -> list[str]:
    """Check every component against its factor product; returns problems found."""
    g = build_graph(PairType.AIII, shape, p, q)
    comps = components_bfs(g)
    members = comps.members()
    graph_edges = edge_set(g)
    problems = []
    decomposition = product_decomposition(shape, p, q)
    if len(decomposition) != comps.count:
        problems.append(f"{len(decomposition)} products but {comps.count} components")
    claimed = set()
    for tup, factors in decomposition:
        verts, edges = product_graph(factors)
        wanted = set(verts)
        mapped = {}
        for v in g.vertices:
            pieces = split_vector(shape, v)
            if pieces in wanted:
                mapped[pieces] = v
        if set(mapped) != wanted:
            problems.append(f"{tup}: vertex sets differ")
            continue
        image = set(mapped.values())
        ids = {comps.labels[g.index[v]] for v in image}
        if len(ids) != 1 or len(image) != len(members[next(iter(ids))]):
            problems.append(f"{tup}: not exactly one component")
        claimed |= ids
        product_edges = {frozenset(mapped[verts[i]] for i in e) for e in edges}
        own_edges = {e for e in graph_edges if e <= image}
        if product_edges != own_edges:
            problems.append(f"{tup}: edge sets differ")
    if len(claimed) != comps.count:
        problems.append("some component is not covered by a product")
    return problems


# -- emitters -------------------------------------------------------------------


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def graph_to_json(g: OrbitGraph, comps: ComponentLabel | None = None) -> dict:
    comps = comps or components_bfs(g)
    return {
        "schema": 1,
        "type": g.ptype.value,
        "shape": list(g.shape.parts),
        "signature": list(g.signature),
        "vertices": [list(v) for v in g.vertices],
        "diagrams": [str(g.diagram(i)) for i in range(len(g.vertices))],
        "edges": [list(e) for e in g.edges],
        "edge_vectors": [list(v) for v in g.edge_vectors],
        "components": list(comps.labels),
        "component_count": comps.count if g.vertices else 0,
    }


def graph_to_dot(g: OrbitGraph, comps: ComponentLabel | None = None) -> str:
    comps = comps or components_bfs(g)
    p, q = g.signature
    lines = [f"// orbit graph type={g.ptype.value} shape=({g.shape}) signature=({p},{q})",
             "graph orbit {", "  node [shape=box, fontname=monospace, colorscheme=set312];"]
    for i, v in enumerate(g.vertices):
        label = _vec(v) + "\\n" + str(g.diagram(i)).replace("/", "\\n")
        color = comps.labels[i] % 12 + 1
        lines.append(f'  v{i} [label="{label}", style=filled, fillcolor={color}];')
    for (a, b), vec in zip(g.edges, g.edge_vectors):
        lines.append(f'  v{a} -- v{b} [label="{_vec(vec)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
