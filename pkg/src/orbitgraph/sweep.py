"""Exhaustive cross-checks, one function per acceptance criterion.

Each check returns a CheckResult; ``run_all`` is what ``orbitgraph sweep``
and the acceptance tests call. Sizes can be capped with ORBITGRAPH_MAX_N.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field

from .closure_poset import closure_diagram, codim_one_covers
from .graph_induction import verify_component_bijection
from .matrix_oracle import verify_induction
from .orbit_graph import (
    adjacency_by_pattern,
    build_graph,
    classify,
    component_count_formula,
    components_bfs,
    product_decomposition,
    verify_product,
)
from .partitions import PairType, Partition, is_even_orbit, partitions_of, removable_heights, yd_membership
from .series import coefficient, factors_agree, genfunc
from .signed_diagrams import brute_force_syd, enumerate_syd

MAX_FAILURES_SHOWN = 5


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, msg: str) -> None:
        self.ok = False
        if len(self.failures) < MAX_FAILURES_SHOWN:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases, {self.seconds:.1f}s"
        if self.failures:
            text += " | " + "; ".join(self.failures)
        return text

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "cases": self.cases,
                "failures": self.failures, "seconds": round(self.seconds, 3)}


def env_cap(n: int) -> int:
    cap = os.environ.get("ORBITGRAPH_MAX_N")
    return min(n, int(cap)) if cap else n


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _cases(ptype: PairType, n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        for lam in partitions_of(n):
            if not yd_membership(lam, ptype):
                continue
            for p, q in ptype.signatures(n):
                yield lam, p, q


@_timed
def check_genfunc(max_n: int = 10) -> CheckResult:
    """Series coefficients against the raw sign-assignment count."""
    res = CheckResult("generating functions vs brute force")
    for t in PairType:
        if not factors_agree(t, max_n):
            res.fail(f"{t.value}: product-formula factors differ from the primitive factor rule")
        s = genfunc(t, max_n)
        for n in range(1, max_n + 1):
            for lam in partitions_of(n):
                for p in range(n + 1):
                    q = n - p
                    try:
                        t.check_signature(p, q)
                    except ValueError:
                        continue
                    res.cases += 1
                    want = len(brute_force_syd(t, lam, p, q))
                    got = coefficient(s, lam, p, q)
                    if got != want or len(enumerate_syd(t, lam, p, q)) != want:
                        res.fail(f"{t.value} ({lam}) ({p},{q}): series {got}, brute force {want}")
    return res


@_timed
def check_components(max_n: int = 12) -> CheckResult:
    """Closed-form component count and classify flags against BFS."""
    res = CheckResult("component formula vs BFS")
    for t in PairType:
        for lam, p, q in _cases(t, max_n, 0):
            g = build_graph(t, lam, p, q)
            count = components_bfs(g).count if g.vertices else 0
            res.cases += 1
            f = component_count_formula(t, lam, p, q)
            if f != count:
                res.fail(f"{t.value} ({lam}) ({p},{q}): formula {f}, BFS {count}")
            flags = classify(t, lam, p, q)
            v = len(g.vertices)
            want = {"empty": v == 0, "single_vertex": v == 1, "edgeless": v > 0 and not g.edges,
                    "connected": count == 1, "disconnected": count > 1}
            if any(flags[k] != want[k] for k in want):
                res.fail(f"{t.value} ({lam}) ({p},{q}): flags {flags} vs graph {want}")
    return res


GOLDEN = [
    ((6, 4, 4, 2, 2), 9, 9, {"vertices": 18, "components": 1, "products": {(0,): "C(1,2,2)"}}),
    ((4, 3, 3, 1, 1), 6, 6, {"components": 2, "products": {(0, 2): "A(1;0) x A(2,2;2)", (1, 2): "A(1;1) x A(2,2;2)"}}),
    ((9, 9, 8, 8, 6, 5, 4, 2, 2), 27, 26, {"components": 8, "pattern": ["A(2;", "A(2,1;", "A(1;", "C(1,2)"]}),
]


@_timed
def check_golden() -> CheckResult:
    """The three worked examples of type AIII."""
    res = CheckResult("worked examples")
    for parts, p, q, want in GOLDEN:
        lam = Partition(parts)
        res.cases += 1
        g = build_graph(PairType.AIII, lam, p, q)
        comps = components_bfs(g)
        if "vertices" in want and len(g.vertices) != want["vertices"]:
            res.fail(f"({lam}): {len(g.vertices)} vertices")
        if comps.count != want["components"] or component_count_formula(PairType.AIII, lam, p, q) != want["components"]:
            res.fail(f"({lam}): {comps.count} components")
        dec = product_decomposition(lam, p, q)
        printed = {tup: " x ".join(map(str, fs)) for tup, fs in dec}
        if "products" in want and printed != want["products"]:
            res.fail(f"({lam}): decomposition {printed}")
        if "pattern" in want:
            if len(dec) != want["components"]:
                res.fail(f"({lam}): {len(dec)} products")
            for tup, fs in dec:
                names = [str(f) for f in fs]
                if len(names) != 4 or not all(n.startswith(w) for n, w in zip(names, want["pattern"])):
                    res.fail(f"({lam}) {tup}: factors {names}")
        problems = verify_product(lam, p, q)
        if problems:
            res.fail(f"({lam}): product isomorphism: {problems[0]}")
    return res


@_timed
def check_edge_oracles(max_n: int = 8) -> CheckResult:
    """pi-vector steps, row patterns and shared codimension-one boundaries give the same edges."""
    res = CheckResult("triple edge-oracle equivalence")
    for t in PairType:
        for lam, p, q in _cases(t, max_n):
            g = build_graph(t, lam, p, q)
            res.cases += 1
            edges = {frozenset(e) for e in g.edges}
            diagrams = [g.diagram(i) for i in range(len(g.vertices))]
            try:
                below = [{c.lower for c in codim_one_covers(t, d)} for d in diagrams]
            except AssertionError as exc:
                res.fail(f"{t.value} ({lam}) ({p},{q}): {exc}")
                continue
            for i, j in itertools.combinations(range(len(diagrams)), 2):
                a = frozenset((i, j)) in edges
                b = adjacency_by_pattern(t, diagrams[i], diagrams[j])
                c = bool(below[i] & below[j])
                if not a == b == c:
                    res.fail(f"{t.value} ({lam}) ({p},{q}) {diagrams[i]} ~ {diagrams[j]}: step {a}, pattern {b}, boundary {c}")
    return res


@_timed
def check_even_connectivity(max_n: int = 12) -> CheckResult:
    """Every even orbit with at least one vertex has a connected graph."""
    res = CheckResult("even orbits are connected")
    for t in PairType:
        for lam, p, q in _cases(t, max_n):
            if not is_even_orbit(lam):
                continue
            g = build_graph(t, lam, p, q)
            if not g.vertices:
                continue
            res.cases += 1
            if components_bfs(g).count != 1:
                res.fail(f"{t.value} ({lam}) ({p},{q}) is disconnected")
    return res


@_timed
def check_induction(max_n: int = 10) -> CheckResult:
    """Component bijection along every removable column pair."""
    res = CheckResult("induction bijection")
    for t in PairType:
        for lam, p, q in _cases(t, max_n, 2):
            for h in removable_heights(lam):
                if t.is_doubled and h % 2:
                    continue
                res.cases += 1
                rep = verify_component_bijection(t, lam, h, p, q)
                if not rep.ok:
                    res.fail(f"{t.value} ({lam}) h={h} ({p},{q}): {rep.problems[0]}")
    return res


@_timed
def check_appendix(max_n: int = 8, max_rows: int = 4, max_h: int = 2) -> CheckResult:
    """Jordan type of X + Xi for every admissible row set."""
    res = CheckResult("induced Jordan types")
    for n in range(0, max_n + 1):
        for lam in partitions_of(n):
            if len(lam) > max_rows:
                continue
            for h in range(1, max_h + 1):
                rep = verify_induction(lam, h, limit=max_n + 2 * max_h)
                res.cases += len(rep.outcomes)
                if not rep.ok:
                    res.fail(f"({lam}) h={h}: {rep.problems[0]}")
    return res


@_timed
def check_closure_figure(p: int = 3, q: int = 3) -> CheckResult:
    """Node count of the AIII closure diagram and rank behaviour of its covers."""
    res = CheckResult(f"closure diagram AIII ({p},{q})")
    cd = closure_diagram(PairType.AIII, p, q)
    s = genfunc(PairType.AIII, p + q)
    expected = sum(coefficient(s, lam, p, q) for lam in partitions_of(p + q))
    res.cases = len(cd.nodes)
    if len(cd.nodes) != expected:
        res.fail(f"{len(cd.nodes)} nodes, series says {expected}")
    for lo, hi, case, codim in cd.covers:
        drop = cd.dims[hi] - cd.dims[lo]
        if drop < 1 or drop != codim:
            res.fail(f"cover {cd.nodes[lo]} < {cd.nodes[hi]} ({case}) drops dimension by {drop}")
    for i, t in enumerate(cd.nodes):
        for c in codim_one_covers(PairType.AIII, t):
            if cd.dims[i] - cd.dims[cd.nodes.index(c.lower)] != 1:
                res.fail(f"codimension-one cover below {t} drops more than 1")
    return res


CHECKS = {
    1: ("genfunc", check_genfunc, 10),
    2: ("components", check_components, 12),
    3: ("golden", check_golden, None),
    4: ("edges", check_edge_oracles, 8),
    5: ("even", check_even_connectivity, 12),
    6: ("induction", check_induction, 10),
    7: ("appendix", check_appendix, 8),
    8: ("closure", check_closure_figure, None),
}


def run_all(max_n: int | None = None, only=None) -> list[CheckResult]:
    """Run the criteria in order; max_n (and ORBITGRAPH_MAX_N) shrink the size bounds."""
    out = []
    for num, (_, fn, default_n) in CHECKS.items():
        if only and num not in only:
            continue
        if default_n is None:
            out.append(fn())
            continue
        n = default_n if max_n is None else min(default_n, max_n)
        out.append(fn(env_cap(n)))
    return out
