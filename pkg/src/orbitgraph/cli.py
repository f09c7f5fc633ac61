"""Command-line front end.

Exit codes: 0 success, 1 a verification found a mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closure_poset as cp
from .graph_induction import ind_set, removal_height, verify_component_bijection
from .matrix_oracle import DEFAULT_LIMIT, verify_induction
from .orbit_graph import (
    build_graph,
    classify,
    component_count_formula,
    components_bfs,
    graph_to_dot,
    graph_to_json,
    product_decomposition,
    representatives,
)
from .partitions import PairType, Partition, ShapeError, SignatureError, partitions_of
from .series import coefficient, genfunc
from .signed_diagrams import VectorError, brute_force_syd, enumerate_syd, pi_vector
from .sweep import env_cap, run_all

SCHEMA = 1


class UsageError(Exception):
    pass


def _sig(text: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sig expects 'p,q', got {text!r}") from None
    return p, q


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _ptype(text: str) -> PairType:
    try:
        return PairType.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj, fmt: str, text_lines=None, dot=None) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    elif fmt == "dot":
        if dot is None:
            raise UsageError("--format dot is not available for this command")
        sys.stdout.write(dot)
    else:
        for line in (text_lines if text_lines is not None else [json.dumps(obj)]):
            print(line)


def cmd_enumerate(a) -> int:
    p, q = a.sig
    ds = enumerate_syd(a.type, a.shape, p, q)
    obj = {"schema": SCHEMA, "type": a.type.value, "shape": list(a.shape.parts), "signature": [p, q],
           "count": len(ds), "diagrams": [dict(d.to_json(), pi=list(pi_vector(d)), text=str(d)) for d in ds]}
    _emit(obj, a.format, [f"{len(ds)} diagrams"] + [f"{pi_vector(d)}  {d}" for d in ds])
    return 0


def cmd_graph(a) -> int:
    p, q = a.sig
    g = build_graph(a.type, a.shape, p, q)
    comps = components_bfs(g)
    obj = graph_to_json(g, comps)
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges, {obj['component_count']} components"]
    lines += [f"{i}: {v} {g.diagram(i)} [component {comps.labels[i]}]" for i, v in enumerate(g.vertices)]
    lines += [f"{x} -- {y}" for x, y in g.edges]
    _emit(obj, a.format, lines, graph_to_dot(g, comps))
    return 0


def cmd_components(a) -> int:
    p, q = a.sig
    g = build_graph(a.type, a.shape, p, q)
    count = components_bfs(g).count if g.vertices else 0
    formula = component_count_formula(a.type, a.shape, p, q)
    obj = {"schema": SCHEMA, "type": a.type.value, "shape": list(a.shape.parts), "signature": [p, q],
           "vertices": len(g.vertices), "components": count, "formula": formula}
    if a.type is PairType.AIII:
        obj["representatives"] = [{"p": list(t), "diagram": str(d)} for t, d in representatives(a.shape, p, q)]
        obj["products"] = [{"p": list(t), "factors": [str(f) for f in fs]} for t, fs in product_decomposition(a.shape, p, q)]
    lines = [f"components: {count} (formula {formula})"]
    for prod in obj.get("products", []):
        lines.append(f"  {tuple(prod['p'])}: " + " x ".join(prod["factors"]))
    _emit(obj, a.format, lines)
    return 0 if count == formula else 1


def cmd_classify(a) -> int:
    p, q = a.sig
    flags = classify(a.type, a.shape, p, q)
    obj = {"schema": SCHEMA, "type": a.type.value, "shape": list(a.shape.parts), "signature": [p, q], "flags": flags}
    _emit(obj, a.format, [", ".join(k for k, v in flags.items() if v) or "none"])
    return 0


def cmd_closure(a) -> int:
    p, q = a.sig
    cd = cp.closure_diagram(a.type, p, q, limit=a.limit)
    obj = cp.closure_to_json(cd)
    lines = [f"{len(cd.nodes)} orbits, {len(cd.covers)} relations, {len(cd.implied)} implied by longer chains"]
    lines += [f"{cd.nodes[lo]} < {cd.nodes[hi]}  case {c} codim {k}" for lo, hi, c, k in cd.covers]
    _emit(obj, a.format, lines, cp.closure_to_dot(cd))
    return 0


def cmd_induce(a) -> int:
    p, q = a.sig
    h = removal_height(a.shape, a.from_shape)
    fibers = []
    for tp in enumerate_syd(a.type, a.from_shape, p - h, q - h) if p >= h and q >= h else []:
        fibers.append({"from": str(tp), "to": [str(d) for d in ind_set(a.type, tp, a.shape)]})
    rep = verify_component_bijection(a.type, a.shape, h, p, q)
    obj = {"schema": SCHEMA, "type": a.type.value, "shape": list(a.shape.parts),
           "from_shape": list(a.from_shape.parts), "h": h, "signature": [p, q],
           "fibers": fibers, "bijection": rep.to_json()}
    lines = [f"{f['from']} -> {', '.join(f['to'])}" for f in fibers]
    lines.append(f"components {rep.components_small} -> {rep.components_large}: {'ok' if rep.ok else 'MISMATCH'}")
    lines += rep.problems
    _emit(obj, a.format, lines)
    return 0 if rep.ok else 1


def cmd_genfunc_check(a) -> int:
    n_max = env_cap(a.max_n)
    s = genfunc(a.type, n_max)
    bad = []
    checked = 0
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            for p, q in a.type.signatures(n):
                checked += 1
                got, want = coefficient(s, lam, p, q), len(brute_force_syd(a.type, lam, p, q))
                if got != want:
                    bad.append({"shape": list(lam.parts), "signature": [p, q], "series": got, "count": want})
    obj = {"schema": SCHEMA, "type": a.type.value, "max_n": n_max, "checked": checked, "mismatches": bad}
    _emit(obj, a.format, [f"{checked} coefficients checked, {len(bad)} mismatches"] + [json.dumps(b) for b in bad])
    return 1 if bad else 0


def cmd_appendix_check(a) -> int:
    rep = verify_induction(a.shape, a.h, limit=a.limit)
    obj = dict(rep.to_json(), schema=SCHEMA)
    lines = [f"R={R}: ({got})" + ("" if got == exp else f"  expected ({exp})") for R, got, exp in rep.outcomes]
    lines.append(f"max ({rep.maximum}), expected ({rep.expected_max})")
    lines += rep.problems
    _emit(obj, a.format, lines)
    return 0 if rep.ok else 1


def cmd_sweep(a) -> int:
    only = {int(x) for x in a.only.split(",")} if a.only else None
    results = run_all(a.max_n, only)
    obj = {"schema": SCHEMA, "results": [r.to_json() for r in results], "ok": all(r.ok for r in results)}
    _emit(obj, a.format, [r.line() for r in results])
    return 0 if obj["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitgraph", description="Nilpotent K-orbits, orbit graphs and their checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, shape=True, sig=True, ptype=True, formats=("json", "text")):
        sp = sub.add_parser(name)
        if ptype:
            sp.add_argument("--type", type=_ptype, required=True)
        if shape:
            sp.add_argument("--shape", type=_shape, required=True)
        if sig:
            sp.add_argument("--sig", type=_sig, required=True)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.set_defaults(func=fn)
        return sp

    add("enumerate", cmd_enumerate)
    add("graph", cmd_graph, formats=("json", "dot", "text"))
    add("components", cmd_components)
    add("classify", cmd_classify)
    sp = add("closure", cmd_closure, shape=False, formats=("json", "dot", "text"))
    sp.add_argument("--limit", type=int, default=cp.DEFAULT_CLOSURE_LIMIT)
    sp = add("induce", cmd_induce)
    sp.add_argument("--from-shape", type=_shape, required=True)
    sp = add("genfunc-check", cmd_genfunc_check, shape=False, sig=False, formats=("text", "json"))
    sp.add_argument("--max-n", type=int, default=10)
    sp = add("appendix-check", cmd_appendix_check, sig=False, ptype=False, formats=("text", "json"))
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp = add("sweep", cmd_sweep, shape=False, sig=False, ptype=False, formats=("text", "json"))
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--only", default=None, help="comma-separated criterion numbers 1-8")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SignatureError, ShapeError, VectorError, UsageError, ValueError) as exc:
        print(f"orbitgraph {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
