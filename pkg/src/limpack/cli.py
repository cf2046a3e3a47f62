"""Command-line interface: solve, params, bounds, ng, recognize, generate, verify.

Graphs are given as graph6 text or @path (a file holding one graph6 line or an
edge list whose first line is "n m").  All structured output is JSON with a
fixed key order so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import solvers
from .campaign import ALL_THEOREM_IDS, run_campaign
from .corpus import parse_corpus_spec
from .extremal import (build_from_spec, check_Lk_equals_k,
                       is_spider_below_max_degree, recognize_class_G,
                       recognize_class_T, recognize_spider)
from .graphs import (Graph, GraphFormatError, bits, emit_graph6,
                     parse_edge_list, parse_graph6, profile)

_G6_HEADER = ">>graph6<<"


def _load_graph(spec: str) -> Graph:
    """graph6 text, or @path to a file holding graph6 or an 'n m' edge list."""
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            text = fh.read()
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("graph file is empty", 0)
        first = lines[0]
        if first.startswith(_G6_HEADER):
            first = first[len(_G6_HEADER):]
        head = first.split()
        if len(head) == 2 and all(p.isdigit() for p in head):
            return parse_edge_list(text)
        return parse_graph6(first)
    if spec.startswith(_G6_HEADER):
        spec = spec[len(_G6_HEADER):]
    return parse_graph6(spec)


def _parse_k_list(text: str) -> list[int]:
    """'2', '1..3', or '1,2,4'."""
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError(f"empty k range {text!r}")
        return list(range(lo, hi + 1))
    return [int(part) for part in text.split(",")]


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    res = solvers.limited_packing_number(g, args.k, method=args.method)
    print(res.value)
    if args.witness:
        print(" ".join(str(v) for v in res.witness_vertices()))
    return 0


def cmd_params(args) -> int:
    g = _load_graph(args.graph)
    p = profile(g)
    try:
        gamma_t = solvers.total_domination_number(g).value
    except solvers.UndefinedParameterError:
        gamma_t = None
    _emit({
        "graph6": emit_graph6(g),
        "n": g.n,
        "m": g.edge_count(),
        "L1": solvers.limited_packing_number(g, 1).value,
        "L2": solvers.limited_packing_number(g, 2).value,
        "L3": solvers.limited_packing_number(g, 3).value,
        "rho0": solvers.open_packing_number(g).value,
        "gamma": solvers.domination_number(g).value,
        "gamma_t": gamma_t,
        "profile": {
            "connected": p.connected,
            "is_tree": p.is_tree,
            "max_degree": p.max_degree,
            "min_degree": p.min_degree,
            "min_nonleaf_degree": p.min_nonleaf_degree,
            "diameter": p.diameter,
            "girth": p.girth,
            "cut_vertices": list(bits(p.cut_vertices)),
            "every_edge_on_triangle": p.every_edge_on_triangle,
        },
    })
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    _emit(bounds_mod.bound_report(g, args.k, with_exact=args.exact).as_dict())
    return 0


def cmd_ng(args) -> int:
    g = _load_graph(args.graph)
    _emit(bounds_mod.nordhaus_gaddum(g, args.k).as_dict())
    return 0


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    family = args.family
    member = False
    witness = None
    if family == "classG":
        w = recognize_class_G(g)
        member = w is not None
        if w is not None:
            witness = {"A0": list(bits(w.a0)), "B0": list(bits(w.b0))}
    elif family == "spider":
        if profile(g).is_tree:
            shape = recognize_spider(g)
            member = shape is not None
            if shape is not None:
                witness = {"center": shape.center, "t": shape.t, "s": shape.s,
                           "below_max_degree": is_spider_below_max_degree(g)}
    elif family == "classT":
        if profile(g).is_tree and g.n >= 2:
            w = recognize_class_T(g)
            member = w is not None
            if w is not None:
                witness = {"S0": list(bits(w.s0)), "R0": list(bits(w.r0))}
    else:  # lk-eq-k
        member = check_Lk_equals_k(g, args.k)
    _emit({
        "family": family,
        "graph6": emit_graph6(g),
        "k": args.k if family == "lk-eq-k" else None,
        "member": member,
        "witness": witness,
    })
    return 0


def cmd_generate(args) -> int:
    print(emit_graph6(build_from_spec(args.family)))
    return 0


def cmd_verify(args) -> int:
    if args.theorems.strip() == "all":
        ids = list(ALL_THEOREM_IDS)
    else:
        ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
        if not ids:
            raise ValueError("no theorem ids given")
    corpus = parse_corpus_spec(args.corpus, default_seed=args.seed)
    report = run_campaign(ids, corpus, _parse_k_list(args.k))
    for v in report.verdicts:
        print(f"{v.theorem_id}: {v.status} (graphs={v.graphs_checked}, "
              f"substantive={v.substantive_checks}, positives={v.positive_cases}, "
              f"violations={len(v.violations)})")
        for rec in v.violations[:5]:
            print(f"  violation: graph6={rec['graph6']} k={rec['k']}: {rec['detail']}")
        if len(v.violations) > 5:
            print(f"  ... {len(v.violations) - 5} more violations")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    return 1 if report.failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limpack",
        description="Exact k-limited packing numbers, bounds, and statement verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum k-limited packing of one graph")
    p.add_argument("--graph", required=True, help="graph6 text or @file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("auto", "oracle", "bb"), default="auto")
    p.add_argument("--witness", action="store_true",
                   help="also print an optimal set (the oracle returns the "
                        "lexicographically least one)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("params", help="exact parameter panel for one graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bounds", help="every applicable bound at the given k")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true",
                   help="also solve exactly and include the value")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ng", help="L_k(G) + L_k(complement) with case bounds")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_ng)

    p = sub.add_parser("recognize", help="membership tests for extremal families")
    p.add_argument("--graph", required=True)
    p.add_argument("--family", required=True,
                   choices=("classG", "spider", "classT", "lk-eq-k"))
    p.add_argument("--k", type=int, default=2, help="k for lk-eq-k membership")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("generate", help="emit a constructed family member as graph6")
    p.add_argument("--family", required=True,
                   help="spec like spider:3,2 diam2:4 prescribed:8,12 path:7")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run statement evaluators over a corpus")
    p.add_argument("--theorems", required=True, help="'all' or comma-joined ids")
    p.add_argument("--corpus", required=True,
                   help="e.g. all_labeled(6)+trees(<=9)"
                        "+random_connected(n=8..12,1000,seed=42)")
    p.add_argument("--k", required=True, help="'2', '1..3', or '1,2,4'")
    p.add_argument("--seed", type=int, default=None,
                   help="default seed for random corpus terms that omit seed=")
    p.add_argument("--json", default=None, help="also write the report here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
