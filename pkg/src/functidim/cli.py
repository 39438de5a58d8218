"""Command-line surface: generate graphs, solve, compose, construct, and verify.

Graph files use the text format from functidim.graphs; functions are given
as comma-separated 1-based image lists (`1,1,2`) or as a path to a function
file.  FUNCTIDIM_BUDGET overrides the default search budget.
"""

from __future__ import annotations

import argparse
import json
import os.path
import sys

from . import constructions as cons
from .functi import (
    build_functigraph,
    build_two_clique_bridge,
    classify_function,
    constant_function,
    identity_function,
    load_function,
    parse_function_literal,
)
from .graphs import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    format_graph_text,
    load_graph,
    path_graph,
    save_graph,
    wheel_graph,
)
from .harness import CHECK_IDS, verify_theorem
from .resolve import UnknownResult, default_budget, is_resolving, metric_dimension_exact

_GEN_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "wheel": (wheel_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "two_clique": (build_two_clique_bridge, 2),
}


def _build_parser():
    parser = argparse.ArgumentParser(prog="functidim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a family graph as a graph file")
    p_gen.add_argument("family", choices=sorted(_GEN_FAMILIES))
    p_gen.add_argument("params", nargs="+", type=int)
    p_gen.add_argument("-o", "--output", help="write to file instead of stdout")

    p_dim = sub.add_parser("dim", help="exact metric dimension of a graph file")
    p_dim.add_argument("graph")
    p_dim.add_argument("--budget", type=int, default=None)
    p_dim.add_argument("--json", action="store_true")

    p_functi = sub.add_parser("functi", help="compose a graph with a function")
    p_functi.add_argument("graph")
    p_functi.add_argument("function", help="literal like 1,1,2 or a function file path")
    p_functi.add_argument("-o", "--output", help="write the composed graph to a file")
    p_functi.add_argument("--json", action="store_true")

    p_cons = sub.add_parser("construct", help="emit an explicit resolving set with verification")
    p_cons.add_argument("check_id")
    p_cons.add_argument("params", nargs="+")
    p_cons.add_argument("--budget", type=int, default=None)
    p_cons.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="sweep one check over a parameter range")
    p_verify.add_argument("check_id", choices=CHECK_IDS)
    p_verify.add_argument("--range", dest="n_range", help="inclusive range a..b")
    p_verify.add_argument("--m-range", dest="m_range", help="inclusive range a..b (TwoClique only)")
    group = p_verify.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", default=None)
    group.add_argument("--sample", type=int, default=None)
    p_verify.add_argument("--budget", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    fmt = p_verify.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p_verify.add_argument("-o", "--output", help="also write the report to a file")
    return parser


def _parse_range(text):
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise SystemExit(f"error: bad range {text!r}, expected a..b") from None


def _load_function_arg(text, domain_order):
    if os.path.exists(text):
        return load_function(text, domain_order)
    return parse_function_literal(text, domain_order)


def _cmd_gen(args):
    builder, arity = _GEN_FAMILIES[args.family]
    if len(args.params) != arity:
        raise SystemExit(f"error: family {args.family} takes {arity} integer parameter(s)")
    graph = builder(*args.params)
    text = format_graph_text(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_dim(args):
    graph = load_graph(args.graph)
    budget = args.budget if args.budget is not None else default_budget()
    result = metric_dimension_exact(graph, budget)
    if isinstance(result, UnknownResult):
        if args.json:
            print(
                json.dumps(
                    {
                        "status": "unknown",
                        "lower_bound": result.lower_bound,
                        "upper_bound": result.upper_bound,
                        "witness": list(result.witness),
                        "nodes": result.stats.nodes,
                    },
                    sort_keys=True,
                )
            )
        else:
            print(
                f"unknown after {result.stats.nodes} nodes: "
                f"dimension in [{result.lower_bound}, {result.upper_bound}]"
            )
        return 0
    if args.json:
        print(
            json.dumps(
                {
                    "status": "exact",
                    "dimension": result.dimension,
                    "witness": list(result.witness),
                    "nodes": result.stats.nodes,
                },
                sort_keys=True,
            )
        )
    else:
        witness = " ".join(str(v) for v in result.witness)
        print(f"dimension {result.dimension}")
        print(f"witness {witness}")
    return 0


def _cmd_functi(args):
    graph = load_graph(args.graph)
    func = _load_function_arg(args.function, graph.order)
    fg = build_functigraph(graph, func)
    kind = classify_function(func)
    if args.output:
        save_graph(fg.composed, args.output)
    if args.json:
        print(
            json.dumps(
                {
                    "name": fg.composed.name,
                    "order": fg.composed.order,
                    "size": fg.composed.size,
                    "kind": kind.kind,
                    "image_size": kind.image_size,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"{fg.composed.name}: order {fg.composed.order}, size {fg.composed.size}")
        print(f"function kind {kind.kind}, image size {kind.image_size}")
        if not args.output:
            sys.stdout.write(format_graph_text(fg.composed))
    return 0


def _cmd_construct(args):
    check_id = args.check_id
    params = args.params
    budget = args.budget

    def int_param(i):
        try:
            return int(params[i])
        except (IndexError, ValueError):
            raise SystemExit(f"error: {check_id} needs an integer parameter #{i + 1}") from None

    if check_id == "T4_bounds":
        n = int_param(0)
        result = cons.resolving_path_identity(n)
        composed = build_functigraph(path_graph(n), identity_function(n)).composed
    elif check_id == "T8_complete_constant":
        n = int_param(0)
        f = _load_function_arg(params[1], n) if len(params) > 1 else None
        result = cons.resolving_complete_constant(n, f)
        composed = build_functigraph(complete_graph(n), f or constant_function(n)).composed
    elif check_id == "T9_complete_general":
        n = int_param(0)
        if len(params) < 2:
            raise SystemExit("error: T9_complete_general needs n and a function")
        f = _load_function_arg(params[1], n)
        result = cons.resolving_complete_general(n, f)
        composed = build_functigraph(complete_graph(n), f).composed
    elif check_id == "T10_cycle_constant":
        n = int_param(0)
        f = _load_function_arg(params[1], n) if len(params) > 1 else None
        result = cons.resolving_cycle_constant(n, f)
        composed = build_functigraph(cycle_graph(n), f or constant_function(n)).composed
    elif check_id == "T11_cycle_general":
        n = int_param(0)
        if len(params) < 2:
            raise SystemExit("error: T11_cycle_general needs n and a function")
        f = _load_function_arg(params[1], n)
        result = cons.resolving_cycle_general(n, f, budget)
        composed = build_functigraph(cycle_graph(n), f).composed
    elif check_id == "Prism":
        n = int_param(0)
        f = _load_function_arg(params[1], n) if len(params) > 1 else None
        result = cons.resolving_cycle_permutation(n, f)
        composed = build_functigraph(cycle_graph(n), f or identity_function(n)).composed
    elif check_id == "TwoClique":
        m, n = int_param(0), int_param(1)
        composed = build_two_clique_bridge(m, n)
        result = cons.solver_witness_construction(composed, m, budget)
    else:
        raise SystemExit(f"error: no construction for check id {check_id!r}")

    verified = is_resolving(composed.distances, result.vertices).ok
    payload = {
        "check_id": check_id,
        "construction": result.to_dict(),
        "verified": verified,
        "graph": {"name": composed.name, "order": composed.order, "size": composed.size},
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"{check_id}: set of size {result.claimed_size} on {composed.name}")
        print("labels " + " ".join(result.labels()))
        print("indices " + " ".join(str(v) for v in result.vertices))
        print(f"verified {verified}")
    return 0 if verified else 1


def _cmd_verify(args):
    n_range = _parse_range(args.n_range) if args.n_range else None
    m_range = _parse_range(args.m_range) if args.m_range else None
    kwargs = {}
    if args.sample is not None:
        kwargs["exhaustive"] = False
        kwargs["sample"] = args.sample
    if args.seed is not None:
        kwargs["seed"] = args.seed
    budget = args.budget if args.budget is not None else default_budget()
    report = verify_theorem(args.check_id, n_range, m_range=m_range, budget=budget, **kwargs)
    if args.json:
        text = report.to_json()
    elif args.csv:
        text = report.to_csv()
    else:
        text = report.to_text()
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() if args.json else report.to_csv() if args.csv else text)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "dim": _cmd_dim,
        "functi": _cmd_functi,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
