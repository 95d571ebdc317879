"""Batch command-line front end.

Subcommands: construct, check, color, verify, exstar, enumerate-good.
Output is compact JSON on stdout (optionally a DOT rendering to a file).
Exit codes: 0 = holds / rainbow-free / value computed, 1 = rainbow copy or
counterexample found (or coloring search exhausted), 2 = usage or refusal.
"""

import argparse
import json
import sys

from .brooms import BroomSpec
from .colorings import k_edge_color
from .constructions import (
    Regime,
    construct_deleted_class,
    construct_even_large,
    construct_even_small,
    construct_odd,
    enumerate_good_subgraphs,
    theorem_slope,
)
from .core import (
    ColoredGraph,
    InstanceTooLargeError,
    colored_graph_from_json_dict,
    colored_graph_to_json_dict,
    graph_from_json_dict,
    graph_to_json_dict,
    to_dot,
)
from .oracle import ex_star_bruteforce, verify_construction, verify_no_k_minus_1


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _load_colored_graph(path: str) -> ColoredGraph:
    with open(path, "r", encoding="utf-8") as f:
        d = json.load(f)
    if "graph" in d:  # accept the construct-command wrapper
        d = d["graph"]
    return colored_graph_from_json_dict(d)


def _cmd_construct(args) -> int:
    k = args.k
    if args.kind == "odd":
        if args.n is None:
            raise ValueError("--odd needs -n")
        cg = construct_odd(args.n, k)
    elif args.kind == "even-small":
        if args.n is None:
            raise ValueError("--even-small needs -n")
        cg = construct_even_small(args.n, k)
    elif args.kind == "even-large":
        if args.n is None:
            raise ValueError("--even-large needs -n")
        cg = construct_even_large(args.n, k)
    else:
        cg = construct_deleted_class(k)
    slope = theorem_slope(k)
    out = {
        "construction": args.kind,
        "n": cg.n,
        "k": k,
        "edge_count": cg.graph.edge_count,
        "slope": f"{slope.numerator}/{slope.denominator}",
        "slope_times_n": float(slope * cg.n),
        "graph": colored_graph_to_json_dict(cg),
    }
    if args.kind == "deleted-class":
        out["warning"] = (
            "negative control: this construction always contains a rainbow broom copy"
        )
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(cg))
    _emit(out)
    return 0


def _cmd_check(args) -> int:
    cg = _load_colored_graph(args.graph)
    report = verify_construction(cg, BroomSpec(args.k, args.handle))
    _emit(report.to_json_dict())
    return 0 if report.verdict == "holds" else 1


def _cmd_color(args) -> int:
    with open(args.graph, "r", encoding="utf-8") as f:
        d = json.load(f)
    if "graph" in d:
        d = d["graph"]
    g = graph_from_json_dict(d)
    cg = k_edge_color(g, args.k)
    if cg is None:
        _emit({"colorable": False, "k": args.k, **graph_to_json_dict(g)})
        return 1
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(cg))
    _emit({"colorable": True, "k": args.k, "graph": colored_graph_to_json_dict(cg)})
    return 0


def _cmd_verify(args) -> int:
    if args.claim != "no-k-minus-1":
        raise ValueError(f"unknown claim {args.claim!r}")
    mode = "sampled" if args.sampled is not None else "exhaustive"
    report = verify_no_k_minus_1(
        args.k,
        mode=mode,
        sample_count=args.sampled if args.sampled is not None else 100,
        colorings_per_graph=args.colorings_per_graph,
        seed=args.seed,
    )
    _emit(report.to_json_dict())
    return 0 if report.verdict == "holds" else 1


def _cmd_exstar(args) -> int:
    report = ex_star_bruteforce(args.n, BroomSpec(args.k, args.handle), mode=args.mode)
    _emit(report.to_json_dict())
    return 0


def _cmd_enumerate_good(args) -> int:
    subs = enumerate_good_subgraphs(args.k, up_to_isomorphism=args.up_to_iso)
    _emit(
        {
            "k": args.k,
            "count": len(subs),
            "up_to_isomorphism": args.up_to_iso,
            "good_subgraphs": [graph_to_json_dict(s.graph) for s in subs],
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rainbow-brooms",
        description="Constructions, detection, and exhaustive verification of "
        "rainbow-broom-free proper edge colorings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="generate an extremal (or control) coloring")
    kind = pc.add_mutually_exclusive_group(required=True)
    kind.add_argument("--odd", dest="kind", action="store_const", const="odd")
    kind.add_argument("--even-small", dest="kind", action="store_const", const="even-small")
    kind.add_argument("--even-large", dest="kind", action="store_const", const="even-large")
    kind.add_argument(
        "--deleted-class",
        dest="kind",
        action="store_const",
        const="deleted-class",
        help="K_{k+1} minus one color class (negative control)",
    )
    pc.add_argument("-n", type=int, default=None, help="vertex count")
    pc.add_argument("-k", type=int, required=True, help="broom edge count")
    pc.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")
    pc.set_defaults(func=_cmd_construct)

    pk = sub.add_parser("check", help="detect a rainbow broom copy in a colored graph")
    pk.add_argument("graph", help="path to colored graph JSON")
    pk.add_argument("-k", type=int, required=True)
    pk.add_argument("--handle", type=int, default=2, help="handle length (default 2)")
    pk.set_defaults(func=_cmd_check)

    pl = sub.add_parser("color", help="proper edge coloring with at most k colors")
    pl.add_argument("graph", help="path to graph JSON")
    pl.add_argument("-k", type=int, required=True, help="color budget")
    pl.add_argument("--dot", metavar="FILE")
    pl.set_defaults(func=_cmd_color)

    pv = sub.add_parser("verify", help="verify a finite claim exhaustively or sampled")
    pv.add_argument("claim", choices=["no-k-minus-1"])
    pv.add_argument("-k", type=int, required=True)
    mode = pv.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--sampled", type=int, metavar="COUNT", default=None)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--colorings-per-graph", type=int, default=50)
    pv.set_defaults(func=_cmd_verify)

    px = sub.add_parser("exstar", help="exact extremal edge count at desk scale")
    px.add_argument("-n", type=int, required=True)
    px.add_argument("-k", type=int, required=True)
    px.add_argument("--handle", type=int, default=2)
    px.add_argument("--mode", choices=["full", "pruned"], default="full")
    px.set_defaults(func=_cmd_exstar)

    pg = sub.add_parser("enumerate-good", help="all good subgraphs of K_{k+1}")
    pg.add_argument("-k", type=int, required=True)
    pg.add_argument("--up-to-iso", action="store_true")
    pg.set_defaults(func=_cmd_enumerate_good)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLargeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
