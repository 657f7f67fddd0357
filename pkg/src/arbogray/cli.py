"""Command line interface.

Instances are either a graph file (``n m root`` then ``tail head`` lines) or a
built-in name such as ``fig-graph13`` or ``random-tournament(6, seed=42)``.

Exit codes: 0 success, 1 malformed input or failed verification,
2 precondition refused, 3 budget exceeded, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arborescence import format_arborescences
from .digraph import format_digraph, is_clique_support_minus_root, parse_digraph
from .errors import (BudgetExceeded, GraphError, InternalInconsistency, ParseError,
                     PreconditionError)
from .generators import generate, instance_names
from .graycode import GrayPath, gray_code_clique_support, load_gray_path, parse_delta_text
from .oracle import (ENUM_BUDGET, HAM_BUDGET, build_flip_graph, enumerate_arborescences,
                     find_hamiltonian_cycle_bruteforce, find_hamiltonian_path_bruteforce,
                     flip_graph_dot, verify_gray_code)
from .parity import parity_report

EXIT_MALFORMED = 1
EXIT_REFUSED = 2
EXIT_BUDGET = 3
EXIT_INCONSISTENT = 4


def load_instance(spec: str):
    if os.path.isfile(spec):
        with open(spec) as fh:
            return parse_digraph(fh.read())
    return generate(spec)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("ARBOGRAY_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise GraphError(f"ARBOGRAY_BUDGET must be an integer, got {env!r}") from None
    return ENUM_BUDGET


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_graph(args):
    g = load_instance(args.instance)
    sys.stdout.write(format_digraph(g))
    return 0


def cmd_enumerate(args):
    g = load_instance(args.instance)
    arbs = enumerate_arborescences(g, _budget(args))
    print(f"count {len(arbs)}")
    sys.stdout.write(format_arborescences(arbs))
    return 0


def cmd_flipgraph(args):
    g = load_instance(args.instance)
    fg = build_flip_graph(g, _budget(args))
    degrees = sorted(fg.degree(i) for i in range(len(fg)))
    print(f"nodes {len(fg)}")
    print(f"edges {sum(1 for _ in fg.edges())}")
    print("degrees " + " ".join(map(str, degrees)))
    if args.dot:
        dot, legend = flip_graph_dot(g, fg, args.width)
        _write(args.dot, dot)
        legend_path = args.legend or (args.dot + ".legend" if args.dot != "-" else None)
        if legend_path:
            _write(legend_path, legend)
    return 0


def _oracle_path(g, args) -> GrayPath | None:
    fg = build_flip_graph(g, _budget(args))
    order = find_hamiltonian_path_bruteforce(fg, args.ham_budget)
    if order is None:
        return None
    return GrayPath.from_steps(g, [fg.nodes[i] for i in order], [{"case": "oracle"}])


def cmd_graycode(args):
    g = load_instance(args.instance)
    if args.oracle or not is_clique_support_minus_root(g):
        if not args.oracle:
            print("refused: the support of the graph minus its root is not a clique "
                  "(use --oracle for exhaustive search)", file=sys.stderr)
            return EXIT_REFUSED
        path = _oracle_path(g, args)
        if path is None:
            print("none: the flip graph has no Hamiltonian path", file=sys.stderr)
            return EXIT_REFUSED
    else:
        bundles: list = []
        path = gray_code_clique_support(g, fallback_bruteforce=args.fallback_bruteforce,
                                        bundles=bundles)
        if bundles:
            text = json.dumps(bundles, indent=1) + "\n"
            if args.bundle:
                _write(args.bundle, text)
            else:
                sys.stderr.write(text)
            print(f"warning: {len(bundles)} subinstance(s) needed the brute-force fallback",
                  file=sys.stderr)
    if args.delta:
        _write(args.delta, path.to_delta_text())
    if args.json and args.json != "-":
        _write(args.json, path.dumps() + "\n")
        print(f"{len(path)} arborescences written to {args.json}")
    elif not args.delta or args.json == "-":
        sys.stdout.write(path.dumps() + "\n")
    return 0


def cmd_verify(args):
    g = load_instance(args.instance)
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path) as fh:
            text = fh.read()
    try:
        if text.lstrip().startswith("{"):
            steps = load_gray_path(g, json.loads(text))
        else:
            steps = parse_delta_text(g, text)
    except (ValueError, KeyError, TypeError, PreconditionError) as exc:
        raise ParseError(f"cannot read Gray path: {exc}") from None
    report = verify_gray_code(g, steps)
    print(report.summary())
    print("OK" if report.ok else "FAILED")
    return 0 if report.ok else EXIT_MALFORMED


def cmd_parity(args):
    g = load_instance(args.instance)
    rep = parity_report(g, _budget(args))
    print(f"classes {rep.positive}/{rep.negative}")
    print(f"positive {rep.positive}")
    print(f"negative {rep.negative}")
    print(f"determinant {rep.determinant}")
    print(f"|det|={abs(rep.determinant)}")
    print("weights")
    for aid in sorted(rep.weights):
        a = g.arc(aid)
        print(f"  {aid}\t{a.tail}->{a.head}\t{rep.weights[aid]:+d}")
    if rep.total % 2:
        print("Hamiltonian cycle impossible (bipartite, odd order)")
    elif rep.positive != rep.negative:
        print("Hamiltonian cycle impossible (bipartite, unequal classes)")
    elif rep.cycle_impossible:
        print("Hamiltonian cycle impossible (fewer than 3 arborescences)")
    else:
        print("Hamiltonian cycle not excluded by parity")
    if abs(rep.positive - rep.negative) > 1:
        print("Hamiltonian path impossible")
    else:
        print("Hamiltonian path not excluded by parity")
    return 0


def cmd_hamsearch(args):
    g = load_instance(args.instance)
    fg = build_flip_graph(g, _budget(args))
    if args.cycle:
        order = find_hamiltonian_cycle_bruteforce(fg, args.ham_budget)
    else:
        order = find_hamiltonian_path_bruteforce(fg, args.ham_budget)
    if order is None:
        print("none")
        return 0
    print(f"{'cycle' if args.cycle else 'path'} {len(order)}")
    sys.stdout.write(format_arborescences(fg.nodes[i] for i in order))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", help="graph file or built-in name: "
                        + ", ".join(instance_names()))
    common.add_argument("--budget", type=int, default=None,
                        help=f"max arborescences to enumerate (default {ENUM_BUDGET}, "
                             "or ARBOGRAY_BUDGET)")
    ham = argparse.ArgumentParser(add_help=False)
    ham.add_argument("--ham-budget", type=int, default=HAM_BUDGET,
                     help="max flip graph size for Hamiltonian search")

    parser = argparse.ArgumentParser(prog="arbogray",
                                     description="Arborescence flip graphs and pivot Gray codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="print the instance in file format")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", parents=[common], help="list all arborescences")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("flipgraph", parents=[common], help="flip graph summary and DOT")
    p.add_argument("--dot", help="write DOT here ('-' for stdout)")
    p.add_argument("--legend", help="legend file (default: DOT path + .legend)")
    p.add_argument("--width", type=int, default=40, help="label truncation width")
    p.set_defaults(func=cmd_flipgraph)

    p = sub.add_parser("graycode", parents=[common, ham], help="construct a pivot Gray code")
    p.add_argument("--json", help="write the GrayPath JSON here instead of stdout")
    p.add_argument("--delta", help="write the delta text format here ('-' for stdout)")
    p.add_argument("--fallback-bruteforce", action="store_true",
                   help="replace internal inconsistencies by exhaustive search")
    p.add_argument("--bundle", help="where to write counterexample bundles")
    p.add_argument("--oracle", action="store_true",
                   help="use exhaustive Hamiltonian search (any instance)")
    p.set_defaults(func=cmd_graycode)

    p = sub.add_parser("verify", parents=[common], help="check a Gray path file")
    p.add_argument("path", help="GrayPath JSON or delta text, '-' for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("parity", parents=[common], help="bipartition and signed determinant")
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("hamsearch", parents=[common, ham], help="exhaustive Hamiltonian search")
    p.add_argument("--cycle", action="store_true", help="look for a cycle instead of a path")
    p.set_defaults(func=cmd_hamsearch)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        print(json.dumps(exc.provenance, indent=1), file=sys.stderr)
        return EXIT_INCONSISTENT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
