"""Command-line front end.

Exit codes: 0 success, 1 domain-negative result (not a member, deck not
uniquely reconstructed, counterexample found, illegitimate deck), 2 usage
or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .deck import deck_of, format_deck, parse_deck
from .errors import GraphError, Graph6ParseError, IllegitimateDeckError
from .generator import generate_class_member
from .graph import Graph, decode_graph6
from .membership import find_special_sets
from .reconstruction import reconstruct_from_deck, run_lemma_suite
from .theorem import verify_theorem_exhaustive

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="ascii") as fh:
            return fh.read()
    return arg


def _read_graphs(arg: str) -> list[Graph]:
    lines = [line.strip() for line in _read_source(arg).splitlines() if line.strip()]
    if not lines:
        raise UsageError("no graph6 input")
    return [decode_graph6(line) for line in lines]


def _parse_shard(text: str) -> tuple[int, int]:
    try:
        index, total = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shard must look like i/t, got {text!r}") from None
    if not 0 <= index < total:
        raise argparse.ArgumentTypeError(f"shard index must satisfy 0 <= i < t, got {text}")
    return index, total


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def cmd_check(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for g in _read_graphs(args.graph):
        witnesses = find_special_sets(g)
        if not witnesses:
            status = EXIT_NEGATIVE
        if args.porcelain:
            if not witnesses:
                print(f"nonmember\t{g}")
            for w in witnesses:
                print(f"witness\t{g}\t{w.v1}\t{','.join(map(str, w.others))}\t{w.k}")
        else:
            if not witnesses:
                print(f"{g}: not a class member")
                continue
            print(f"{g}: {len(witnesses)} witness(es)")
            for w in witnesses:
                print(f"  {w}")
    return status


def cmd_deck(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.graph)
    if len(graphs) != 1:
        raise UsageError("deck takes exactly one graph")
    g = graphs[0]
    if g.n < 3:
        raise UsageError(f"deck is only defined for n >= 3, got n={g.n}")
    sys.stdout.write(format_deck(deck_of(g)))
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    try:
        deck = parse_deck(_read_source(args.deck))
        report = reconstruct_from_deck(deck)
    except IllegitimateDeckError as exc:
        print(f"illegitimate deck: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    survivors = report.sorted_survivors()
    unique = "true" if report.unique else "false"
    if args.porcelain:
        print(f"candidates\t{report.candidates_tried}")
        for cert in survivors:
            print(f"survivor\t{cert}")
        print(f"unique\t{unique}")
    else:
        print(f"candidates_tried: {report.candidates_tried}")
        print(f"survivors: {len(survivors)}")
        for cert in survivors:
            print(f"  {cert}")
        print(f"unique: {unique}")
    return EXIT_OK if report.unique else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    summary = verify_theorem_exhaustive(args.n, shard=args.shard, jobs=args.jobs)
    sys.stdout.write(summary.render())
    if not args.porcelain:
        for member in summary.members:
            print(f"member: {member}")
    return EXIT_OK if summary.ok else EXIT_NEGATIVE


def cmd_lemmas(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.graph)
    if len(graphs) != 1:
        raise UsageError("lemmas takes exactly one graph")
    g = graphs[0]
    specials = find_special_sets(g)
    if not specials:
        print(f"{g}: not in class", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.trials < 0:
        raise UsageError("trials must be non-negative")
    if args.trials == 0:
        print("warning: 0 trials requested, suite is vacuous", file=sys.stderr)
    result = run_lemma_suite(g, args.trials, args.seed, specials)
    rows = [
        ("lemma1", result.lemma1_failures),
        ("lemma2", result.lemma2_failures),
        ("extension", result.extension_failures),
    ]
    for name, failures in rows:
        verdict = "pass" if not failures else "fail"
        if args.porcelain:
            print(f"{name}\t{verdict}\t{result.checks}\t{failures}")
        else:
            print(f"{name}: {verdict} ({result.checks} checks, {failures} failures)")
    for msg in result.messages:
        print(msg, file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def cmd_generate(args: argparse.Namespace) -> int:
    if args.n < 5:
        raise UsageError(f"generate needs n >= 5, got {args.n}")
    status = EXIT_OK
    for i in range(args.count):
        g = generate_class_member(args.n, args.seed + i, attempts=args.attempts)
        if g is None:
            print(f"no class member found for seed {args.seed + i}", file=sys.stderr)
            status = EXIT_NEGATIVE
        else:
            print(g)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="stable tab-separated output")
    common.add_argument("--jobs", type=int, default=1, help="cap on concurrent workers")

    parser = argparse.ArgumentParser(prog="graphrecon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="list special-set witnesses")
    p.add_argument("graph", help="graph6 string, file of graph6 lines, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("deck", parents=[common], help="print the deck, one graph6 card per line")
    p.add_argument("graph")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild a graph from a deck file")
    p.add_argument("deck", help="deck file (one graph6 card per line) or - for stdin")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", parents=[common], help="exhaustive check for all graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--shard", type=_parse_shard, default=None, metavar="i/t")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", parents=[common], help="randomized labeled proof-step checks")
    p.add_argument("graph")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("generate", parents=[common], help="sample random class members")
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--attempts", type=int, default=400)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IllegitimateDeckError as exc:
        print(f"illegitimate deck: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
