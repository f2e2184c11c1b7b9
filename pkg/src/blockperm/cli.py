"""Command-line front end.

Permutations on the command line are quoted, space-separated label lists;
files hold one permutation per line, with code files carrying a
"n d provenance" header.  Exit codes: 0 success, 1 validation error,
2 verification failure.  BLOCKPERM_THREADS sets the default worker count
for the enumeration subcommands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import selftest as selftest_mod
from .constructions import (
    CodeBook,
    PairEncoder,
    codebook_from_text,
    codebook_payload,
    codebook_to_text,
    cyclic_class_code,
    even_n_code,
    ham_decomp_code,
    largest_syndrome_class,
    syndrome_class,
    verify_min_distance,
    with_verified_min_distance,
    zn1_code,
)
from .enumeration import ball_size_bounds, ball_size_exact, enumerate_spheres, sphere_profile_payload
from .graph import (
    build_graph,
    exact_independent_set,
    greedy_independent_set,
    neighborhood_stats,
    neighborhood_stats_payload,
)
from .perm import block_distance, char_set_payload, distance_by_definition, parse_permutation


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _warn_guard(name: str, value: int, default: int) -> None:
    if value > default:
        print(f"warning: raising {name} guard to {value} (default {default})", file=sys.stderr)


def cmd_dist(args) -> int:
    p1 = parse_permutation(args.perm1)
    p2 = parse_permutation(args.perm2)
    dist = block_distance(p1, p2)
    if args.check_definition:
        _warn_guard("cut-search n", args.max_n, 8)
        slow = distance_by_definition(p1, p2, max_n=args.max_n)
        if slow != dist:
            print(f"mismatch: pair-count {dist} vs cut-search {slow}", file=sys.stderr)
            return 2
    if args.format == "json":
        _emit_json({"distance": dist, "n": len(p1)})
    else:
        print(dist)
    return 0


def cmd_charset(args) -> int:
    _emit_json(char_set_payload(parse_permutation(args.perm)))
    return 0


def cmd_spheres(args) -> int:
    _warn_guard("enumeration n", args.max_n, 8)
    profile = enumerate_spheres(args.n, max_n=args.max_n, workers=args.threads)
    if args.format == "json":
        _emit_json(sphere_profile_payload(profile))
    else:
        print("k,count")
        for k, count in enumerate(profile.counts):
            print(f"{k},{count}")
    return 0


def cmd_ball(args) -> int:
    if args.bounds:
        lower, upper = ball_size_bounds(args.n, args.t)
        if args.format == "json":
            _emit_json({"n": args.n, "t": args.t, "lower": lower, "upper": upper})
        else:
            print(f"{lower} {upper}")
        return 0
    _warn_guard("enumeration n", args.max_n, 8)
    ball = ball_size_exact(args.n, args.t, max_n=args.max_n, workers=args.threads)
    if args.format == "json":
        _emit_json({"n": ball.n, "t": ball.t, "size": ball.size})
    else:
        print(ball.size)
    return 0


def _construct(args) -> CodeBook | None:
    method, n = args.method, args.n
    if method == "syndrome":
        if args.d is None:
            raise ValueError("--method syndrome needs --d")
        enc = PairEncoder.for_n(n)
        if args.f is not None:
            f = tuple(int(tok) for tok in args.f.split(","))
            return syndrome_class(n, args.d, f, enc, max_n=args.max_n)
        return largest_syndrome_class(n, args.d, enc, max_n=args.max_n)
    if method == "cyclic":
        return cyclic_class_code(n)
    if method == "even":
        return even_n_code(n)
    if method == "zn1":
        return zn1_code(n)
    if method == "hamdecomp":
        return ham_decomp_code(n, max_n=max(args.max_n, 9))
    raise ValueError(f"unknown method {method!r}")


def cmd_construct(args) -> int:
    _warn_guard("enumeration n", args.max_n, 8)
    code = _construct(args)
    if code is None:
        print(f"no code found: the search space for n={args.n} is exhausted", file=sys.stderr)
        return 2
    if len(code.words) <= args.max_words:
        code = with_verified_min_distance(code, max_words=args.max_words)
    if args.format == "json":
        _emit_json(codebook_payload(code))
    else:
        sys.stdout.write(codebook_to_text(code))
    return 0


def _read_codebook(path: str, d: int) -> CodeBook:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    try:
        [int(tok) for tok in first.split()]
        bare = True
    except ValueError:
        bare = False
    if bare:
        words = tuple(parse_permutation(ln) for ln in text.splitlines() if ln.strip())
        if not words:
            raise ValueError(f"no permutations in {path}")
        return CodeBook(len(words[0]), d, words, "file")
    return codebook_from_text(text)


def cmd_verify(args) -> int:
    code = _read_codebook(args.path, args.d)
    _warn_guard("pairwise words", args.max_words, 10_000)
    dist = verify_min_distance(code, max_words=args.max_words)
    print(f"{len(code.words)} words, minimum distance {dist}, required {args.d}")
    return 0 if dist >= args.d else 2


def _print_report_text(rep) -> None:
    tag = "" if rep.exact_mode else " (estimate)"
    unavailable = "n/a (product hypothesis fails)"
    print(f"n={rep.n} d={rep.d} (bounds at odd distance {rep.bound_distance})")
    print(f"  gv_lower        {unavailable if rep.gv_lower is None else rep.gv_lower}{tag}")
    print(f"  sp_upper        {unavailable if rep.sp_upper is None else rep.sp_upper}{tag}")
    print(f"  new_upper       {rep.new_upper} (exact {rep.new_upper_exact})")
    print(f"  corollary_applies {rep.corollary_applies}")


def cmd_bounds(args) -> int:
    if args.table1:
        reports = bounds_mod.table1()
        if args.format == "csv":
            print("n,d,sp_upper,new_upper")
            for rep in reports:
                print(f"{rep.n},{rep.d},{rep.sp_upper},{rep.new_upper}")
        else:
            print(f"{'n':>3} {'d':>3} {'sphere-packing':>16} {'new-upper':>12}")
            for rep in reports:
                print(f"{rep.n:>3} {rep.d:>3} {rep.sp_upper:>16} {rep.new_upper:>12}")
        problems = bounds_mod.table1_deviations(reports)
        for problem in problems:
            print(f"deviation: {problem}", file=sys.stderr)
        return 2 if problems else 0
    if args.n is None or args.d is None:
        raise ValueError("bounds needs --n and --d (or --table1)")
    _warn_guard("enumeration n", args.max_n, 8)
    rep = bounds_mod.bound_report(args.n, args.d, exact=args.exact, max_n=args.max_n)
    if args.format == "json":
        _emit_json(bounds_mod.bound_report_payload(rep))
    else:
        _print_report_text(rep)
    return 0


def cmd_graph(args) -> int:
    _warn_guard("graph n", args.max_n, 7)
    if args.stats:
        stats = neighborhood_stats(args.n, args.d, max_n=args.max_n)
        _emit_json(neighborhood_stats_payload(stats))
        return 0
    g = build_graph(args.n, args.d, max_n=args.max_n)
    if args.exact:
        code = exact_independent_set(g, max_vertices=args.max_vertices)
    else:
        code = greedy_independent_set(g, order=args.order)
    if len(code.words) <= args.max_words:
        code = with_verified_min_distance(code, max_words=args.max_words)
    if args.format == "json":
        _emit_json(codebook_payload(code))
    else:
        sys.stdout.write(codebook_to_text(code))
    return 0


def cmd_selftest(args) -> int:
    results = selftest_mod.run_all(max_n=args.max_n)
    for result in results:
        print(selftest_mod.format_result(result))
    failed = sum(1 for r in results if r.status == "fail")
    skipped = sum(1 for r in results if r.status == "skip")
    print(f"{len(results) - failed - skipped} passed, {failed} failed, {skipped} skipped")
    return 2 if failed else 0


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("BLOCKPERM_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockperm",
        description="Permutation codes under the block permutation metric.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("dist", help="block distance between two permutations")
    p.add_argument("perm1")
    p.add_argument("perm2")
    p.add_argument("--check-definition", action="store_true",
                   help="cross-check with the cut-and-reorder search")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("charset", help="characteristic set of a permutation as JSON")
    p.add_argument("perm")
    p.set_defaults(func=cmd_charset)

    p = sub.add_parser("spheres", help="distance histogram around the identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("ball", help="ball size, exact or product bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--bounds", action="store_true", help="print the product sandwich instead")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("construct", help="build a code and print it")
    p.add_argument("--method", required=True,
                   choices=("syndrome", "cyclic", "even", "zn1", "hamdecomp"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--f", default=None, help="comma-separated syndrome, e.g. 1,1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-words", type=int, default=10_000)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a code file against a required distance")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("path")
    p.add_argument("--max-words", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bound report for one (n, d), or the table")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--exact", action="store_true", help="use enumerated balls")
    p.add_argument("--table1", action="store_true", help="print the ten-row comparison table")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("graph", help="full distance graph: stats or independent sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--stats", action="store_true")
    mode.add_argument("--greedy", action="store_true")
    mode.add_argument("--exact", action="store_true")
    p.add_argument("--order", choices=("lexicographic", "degree"), default="lexicographic")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-vertices", type=int, default=1000)
    p.add_argument("--max-words", type=int, default=10_000)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
