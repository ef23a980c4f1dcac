"""``mtclab`` command line.

Exit codes: 0 success / everything passed, 1 a check FAILed (or the two
adjacency methods disagree), 2 usage, input or I/O error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .competition import Method, competition_graph
from .errors import ConfigError, MtcError, UnknownTheorem
from .harness import THEOREM_IDS, FuzzConfig, Verdict, check, check_all, fuzz
from .mtd import read_mtd, serialize_mtd
from .recognition import find_asteroidal_triple, is_c4_free, is_chordal, is_interval
from .report import emit_dot, emit_graph, emit_report
from .structure import classify_parts, verify_block_structure
from .tournament import random_tournament

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}") from None
    if any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError(f"part sizes must be positive: {text!r}")
    return sizes


def _seed_range(text: str) -> range:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        lo, hi = int(m[1]), int(m[2])
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty seed range {text!r}")
        return range(lo, hi + 1)
    if text.isdigit():
        return range(int(text), int(text) + 1)
    raise argparse.ArgumentTypeError(f"expected SEED or LO..HI (inclusive), got {text!r}")


def _default_seed() -> int:
    raw = os.environ.get("MTCLAB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MTCLAB_SEED must be an integer, got {raw!r}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_gen(args) -> int:
    seed = _default_seed() if args.seed is None else args.seed
    if len(args.parts) < 3:
        raise UsageError("a multipartite tournament needs at least 3 parts")
    t = random_tournament(args.parts, seed)
    parts = ",".join(map(str, args.parts))
    _write(serialize_mtd(t, comments=(f"gen --parts {parts} --seed {seed}",)), args.output)
    return EXIT_OK


def cmd_compete(args) -> int:
    t = read_mtd(args.input)
    status = EXIT_OK
    if args.method == "both":
        g = competition_graph(t, Method.FAST)
        oracle = competition_graph(t, Method.ORACLE)
        if g != oracle:
            status = EXIT_FAIL
            print("methods disagree on:")
            fast_edges = set(g.sorted_edges())
            for u, v in sorted(fast_edges ^ set(oracle.sorted_edges())):
                print(f"  {u} -- {v} only in {'fast' if (u, v) in fast_edges else 'oracle'}")
        else:
            print("methods agree")
    else:
        g = competition_graph(t, Method(args.method))
    sys.stdout.write(emit_graph(g))
    if args.dot:
        _write(emit_dot(t, g), args.dot)
    return status


def cmd_classify(args) -> int:
    t = read_mtd(args.input)
    g = competition_graph(t)
    rep = classify_parts(t, g)
    if rep.loose:
        rep = verify_block_structure(t, g)
    sys.stdout.write(emit_report(rep))
    return EXIT_OK if rep.blocks_pass else EXIT_FAIL


def cmd_recognize(args) -> int:
    g = competition_graph(read_mtd(args.input))
    classes = ["interval", "chordal", "c4free", "at"] if args.cls is None else [args.cls]
    for cls in classes:
        if cls == "interval":
            sys.stdout.write(emit_report(is_interval(g)))
        elif cls == "chordal":
            sys.stdout.write(emit_report(is_chordal(g)))
        elif cls == "c4free":
            sys.stdout.write(emit_report(is_c4_free(g)))
        else:
            w = find_asteroidal_triple(g)
            print(f"at-free: {'true' if w is None else 'false'}")
            if w is not None:
                print(f"  triple: {{{','.join(w.triple)}}}")
                for k, p in zip(w.triple, w.paths):
                    print(f"  avoiding N[{k}]: {'-'.join(p)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_mtd(args.input)
    if args.theorem:
        results = [check(args.theorem, t)]
    else:
        results = check_all(t)
    sys.stdout.write(emit_report(results))
    return EXIT_FAIL if any(r.verdict is Verdict.FAIL for r in results) else EXIT_OK


def cmd_fuzz(args) -> int:
    if args.exhaustive and args.seeds is not None:
        raise UsageError("--exhaustive and --seeds are mutually exclusive")
    seeds = None if args.exhaustive else (args.seeds or range(0, 200))
    config = FuzzConfig(tuple(args.parts_menu), seeds=seeds, stop_on_fail=args.stop_on_fail)
    rep = fuzz(config, jobs=args.jobs)
    sys.stdout.write(emit_report(rep))
    if args.output:
        _write(rep.to_json(), args.output)
    return EXIT_FAIL if rep.fail_count else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mtclab", description="(1,2)-step competition graphs of multipartite tournaments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random multipartite tournament (MTD v1)")
    p.add_argument("--parts", type=_sizes, required=True, help="part sizes, e.g. 2,2,1")
    p.add_argument("--seed", type=int, default=None, help="seed (default: $MTCLAB_SEED or 0)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compete", help="print C_{1,2}(D)")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--method", choices=["fast", "oracle", "both"], default="fast")
    p.add_argument("--dot", metavar="OUT", help="also write Graphviz DOT")
    p.set_defaults(func=cmd_compete)

    p = sub.add_parser("classify", help="tight/loose classification and block structure")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("recognize", help="interval / chordal / C4-free / AT-free recognition")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--class", dest="cls", choices=["interval", "chordal", "c4free", "at"])
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="run catalog checks on one instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--theorem", metavar="ID", help="one of: " + ", ".join(THEOREM_IDS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="run every check over generated instances")
    p.add_argument("--parts-menu", nargs="+", type=_sizes, required=True, metavar="SIZES")
    p.add_argument("--seeds", type=_seed_range, default=None, help="LO..HI inclusive (default 0..199)")
    p.add_argument("--exhaustive", action="store_true", help="enumerate all orientations instead of seeds")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stop-on-fail", action="store_true")
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownTheorem as exc:
        print(f"mtclab: unknown theorem id {exc.args[0]!r}", file=sys.stderr)
    except (UsageError, ConfigError) as exc:
        print(f"mtclab: {exc}", file=sys.stderr)
    except MtcError as exc:
        where = f"{args.input}:{exc.line}: " if getattr(exc, "line", None) and hasattr(args, "input") else ""
        print(f"mtclab: {where}{exc}", file=sys.stderr)
    except OSError as exc:
        print(f"mtclab: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
