"""Command line entry point.

Exit status: 0 on success, 1 on bad input, 2 when a result fails its own
verification (an internal error).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as benchmod
from .arrangement import ArrangementView
from .chirotope import CountingOracle, PointSetOracle, find_collinear_triple, table_from_wiring
from .fileio import ParseError, colors_from_labels, parse_colors, parse_points, parse_wiring, read_text
from .hamsandwich import Cut, ham_sandwich_cut, verify_cut
from .pseudovertical import RankOutOfRange, gamma_traversal, select_rank
from .render import RenderSpec, render_svg


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # bad flags are input errors, not internal ones
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _default_seed() -> int:
    env = os.environ.get("PSEUDOVERT_SEED")
    if env is None or env == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError("PSEUDOVERT_SEED must be an integer, got %r" % env) from None


def _load(args, need_colors=False):
    """Oracle and (optional) colors from --input or --wiring/--colors."""
    if (args.input is None) == (args.wiring is None):
        raise UsageError("give exactly one of --input or --wiring")
    labels = None
    if args.input is not None:
        pf = parse_points(read_text(args.input))
        bad = find_collinear_triple(pf.points)
        if bad is not None:
            raise UsageError("collinear triple %d %d %d" % bad)
        oracle = PointSetOracle(pf.points)
        labels = pf.colors
    else:
        oracle = table_from_wiring(parse_wiring(read_text(args.wiring)))
    if getattr(args, "colors", None) is not None:
        labels = parse_colors(read_text(args.colors))
    if not need_colors:
        return oracle, None
    if labels is None:
        raise UsageError("no colors: use colored point lines or --colors")
    if len(labels) != oracle.n:
        raise UsageError("%d colors for %d points" % (len(labels), oracle.n))
    colors = colors_from_labels(labels)
    try:
        colors.validate(oracle.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return oracle, colors


def _check_id(name, v, n):
    if not 0 <= v < n:
        raise UsageError("%s=%d is not a point id (0..%d)" % (name, v, n - 1))


def cmd_hamcut(args, out):
    oracle, colors = _load(args, need_colors=True)
    counting = CountingOracle(oracle)
    cut = ham_sandwich_cut(counting, colors, seed=args.seed, strategy=args.strategy)
    print("cut %d %d" % (cut.red_point, cut.blue_point), file=out)
    print("queries %d" % counting.count, file=out)
    if not verify_cut(oracle, colors, cut):
        print("error: cut failed verification", file=sys.stderr)
        return 2
    return 0


def cmd_verify_cut(args, out):
    oracle, colors = _load(args, need_colors=True)
    _check_id("--red", args.red, oracle.n)
    _check_id("--blue", args.blue, oracle.n)
    ok = verify_cut(oracle, colors, Cut(args.red, args.blue))
    print("valid" if ok else "invalid", file=out)
    return 0 if ok else 1


def _subset(text, n):
    if text is None:
        return list(range(n))
    try:
        B = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError("--subset must be a comma separated list of ids") from None
    if not B:
        raise UsageError("--subset is empty")
    for b in B:
        _check_id("subset member", b, n)
    return B


def cmd_select_rank(args, out):
    oracle, _ = _load(args)
    n = oracle.n
    _check_id("--p", args.p, n)
    _check_id("--q", args.q, n)
    if args.p == args.q:
        raise UsageError("--p and --q must differ")
    B = _subset(args.subset, n)
    view = ArrangementView(oracle)
    try:
        m = select_rank(view, (args.p, args.q), B, args.k, strategy=args.strategy, seed=args.seed)
    except RankOutOfRange as e:
        raise UsageError(str(e)) from None
    print(m, file=out)
    if args.check:
        ref = gamma_traversal(view, (args.p, args.q)).restricted(B)[args.k - 1]
        if ref != m:
            print("error: traversal gives %d" % ref, file=sys.stderr)
            return 2
    return 0


def cmd_bench(args, out):
    algs = benchmod.ALGORITHMS if args.algorithm == "all" else (args.algorithm,)
    try:
        recs = benchmod.run_bench(args.min_n, args.max_n, args.trials, algs,
                                  seed=args.seed, jobs=args.jobs)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.write(benchmod.to_csv(recs))
    if args.plot:
        benchmod.plot(recs, args.plot)
    return 0


def cmd_render(args, out):
    oracle, _ = _load(args)
    hl = None
    if (args.p is None) != (args.q is None):
        raise UsageError("give both --p and --q to highlight a crossing")
    if args.p is not None:
        _check_id("--p", args.p, oracle.n)
        _check_id("--q", args.q, oracle.n)
        if args.p == args.q:
            raise UsageError("--p and --q must differ")
        hl = (args.p, args.q)
    svg = render_svg(RenderSpec(ArrangementView(oracle), hl, args.width, args.height))
    if args.output:
        with open(args.output, "w") as f:
            f.write(svg)
    else:
        out.write(svg)
    return 0


def _inputs(sp, colors=False):
    sp.add_argument("--input", metavar="FILE", help="point file")
    sp.add_argument("--wiring", metavar="FILE", help="wiring file")
    if colors:
        sp.add_argument("--colors", metavar="FILE", help="colors file (r/b per point)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pseudovert",
                 description="Ham-sandwich cuts and pseudo-vertical ranks "
                             "from sidedness queries.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hamcut", help="compute a ham-sandwich cut")
    _inputs(sp, colors=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--strategy", choices=("randomized", "deterministic"), default="randomized")
    sp.set_defaults(func=cmd_hamcut)

    sp = sub.add_parser("verify-cut", help="check a red/blue pair")
    _inputs(sp, colors=True)
    sp.add_argument("--red", type=int, required=True)
    sp.add_argument("--blue", type=int, required=True)
    sp.set_defaults(func=cmd_verify_cut)

    sp = sub.add_parser("select-rank", help="k-th line met by a pseudo-vertical")
    _inputs(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--subset", help="comma separated line ids")
    sp.add_argument("--check", action="store_true", help="cross-check by full traversal")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--strategy", choices=("randomized", "deterministic"), default="randomized")
    sp.set_defaults(func=cmd_select_rank)

    sp = sub.add_parser("bench", help="query counts as CSV")
    sp.add_argument("--min-n", type=int, default=256)
    sp.add_argument("--max-n", type=int, default=2048)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--algorithm", choices=benchmod.ALGORITHMS + ("all",), default="all")
    sp.add_argument("--seed", type=int, help="first trial seed")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--plot", metavar="FILE", help="also write a figure (png, svg, pdf)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("render", help="SVG wiring diagram")
    _inputs(sp)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--width", type=int)
    sp.add_argument("--height", type=int)
    sp.add_argument("--output", "-o", metavar="FILE")
    sp.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args, out)
    except (UsageError, ParseError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
