"""Command-line front end: generate, solve, bound, verify, experiment.

Exit codes: 0 ok, 1 verification or run failure, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import math
import sys
from fractions import Fraction
from pathlib import Path

from .board import BoardError, FloodState, build_region_graph, parse_board, play_sequence
from .bounds import (count_non_touching_paths, distinct_colour_bound, expected_shuffle_moves,
                     non_touching_ceiling, path_cost_lower_bound, random_board_tail_bound,
                     random_board_tail_remainder)
from .experiment import ConfigError, ExperimentConfig, rows_to_csv, run_experiment
from .generators import (CertificateParseError, gen_checkerboard, gen_greedy_adversarial,
                         gen_random, gen_reduction_3colour, gen_reduction_4colour,
                         gen_reduction_height3, parse_certificate, serialize_certificate,
                         verify_certificate, worst_case_layout)
from .scs import SCSParseError, parse_scs
from .solvers import STRATEGIES, BudgetExceeded, run_strategy

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GENERATORS = ("checker", "greedy-adv", "worst-case", "random", "reduce4", "reduce3", "reduce-h3")
BOUND_KINDS = ("path-cost", "distinct", "t7-tail", "shuffle-ev", "path-count")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load_board(path: str | None):
    if path is None:
        raise UsageError("--board is required")
    return parse_board(_read(path))


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"generator {args.generator} needs --{name}")


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_generate(args, out) -> int:
    cert = None
    g = args.generator
    if g == "checker":
        _need(args, "n")
        board = gen_checkerboard(args.n, args.h)
    elif g == "greedy-adv":
        _need(args, "n")
        board = gen_greedy_adversarial(args.n)
    elif g == "random":
        _need(args, "n", "c", "seed")
        board = gen_random(args.n, args.c, args.seed, args.h)
    elif g == "worst-case":
        _need(args, "n", "c")
        layout = worst_case_layout(args.n, args.c)
        if layout.clamped:
            print(f"note: diamond radius clamped to r={layout.r} so that r < n/2", file=sys.stderr)
        board = layout.board()
    else:
        _need(args, "scs")
        inst = parse_scs(_read(args.scs))
        if g == "reduce4":
            cert = gen_reduction_4colour(inst, free=args.free)
        elif g == "reduce3":
            ell = args.ell if args.ell is not None else inst.target
            if ell is None:
                raise UsageError("reduce3 needs --ell or a target length in the SCS file")
            cert = gen_reduction_3colour(inst, ell)
        else:
            cert = gen_reduction_height3(inst)
        board = cert.board
    text = board.serialize()
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    if cert is not None:
        cert_path = args.cert or (args.output + ".cert" if args.output else None)
        if cert_path:
            Path(cert_path).write_text(serialize_certificate(cert))
        else:
            print("note: certificate not written; pass --cert or --output", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args, out) -> int:
    board = _load_board(args.board)
    try:
        res = run_strategy(args.strategy, board, seed=args.seed, budget=args.budget,
                           max_nodes=args.max_nodes)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    out.write(res.to_csv(board, header=args.header))
    _, flooded = play_sequence(board, res.witness)
    return EXIT_OK if flooded else EXIT_FAIL


def _default_tail_k(n: int, c: int) -> float:
    if c == 3:
        return (n - 1) / 22
    return 2 * (3 / 10 - 1 / c) * (n - 1)


def cmd_bound(args, out) -> int:
    w = _writer(out)
    kind = args.kind
    if kind == "path-cost":
        res = path_cost_lower_bound(_load_board(args.board))
        w.writerows([("kind", "value", "path_tiles"), (kind, res.cost, len(res.path))])
    elif kind == "distinct":
        board = _load_board(args.board)
        s = FloodState.initial(build_region_graph(board))
        w.writerows([("kind", "value"), (kind, distinct_colour_bound(s))])
    elif kind == "shuffle-ev":
        if args.c is None or args.m is None:
            raise UsageError("shuffle-ev needs --c and --m")
        t = expected_shuffle_moves(args.c, args.m)
        ratio = t / (Fraction(2 * args.c, 3) * args.m)
        w.writerows([("kind", "c", "m", "value", "ratio"),
                     (kind, args.c, args.m, f"{float(t):.6f}", f"{float(ratio):.6f}")])
    elif kind == "path-count":
        if args.len is None:
            raise UsageError("path-count needs --len")
        count = count_non_touching_paths(args.len)
        w.writerows([("kind", "len", "count", "ceiling"),
                     (kind, args.len, count, f"{non_touching_ceiling(args.len):.4f}")])
    else:
        if args.n is None or args.c is None:
            raise UsageError("t7-tail needs --n and --c")
        k = args.k if args.k is not None else _default_tail_k(args.n, args.c)
        value = random_board_tail_bound(args.n, args.c, k, args.max_len)
        rest = random_board_tail_remainder(args.n, args.c, k, args.max_len)
        w.writerows([("kind", "n", "c", "k", "value", "remainder"),
                     (kind, args.n, args.c, f"{k:.6f}", f"{value:.6e}",
                      "inf" if math.isinf(rest) else f"{rest:.6e}")])
    return EXIT_OK


def cmd_verify(args, out) -> int:
    board = _load_board(args.board)
    cert = parse_certificate(_read(args.cert), board)
    report = verify_certificate(cert, max_nodes=args.max_nodes, max_regions=args.max_regions)
    out.write("\n".join(report.lines()) + "\n")
    if report.status == "budget-exceeded":
        return EXIT_BUDGET
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_experiment(args, out) -> int:
    cfg = ExperimentConfig.parse(_read(args.config))
    rows = run_experiment(cfg, jobs=args.jobs)
    text = rows_to_csv(rows, timing=not args.no_timing)
    target = args.output or cfg.output
    if target:
        Path(target).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if all(r["status"] == "ok" for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="floodit", description="Flood-It boards, solvers and bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a board file")
    g.add_argument("generator", choices=GENERATORS)
    g.add_argument("--n", type=int)
    g.add_argument("--h", type=int)
    g.add_argument("--c", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--scs", help="SCS instance file (reductions)")
    g.add_argument("--ell", type=int, help="target length for reduce3")
    g.add_argument("--free", action="store_true", help="reduce4: replicated free-variant board")
    g.add_argument("-o", "--output")
    g.add_argument("--cert", help="certificate sidecar path (default: OUTPUT.cert)")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="run a strategy, print a CSV row")
    s.add_argument("--board", required=True)
    s.add_argument("--strategy", required=True, choices=STRATEGIES)
    s.add_argument("--seed", type=int, default=0, help="seed for the shuffle strategy")
    s.add_argument("--budget", type=int, help="move cap for exact searches")
    s.add_argument("--max-nodes", type=int, default=5_000_000)
    s.add_argument("--header", action="store_true")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bound", help="evaluate a lower bound or estimate")
    b.add_argument("--kind", required=True, choices=BOUND_KINDS)
    b.add_argument("--board")
    b.add_argument("--n", type=int)
    b.add_argument("--c", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--k", type=float)
    b.add_argument("--len", type=int)
    b.add_argument("--max-len", type=int)
    b.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", help="check a reduction certificate")
    v.add_argument("--cert", required=True)
    v.add_argument("--board", required=True)
    v.add_argument("--max-nodes", type=int, default=2_000_000)
    v.add_argument("--max-regions", type=int, default=20_000)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="run a key=value experiment config")
    e.add_argument("config")
    e.add_argument("--no-timing", action="store_true", help="omit wall_ms for reproducible output")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, ConfigError, BoardError, SCSParseError, CertificateParseError,
            ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
