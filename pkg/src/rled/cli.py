"""``rled`` command line: dist, gen, verify, bench.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 resource guard (oversized input or refused expansion).
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

import numpy as np

from rled.engine import SweepStats, debug_borders, rle_edit_distance
from rled.oracle import OracleRefused, rle_naive_ed
from rled.rle import DecompressionRefused, RleParseError, encode_raw, parse_rle, random_rle

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

BENCH_HEADER = ["m", "n", "max_run", "seed", "time_ns", "distance", "ops", "segments_created"]
DEFAULT_SIZES = [64, 128, 256, 512, 1024, 2048]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read(text: str, raw: bool):
    return encode_raw(text) if raw else parse_rle(text)


def _warm() -> None:
    # load the compiled kernels (match and mismatch paths) before any timing
    rle_edit_distance(parse_rle("a2b"), parse_rle("ba2"))


def cmd_dist(args) -> int:
    x = _read(args.a, args.raw)
    y = _read(args.b, args.raw)
    _warm()
    if args.debug_borders:
        d, dump = debug_borders(x, y)
        json.dump({"coordinates": "doubled", "blocks": dump}, sys.stderr)
        sys.stderr.write("\n")
    t0 = time.perf_counter_ns()
    d = rle_edit_distance(x, y)
    elapsed = time.perf_counter_ns() - t0
    if args.json:
        print(json.dumps({"distance": d, "m": x.m, "n": y.m, "M": x.M, "N": y.M, "time_ns": elapsed}))
    else:
        print(d)
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    try:
        s = random_rle(rng, args.m, args.max_run, args.alphabet)
    except ValueError as e:
        raise UsageError(str(e)) from e
    print(s)
    return EXIT_OK


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    passed = failed = 0
    for case in range(args.cases):
        try:
            x = random_rle(rng, int(rng.integers(0, args.max_runs, endpoint=True)), args.max_run, args.alphabet)
            y = random_rle(rng, int(rng.integers(0, args.max_runs, endpoint=True)), args.max_run, args.alphabet)
        except ValueError as e:
            raise UsageError(str(e)) from e
        got = rle_edit_distance(x, y)
        want = rle_naive_ed(x, y)
        if got == want:
            passed += 1
        else:
            failed += 1
            print(f"MISMATCH case {case}: {x} {y} engine={got} naive={want}")
    print(f"passed {passed} failed {failed}")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def bench_rows(sizes, max_run: int, seed: int, alphabet: int):
    """One BenchRecord dict per size, each on a freshly generated pair."""
    for m in sizes:
        rng = np.random.default_rng([seed, m])
        x = random_rle(rng, m, max_run, alphabet)
        y = random_rle(rng, m, max_run, alphabet)
        stats = SweepStats()
        t0 = time.perf_counter_ns()
        d = rle_edit_distance(x, y, stats)
        elapsed = time.perf_counter_ns() - t0
        yield {"m": m, "n": m, "max_run": max_run, "seed": seed, "time_ns": elapsed,
               "distance": d, "ops": stats.ops, "segments_created": stats.created}


def cmd_bench(args) -> int:
    sizes = args.sizes or DEFAULT_SIZES
    if any(a >= b for a, b in zip(sizes, sizes[1:])) or min(sizes) < 1:
        raise UsageError("sizes must be positive and ascending")
    try:
        random_rle(np.random.default_rng(0), 2, args.max_run, args.alphabet)
    except ValueError as e:
        raise UsageError(str(e)) from e
    _warm()
    try:
        out = open(args.out, "w", newline="") if args.out else sys.stdout
    except OSError as e:
        raise UsageError(f"cannot write {args.out}: {e}") from e
    try:
        w = csv.DictWriter(out, fieldnames=BENCH_HEADER)
        w.writeheader()
        for row in bench_rows(sizes, args.max_run, args.seed, args.alphabet):
            w.writerow(row)
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rled", description="Edit distance on run-length encoded strings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dist", help="distance between two strings")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--raw", action="store_true", help="read arguments as literal text")
    d.add_argument("--json", action="store_true", help="print a JSON record")
    d.add_argument("--debug-borders", action="store_true",
                   help="dump every block's output border as JSON on stderr")
    d.set_defaults(func=cmd_dist)

    g = sub.add_parser("gen", help="print a random RLE string")
    g.add_argument("m", type=int, help="number of runs")
    g.add_argument("--max-run", type=int, default=10)
    g.add_argument("--alphabet", type=int, default=4)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="compare the engine with the naive table on random pairs")
    v.add_argument("--cases", type=int, default=1000)
    v.add_argument("--max-runs", type=int, default=8, help="most runs per string")
    v.add_argument("--max-run", type=int, default=6)
    v.add_argument("--alphabet", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time m = n instances, write CSV")
    b.add_argument("sizes", type=int, nargs="*", help=f"run counts (default {DEFAULT_SIZES})")
    b.add_argument("--max-run", type=int, default=10**9)
    b.add_argument("--alphabet", type=int, default=4)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", help="CSV path (default stdout)")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"rled: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RleParseError as e:
        print(f"rled: parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OverflowError, OracleRefused, DecompressionRefused) as e:
        print(f"rled: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
