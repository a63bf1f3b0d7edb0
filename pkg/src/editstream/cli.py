"""Command-line surface: distance / align / bench / gen.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 distance exceeds the
budget (the algorithms' "infinity" outcome).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .core import EXCEEDS_K, Counters, ExceedsK, FrontierTable
from .alignment import reconstruct_alignment
from .generate import PRESETS, gen_pair
from .oracle import banded_distance, wf_distance
from .readers import ReaderStats, Source, source_from_bytes, source_from_path, source_from_stdin
from .streaming_lce import stream_distance_lce
from .periodic_stream import stream_distance_periodic
from .wavefront import row_wave_distance

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_EXCEEDS = 4

ALGOS = ("dp", "band", "rowwave", "stream-lce", "stream-periodic", "auto")

# Per-symbol and per-k cost model for the combined dispatcher, calibrated
# once against the bench harness on this implementation and frozen.
_LCE_PER_SYMBOL = 2.6      # block build + query work per input symbol, /log
_LCE_PER_K2 = 40.0
_PERIODIC_PER_SYMBOL = 1.0
_PERIODIC_PER_K3 = 14.0


class KCeilingExceeded(RuntimeError):
    """auto-k gave up: the distance exceeds the configured ceiling."""

    def __init__(self, ceiling: int, passes: int):
        super().__init__(f"distance exceeds the k ceiling {ceiling}")
        self.ceiling = ceiling
        self.passes = passes


@dataclass
class RunReport:
    """What one distance computation did, for the JSON and CSV outputs."""

    algorithm: str
    distance: Union[int, ExceedsK]
    k: Optional[int]
    comparisons: int = 0
    maturity_events: int = 0
    peak_live_entries: int = 0
    wall_ns: int = 0
    passes: int = 1
    reader_x: Optional[ReaderStats] = None
    reader_y: Optional[ReaderStats] = None

    def to_json(self) -> dict:
        def reader(stats: Optional[ReaderStats]) -> Optional[dict]:
            if stats is None:
                return None
            return {"bytes_read": stats.bytes_read,
                    "peak_lookback": stats.peak_lookback,
                    "passes": stats.passes}

        return {
            "algorithm": self.algorithm,
            "distance": None if self.distance is EXCEEDS_K else self.distance,
            "exceeds_k": self.distance is EXCEEDS_K,
            "k": self.k,
            "comparisons": self.comparisons,
            "maturity_events": self.maturity_events,
            "peak_live_entries": self.peak_live_entries,
            "wall_ns": self.wall_ns,
            "passes": self.passes,
            "reader_x": reader(self.reader_x),
            "reader_y": reader(self.reader_y),
        }


def dispatch_combined(n: int, m: int, k: int, sigma: int = 256) -> str:
    """Pick the cheaper streaming algorithm from the modeled costs
    n*min(log k, log sigma) + k^2 versus n + k^3; ties go to stream-periodic."""
    size = max(n, m, 1)
    log_factor = min(math.log2(max(k, 2)), math.log2(max(sigma, 2)))
    lce_cost = _LCE_PER_SYMBOL * size * log_factor + _LCE_PER_K2 * k * k
    periodic_cost = _PERIODIC_PER_SYMBOL * size + _PERIODIC_PER_K3 * k ** 3
    return "stream-lce" if lce_cost < periodic_cost else "stream-periodic"


def _run_streaming(algo: str, x_source: Source, y_source: Source, k: int,
                   keep_frontier: bool = False,
                   ) -> tuple[Union[int, ExceedsK], FrontierTable, Counters]:
    counters = Counters()
    xs = x_source.open()
    ys = y_source.open()
    fn = stream_distance_lce if algo == "stream-lce" else stream_distance_periodic
    distance, table = fn(xs, ys, k, keep_frontier=keep_frontier, counters=counters)
    return distance, table, counters


def _run_algo(algo: str, x_source: Source, y_source: Source, k: Optional[int],
              keep_frontier: bool = False,
              ) -> tuple[Union[int, ExceedsK], Optional[FrontierTable], Counters]:
    counters = Counters()
    if algo == "dp":
        x = _slurp(x_source)
        y = _slurp(y_source)
        return wf_distance(x, y), None, counters
    assert k is not None
    if algo == "band":
        x = _slurp(x_source)
        y = _slurp(y_source)
        return banded_distance(x, y, k), None, counters
    if algo == "rowwave":
        x = _slurp(x_source)
        y = _slurp(y_source)
        distance, table = row_wave_distance(x, y, k, keep_frontier=keep_frontier,
                                            counters=counters)
        return distance, table, counters
    if algo in ("stream-lce", "stream-periodic"):
        distance, table, counters = _run_streaming(algo, x_source, y_source, k,
                                                   keep_frontier)
        return distance, table, counters
    raise ValueError(f"unknown algorithm {algo!r}")


def _slurp(source: Source) -> bytes:
    src = source.open()
    out = bytearray()
    pos = 0
    while True:
        got = src.slice(pos, pos + 65536)
        if not got:
            break
        out += got
        pos += len(got)
    return bytes(out)


def auto_k(x_source: Source, y_source: Source, algo: str,
           ceiling: int = 1 << 20, keep_frontier: bool = False,
           ) -> tuple[Union[int, ExceedsK], int, int, Optional[FrontierTable], Counters]:
    """Doubling search for the smallest power-of-two budget that succeeds.

    Returns (distance, k used, passes).  The found k is below twice the true
    distance.  Raises KCeilingExceeded past the ceiling.
    """
    if not (x_source.reopenable and y_source.reopenable):
        raise ValueError("auto-k needs re-openable sources")
    passes = 0
    k = 1
    while True:
        passes += 1
        distance, table, counters = _run_algo(algo, x_source, y_source, k,
                                              keep_frontier)
        if distance is not EXCEEDS_K:
            return distance, k, passes, table, counters
        if k >= ceiling:
            raise KCeilingExceeded(ceiling, passes)
        k = min(2 * k, ceiling)


# -- argument handling --------------------------------------------------------


def _make_source(path: str, strip_newline: bool) -> Source:
    if path == "-":
        data = sys.stdin.buffer.read()
        if strip_newline and data.endswith(b"\n"):
            data = data[:-1]
        return source_from_bytes(data)
    if strip_newline:
        with open(path, "rb") as fh:
            data = fh.read()
        if data.endswith(b"\n"):
            data = data[:-1]
        return source_from_bytes(data)
    return source_from_path(path)


def _input_sources(args) -> tuple[Source, Source]:
    if args.file_x == "-" and args.file_y == "-":
        raise UsageError("at most one of the inputs may be standard input")
    return (_make_source(args.file_x, args.strip_newlines),
            _make_source(args.file_y, args.strip_newlines))


class UsageError(ValueError):
    pass


def _pick_algo(args, x_source: Source, y_source: Source, k: Optional[int]) -> str:
    if args.algo != "auto":
        return args.algo
    x_len = _probe_len(args.file_x, x_source)
    y_len = _probe_len(args.file_y, y_source)
    return dispatch_combined(x_len, y_len, k if k is not None else 1)


def _probe_len(path: str, source: Source) -> int:
    import os

    if path != "-":
        try:
            return os.path.getsize(path)
        except OSError:
            pass
    return len(_slurp(source))


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="editstream",
        description="bounded-distance edit distance over byte streams")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file_x", help="first input path, or - for stdin")
        p.add_argument("file_y", help="second input path, or - for stdin")
        group = p.add_mutually_exclusive_group(required=False)
        group.add_argument("--k", type=int, default=None, help="distance budget")
        group.add_argument("--auto-k", action="store_true",
                           help="search budgets 1,2,4,... until one succeeds")
        p.add_argument("--max-k", type=int, default=1 << 20,
                       help="ceiling for --auto-k")
        p.add_argument("--algo", choices=ALGOS, default="auto")
        p.add_argument("--strip-newlines", action="store_true",
                       help="drop a single trailing newline from each input")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p_dist = sub.add_parser("distance", help="print the edit distance")
    add_common(p_dist)

    p_align = sub.add_parser("align", help="print an optimal edit script")
    add_common(p_align)
    form = p_align.add_mutually_exclusive_group()
    form.add_argument("--cigar", action="store_true", default=True,
                      help="run-length ops (default)")
    form.add_argument("--ops", action="store_true", help="one op per line")

    p_bench = sub.add_parser("bench", help="timed sweeps over generated pairs")
    p_bench.add_argument("--preset", choices=PRESETS, default="random")
    p_bench.add_argument("--n", type=int, nargs="+", required=True)
    p_bench.add_argument("--k", type=int, nargs="+", required=True)
    p_bench.add_argument("--sigma", type=int, default=4)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=1)
    p_bench.add_argument("--algos", nargs="+", default=["rowwave", "stream-lce",
                                                        "stream-periodic"],
                         choices=ALGOS[:-1])
    p_bench.add_argument("--csv", default="-", help="output path, - for stdout")

    p_gen = sub.add_parser("gen", help="write a generated pair to two files")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--k", type=int, required=True)
    p_gen.add_argument("--sigma", type=int, default=4)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--preset", choices=PRESETS, default="random")
    p_gen.add_argument("--out-x", required=True)
    p_gen.add_argument("--out-y", required=True)
    return parser


def _cmd_distance(args, out) -> int:
    x_source, y_source = _input_sources(args)
    if args.algo == "dp" and not args.auto_k and args.k is None:
        k_used: Optional[int] = None
    elif not args.auto_k and args.k is None:
        raise UsageError("--k or --auto-k is required for this algorithm")
    else:
        k_used = args.k
    algo = _pick_algo(args, x_source, y_source, args.k)
    start = time.perf_counter_ns()
    passes = 1
    if args.auto_k:
        if algo == "dp":
            raise UsageError("--auto-k does not apply to the full DP")
        try:
            distance, k_used, passes, _, counters = auto_k(
                x_source, y_source, algo, ceiling=args.max_k)
        except KCeilingExceeded as exc:
            print(f"exceeds k (ceiling {exc.ceiling} after {exc.passes} passes)",
                  file=out)
            return EXIT_EXCEEDS
    else:
        distance, _, counters = _run_algo(algo, x_source, y_source, k_used)
    wall = time.perf_counter_ns() - start
    report = RunReport(algorithm=algo, distance=distance, k=k_used,
                       comparisons=counters.comparisons,
                       maturity_events=counters.maturity_events,
                       peak_live_entries=counters.peak_live_entries,
                       wall_ns=wall, passes=passes,
                       reader_x=x_source.stats, reader_y=y_source.stats)
    if args.json:
        json.dump(report.to_json(), out)
        out.write("\n")
    elif distance is EXCEEDS_K:
        print("exceeds k", file=out)
    elif args.auto_k:
        print(f"{distance} (k={k_used}, passes={passes})", file=out)
    else:
        print(distance, file=out)
    return EXIT_EXCEEDS if distance is EXCEEDS_K else EXIT_OK


def _cmd_align(args, out) -> int:
    x_source, y_source = _input_sources(args)
    if args.algo in ("dp", "band"):
        raise UsageError("align needs a frontier-producing algorithm "
                         "(rowwave, stream-lce, stream-periodic, auto)")
    if not args.auto_k and args.k is None:
        raise UsageError("--k or --auto-k is required")
    algo = _pick_algo(args, x_source, y_source, args.k)
    if args.auto_k:
        try:
            distance, k_used, passes, table, _ = auto_k(
                x_source, y_source, algo, ceiling=args.max_k, keep_frontier=True)
        except KCeilingExceeded as exc:
            print(f"exceeds k (ceiling {exc.ceiling} after {exc.passes} passes)",
                  file=out)
            return EXIT_EXCEEDS
    else:
        distance, table, _ = _run_algo(algo, x_source, y_source, args.k,
                                       keep_frontier=True)
    if distance is EXCEEDS_K:
        print("exceeds k", file=out)
        return EXIT_EXCEEDS
    x = _slurp(x_source)
    y = _slurp(y_source)
    script = reconstruct_alignment(table, distance, len(y) - len(x), x, y)
    if args.ops:
        for op in script.ops:
            print(op, file=out)
    else:
        print(script.to_cigar(), file=out)
    return EXIT_OK


_BENCH_COLUMNS = ["algo", "n", "k", "sigma", "seed", "distance", "comparisons",
                  "wall_ns", "peak_entries", "peak_lookback"]


def _cmd_bench(args, out) -> int:
    rows = []
    for n in args.n:
        for k in args.k:
            for rep in range(args.repeats):
                seed = args.seed + rep
                x, y, _ = gen_pair(n, min(k, n), args.sigma, seed, args.preset)
                for algo in args.algos:
                    x_source = source_from_bytes(x)
                    y_source = source_from_bytes(y)
                    start = time.perf_counter_ns()
                    distance, _, counters = _run_algo(algo, x_source, y_source, k)
                    wall = time.perf_counter_ns() - start
                    rows.append({
                        "algo": algo, "n": n, "k": k, "sigma": args.sigma,
                        "seed": seed,
                        "distance": "inf" if distance is EXCEEDS_K else distance,
                        "comparisons": counters.comparisons,
                        "wall_ns": wall,
                        "peak_entries": counters.peak_live_entries,
                        "peak_lookback": max(x_source.stats.peak_lookback,
                                             y_source.stats.peak_lookback),
                    })
    if args.csv == "-":
        _write_csv(out, rows)
    else:
        with open(args.csv, "w", newline="") as fh:
            _write_csv(fh, rows)
    return EXIT_OK


def _write_csv(fh, rows) -> None:
    writer = csv.DictWriter(fh, fieldnames=_BENCH_COLUMNS)
    writer.writeheader()
    writer.writerows(rows)


def _cmd_gen(args, out) -> int:
    x, y, edits = gen_pair(args.n, args.k, args.sigma, args.seed, args.preset)
    with open(args.out_x, "wb") as fh:
        fh.write(x)
    with open(args.out_y, "wb") as fh:
        fh.write(y)
    print(f"wrote {len(x)} and {len(y)} bytes, {len(edits)} edits planted",
          file=out)
    return EXIT_OK


def run_cli(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "distance":
            return _cmd_distance(args, out)
        if args.command == "align":
            return _cmd_align(args, out)
        if args.command == "bench":
            return _cmd_bench(args, out)
        if args.command == "gen":
            return _cmd_gen(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
