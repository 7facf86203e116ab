"""Command-line interface: distance computation, benchmarking, selftest.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import BenchParams, load_dataset_dir, load_ucr_tsv, run_benchmark, write_csv
from .core import DatasetFormatError, InfeasibleRegionError, z_normalize
from .constant import constant_msm
from .dtw import dtw, pruned_dtw
from .exact import msm, msm_table
from .heuristics import greedy, itakura, sakoe_chiba, triangle
from .pruning import PruneConfig, pruned_msm
from .selftest import run_selftest

ALGOS = (
    "classic",
    "improved",
    "cmsm",
    "triangle",
    "greedy",
    "sakoe",
    "itakura",
    "pruned",
    "dtw",
    "pruned-dtw",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="msmdist", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("dist", help="distance between the first series of two files")
    p_dist.add_argument("fileA")
    p_dist.add_argument("fileB")
    p_dist.add_argument("--algo", choices=ALGOS, default="improved")
    p_dist.add_argument("--c", type=float, default=0.5, help="split/merge cost")
    p_dist.add_argument("--b", type=int, default=None, help="band radius for sakoe")
    p_dist.add_argument("--d", type=float, default=2.0 / 3.0, help="itakura parameter")
    p_dist.add_argument("--q", type=float, default=0.0, help="constant reference value")
    p_dist.add_argument("--slanted", action="store_true", help="slant the sakoe band")
    p_dist.add_argument(
        "--ub", choices=("greedy", "triangle", "sakoe", "itakura", "inf"), default="greedy"
    )
    p_dist.add_argument("--ub-update", action="store_true")
    p_dist.add_argument("--band", action="store_true", help="enable the pruning band")
    p_dist.add_argument("--lb", choices=("none", "ms", "t", "max"), default="none")
    p_dist.add_argument("--znorm", action="store_true", help="z-normalize both series")

    p_bench = sub.add_parser("bench", help="benchmark algorithms over a dataset directory")
    p_bench.add_argument("--data", required=True, help="directory of UCR-format files")
    p_bench.add_argument("--algos", required=True, help="comma-separated algorithm list")
    p_bench.add_argument("--c", type=float, default=0.5)
    p_bench.add_argument("--pairs", type=int, default=1000, help="max sampled pairs per dataset")
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument("--znorm", action="store_true")

    sub.add_parser("selftest", help="golden examples and oracle smoke suite")
    return parser


def _first_series(path: str, znorm: bool) -> np.ndarray:
    ds = load_ucr_tsv(path, znorm=False)
    values = ds.series[0][1]
    return z_normalize(values) if znorm else values


def _cmd_dist(args) -> int:
    x = _first_series(args.fileA, args.znorm)
    y = _first_series(args.fileB, args.znorm)
    stats = None
    if args.algo == "classic":
        value, _ = msm_table(x, y, args.c)
    elif args.algo == "improved":
        value = msm(x, y, args.c)
    elif args.algo == "cmsm":
        if np.ptp(y) != 0.0:
            raise DatasetFormatError("cmsm needs a constant series as the second input")
        if len(y) != len(x):
            raise DatasetFormatError("cmsm needs series of equal length")
        value = constant_msm(x, float(y[0]), args.c)
    elif args.algo == "triangle":
        value = triangle(x, y, args.c, args.q).value
    elif args.algo == "greedy":
        value = greedy(x, y, args.c).value
    elif args.algo == "sakoe":
        b = args.b if args.b is not None else max(1, round(0.1 * max(len(x), len(y))))
        value = sakoe_chiba(x, y, args.c, b, slanted=args.slanted).value
    elif args.algo == "itakura":
        value = itakura(x, y, args.c, args.d).value
    elif args.algo == "pruned":
        cfg = PruneConfig(
            ub_source="infinite" if args.ub == "inf" else args.ub,
            ub_update=args.ub_update,
            pruning_band=args.band,
            lb=args.lb,
            q=args.q,
            band_b=args.b,
            band_slanted=args.slanted,
            itakura_d=args.d,
        )
        value, stats = pruned_msm(x, y, args.c, cfg)
    elif args.algo == "dtw":
        value = dtw(x, y)
    elif args.algo == "pruned-dtw":
        value, stats = pruned_dtw(x, y)
    else:  # pragma: no cover
        raise AssertionError(args.algo)
    print(repr(value))
    if stats is not None:
        print(f"cells {stats.cells_computed}/{stats.cells_total}")
    return 0


def _cmd_bench(args) -> int:
    datasets = load_dataset_dir(args.data, znorm=args.znorm)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    if "cmsm" in algos:
        raise DatasetFormatError("cmsm compares against a constant series; not benchable on pairs")
    report = run_benchmark(
        datasets,
        algos,
        params=BenchParams(c=args.c),
        pair_limit=args.pairs,
        repetitions=args.reps,
        seed=args.seed,
    )
    write_csv(report, args.out)
    print(f"wrote {len(report.rows)} rows to {args.out}")
    by_algo: dict[str, list[float]] = {}
    for row in report.rows:
        by_algo.setdefault(row.algorithm, []).append(row.mean_runtime_ns)
    for algo in algos:
        if algo in by_algo:
            mean_ns = sum(by_algo[algo]) / len(by_algo[algo])
            print(f"{algo}: mean runtime {mean_ns:.0f} ns over {len(by_algo[algo])} dataset(s)")
    if "pruned" in by_algo and "pruned-dtw" in by_algo:
        a = sum(by_algo["pruned"]) / len(by_algo["pruned"])
        b = sum(by_algo["pruned-dtw"]) / len(by_algo["pruned-dtw"])
        faster = "pruned (msm)" if a < b else "pruned-dtw"
        print(f"pruned msm vs pruned dtw: {a:.0f} ns vs {b:.0f} ns -> {faster} faster here")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "dist":
            return _cmd_dist(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "selftest":
            return 0 if run_selftest() else 3
    except (DatasetFormatError, InfeasibleRegionError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
