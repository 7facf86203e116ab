"""Dataset ingestion, benchmark orchestration, and CSV reporting.

Datasets use the UCR text layout: one series per line, a label field first,
then the values, separated by tabs or commas.  The benchmark samples series
pairs per dataset (seeded, all pairs when few enough), times every
algorithm over warm-up plus repeated runs on a monotonic clock, and
reports mean runtime, mean relative error against the exact reference, and
the mean prune ratio where the algorithm reports one.
"""

from __future__ import annotations

import csv
import math
import random
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import DatasetFormatError, z_normalize
from .dtw import dtw, pruned_dtw
from .exact import msm, msm_table
from .heuristics import greedy, itakura, sakoe_chiba, triangle
from .pruning import PruneConfig, pruned_msm

_FIELD_SPLIT = re.compile(r"[\t,]")

CSV_HEADER = (
    "dataset,algorithm,params,mean_runtime_ns,mean_relative_error,"
    "mean_prune_ratio,pair_count"
)

#: Matching a heuristic value against the exact reference closer than this
#: counts as exact; keeps float noise out of the error columns.
EQUAL_TOL = 1e-9


@dataclass
class Dataset:
    name: str
    series: list[tuple[str, np.ndarray]]
    source_path: str = ""

    def __len__(self) -> int:
        return len(self.series)


@dataclass
class BenchRow:
    dataset: str
    algorithm: str
    params: str
    mean_runtime_ns: float
    mean_relative_error: float
    mean_prune_ratio: float | None
    pair_count: int


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)


def load_ucr_tsv(path, znorm: bool = False, name: str | None = None) -> Dataset:
    """Parse a UCR-format text file into a Dataset.

    Each non-blank line is one series: a label field followed by numeric
    fields, tab- or comma-separated.  Raises `DatasetFormatError` naming
    the line for unparsable or non-finite values, or when the file holds
    no series at all.
    """
    path = Path(path)
    series: list[tuple[str, np.ndarray]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            fields = [f for f in _FIELD_SPLIT.split(line) if f.strip() != ""]
            if len(fields) < 2:
                raise DatasetFormatError(
                    f"{path.name}:{lineno}: expected a label and at least one value"
                )
            label = fields[0].strip()
            try:
                values = np.array([float(f) for f in fields[1:]], dtype=np.float64)
            except ValueError as exc:
                raise DatasetFormatError(f"{path.name}:{lineno}: {exc}") from exc
            if not np.all(np.isfinite(values)):
                raise DatasetFormatError(
                    f"{path.name}:{lineno}: non-finite value in series"
                )
            if znorm:
                values = z_normalize(values)
            series.append((label, values))
    if not series:
        raise DatasetFormatError(f"{path.name}: file contains no series")
    return Dataset(name=name or path.stem, series=series, source_path=str(path))


def load_dataset_dir(path, znorm: bool = False) -> list[Dataset]:
    """Load every *.tsv/*.txt/*.csv file under a directory as a dataset."""
    root = Path(path)
    files = sorted(
        p for p in root.iterdir() if p.suffix.lower() in (".tsv", ".txt", ".csv")
    )
    if not files:
        raise DatasetFormatError(f"no dataset files found under {root}")
    return [load_ucr_tsv(p, znorm=znorm) for p in files]


def _sample_pairs(count: int, limit: int, rng: random.Random) -> list[tuple[int, int]]:
    pairs = [(i, j) for i in range(count) for j in range(i + 1, count)]
    if len(pairs) <= limit:
        return pairs
    return rng.sample(pairs, limit)


@dataclass
class BenchParams:
    """Per-run algorithm parameters for `run_benchmark`."""

    c: float = 0.5
    q: float = 0.0
    band_frac: float = 0.1
    itakura_d: float = 2.0 / 3.0
    squared_dtw: bool = True


def _algorithms(params: BenchParams):
    """Name -> (callable(x, y) -> (value, stats-or-None), family, param string)."""
    c, q = params.c, params.q

    def band_for(x):
        return max(1, int(round(params.band_frac * len(x))))

    fastest = PruneConfig(
        ub_source="greedy", ub_update=True, pruning_band=True, lb="ms", q=q
    )
    return {
        "classic": (lambda x, y: (msm_table(x, y, c)[0], None), "msm", f"c={c}"),
        "improved": (lambda x, y: (msm(x, y, c), None), "msm", f"c={c}"),
        "triangle": (lambda x, y: (triangle(x, y, c, q).value, None), "msm", f"c={c};q={q}"),
        "greedy": (lambda x, y: (greedy(x, y, c).value, None), "msm", f"c={c}"),
        "sakoe": (
            lambda x, y: (
                sakoe_chiba(x, y, c, band_for(x if len(x) >= len(y) else y), slanted=True).value,
                None,
            ),
            "msm",
            f"c={c};b={params.band_frac:.0%};slanted",
        ),
        "itakura": (
            lambda x, y: (itakura(x, y, c, params.itakura_d).value, None),
            "msm",
            f"c={c};d={params.itakura_d:.4g}",
        ),
        "pruned": (
            lambda x, y: pruned_msm(x, y, c, fastest),
            "msm",
            f"c={c};ub=greedy;update;band;lb=ms",
        ),
        "dtw": (
            lambda x, y: (dtw(x, y, squared=params.squared_dtw), None),
            "dtw",
            "squared" if params.squared_dtw else "absolute",
        ),
        "pruned-dtw": (
            lambda x, y: pruned_dtw(x, y, squared=params.squared_dtw),
            "dtw",
            ("squared" if params.squared_dtw else "absolute") + ";ub=path",
        ),
    }


def run_benchmark(
    datasets,
    algos,
    params: BenchParams | None = None,
    pair_limit: int = 1000,
    repetitions: int = 5,
    seed: int = 42,
) -> BenchReport:
    """Time the chosen algorithms over sampled pairs of every dataset.

    For each (dataset, algorithm) the mean runtime in nanoseconds over
    ``repetitions`` timed runs (after one warm-up) is recorded along with
    the mean relative error against the exact reference of the algorithm's
    family (MSM full table / plain DTW) and the mean prune ratio where
    available.  Pair sampling is deterministic in ``seed``; failures on
    individual pairs are counted out rather than aborting the run.
    Relative errors use (value - exact) / exact, with 0/0 read as 0 and
    positive/0 pairs excluded from the mean.
    """
    params = params or BenchParams()
    registry = _algorithms(params)
    unknown = [a for a in algos if a not in registry]
    if unknown:
        raise ValueError(f"unknown algorithms: {', '.join(unknown)} "
                         f"(choose from {', '.join(sorted(registry))})")
    rng = random.Random(seed)
    rows: list[BenchRow] = []
    for ds in datasets:
        pairs = _sample_pairs(len(ds), pair_limit, rng)
        if not pairs:
            continue
        refs: dict[str, list[float]] = {"msm": [], "dtw": []}
        for i, j in pairs:
            xa, ya = ds.series[i][1], ds.series[j][1]
            refs["msm"].append(msm_table(xa, ya, params.c)[0])
            refs["dtw"].append(dtw(xa, ya, squared=params.squared_dtw))
        for algo in algos:
            fn, family, pstr = registry[algo]
            runtimes: list[float] = []
            errors: list[float] = []
            ratios: list[float] = []
            ok_pairs = 0
            for k, (i, j) in enumerate(pairs):
                xa, ya = ds.series[i][1], ds.series[j][1]
                try:
                    value, stats = fn(xa, ya)  # warm-up, also the value
                    t = 0
                    for _ in range(repetitions):
                        t0 = time.perf_counter_ns()
                        fn(xa, ya)
                        t += time.perf_counter_ns() - t0
                except Exception:
                    continue
                ok_pairs += 1
                runtimes.append(t / repetitions)
                ref = refs[family][k]
                diff = value - ref
                if abs(diff) <= EQUAL_TOL:
                    errors.append(0.0)
                elif ref != 0.0:
                    errors.append(diff / ref)
                # positive/0: flagged by omission
                if stats is not None:
                    ratios.append(stats.prune_ratio)
            if ok_pairs == 0:
                continue
            rows.append(
                BenchRow(
                    dataset=ds.name,
                    algorithm=algo,
                    params=pstr,
                    mean_runtime_ns=float(np.mean(runtimes)),
                    mean_relative_error=float(np.mean(errors)) if errors else math.inf,
                    mean_prune_ratio=float(np.mean(ratios)) if ratios else None,
                    pair_count=ok_pairs,
                )
            )
    # sorted curves: per algorithm, datasets ordered by mean runtime
    rows.sort(key=lambda r: (r.algorithm, r.mean_runtime_ns))
    return BenchReport(rows=rows)


def write_csv(report: BenchReport, path) -> None:
    """Write the report: fixed header then one row per entry, LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for r in report.rows:
            writer.writerow(
                [
                    r.dataset,
                    r.algorithm,
                    r.params,
                    repr(float(r.mean_runtime_ns)),
                    repr(float(r.mean_relative_error)),
                    "" if r.mean_prune_ratio is None else repr(float(r.mean_prune_ratio)),
                    r.pair_count,
                ]
            )
