"""End-to-end benchmark over the bundled sample datasets.

Equivalent to the CLI run

    msmdist bench --data data --algos classic,improved,greedy,pruned,dtw,pruned-dtw \
        --c 0.5 --pairs 40 --reps 3 --seed 42 --out report.csv --znorm

but through the library API, with the report printed as a table.  Exact
algorithms show a relative error of exactly 0; heuristics trade error for
speed; the pruned rows add the fraction of table cells skipped.
"""

from pathlib import Path

from msmdist import load_dataset_dir, run_benchmark, write_csv

DATA = Path(__file__).resolve().parent.parent / "data"

datasets = load_dataset_dir(DATA, znorm=True)
print("datasets:", ", ".join(f"{d.name} ({len(d)} series)" for d in datasets))

report = run_benchmark(
    datasets,
    ["classic", "improved", "triangle", "greedy", "sakoe", "itakura",
     "pruned", "dtw", "pruned-dtw"],
    pair_limit=40,
    repetitions=3,
    seed=42,
)

print()
print(f"{'dataset':<8} {'algorithm':<11} {'mean ns':>12} {'rel err':>9} {'pruned':>7}")
for row in report.rows:
    ratio = "" if row.mean_prune_ratio is None else f"{row.mean_prune_ratio:.1%}"
    print(
        f"{row.dataset:<8} {row.algorithm:<11} {row.mean_runtime_ns:>12,.0f}"
        f" {row.mean_relative_error:>9.3g} {ratio:>7}"
    )

out = Path(__file__).resolve().parent / "report.csv"
write_csv(report, out)
print()
print(f"CSV written to {out}")
