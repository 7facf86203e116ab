"""Move-Split-Merge time-series distance.

Exact algorithms (full table and row buffer), a linear-time special case
for constant series, four upper-bound heuristics, a pruned exact variant,
and a DTW baseline, plus dataset loading and a benchmark harness.
"""

from .bench import (
    BenchReport,
    BenchRow,
    Dataset,
    load_dataset_dir,
    load_ucr_tsv,
    run_benchmark,
    write_csv,
)
from .constant import constant_msm, constant_suffix_costs
from .core import (
    SENTINEL,
    DatasetFormatError,
    InfeasibleRegionError,
    PruneStats,
    as_series,
    split_merge_cost,
    z_normalize,
)
from .dtw import dtw, dtw_path_bound, pruned_dtw
from .exact import msm, msm_table
from .heuristics import HeuristicResult, greedy, itakura, sakoe_chiba, triangle
from .pruning import (
    PruneConfig,
    itakura_configs,
    lb_ms,
    lb_t,
    pruned_msm,
    standard_configs,
)

__version__ = "0.1.0"

__all__ = [
    "SENTINEL",
    "BenchReport",
    "BenchRow",
    "Dataset",
    "DatasetFormatError",
    "HeuristicResult",
    "InfeasibleRegionError",
    "PruneConfig",
    "PruneStats",
    "as_series",
    "constant_msm",
    "constant_suffix_costs",
    "dtw",
    "dtw_path_bound",
    "greedy",
    "itakura",
    "itakura_configs",
    "lb_ms",
    "lb_t",
    "load_dataset_dir",
    "load_ucr_tsv",
    "msm",
    "msm_table",
    "pruned_dtw",
    "pruned_msm",
    "run_benchmark",
    "sakoe_chiba",
    "split_merge_cost",
    "standard_configs",
    "triangle",
    "write_csv",
    "z_normalize",
]
