"""netdiffsim: fast frontier-based network diffusion simulation.

Independent cascade and linear threshold models over immutable CSR graphs,
with deterministic counter-based randomness, Monte-Carlo influence
estimation, CELF/greedy seed selection, benchmark harness and CSV/JSON/plot
exports.
"""

__version__ = "0.1.0"

from .bench import BenchmarkReport, run_benchmark
from .diffusion import (
    ModelSpec,
    SimulationResult,
    TrialBatch,
    TrialPlan,
    live_edge_reachability,
    run_trials,
    simulate,
    simulate_ic,
    simulate_lt,
)
from .errors import FormatError, NetdiffError, ParameterError, ValidationError
from .generators import GenSpec, generate
from .graph import (
    CsrGraph,
    EdgeList,
    assign_weights_tv,
    assign_weights_ur,
    assign_weights_wc,
    build_csr,
    normalize_incoming,
)
from .influence import (
    EstimatorConfig,
    SeedSet,
    SelectionTrace,
    estimate_sigma,
    select_celf,
    select_degree,
    select_greedy,
    select_random,
)
from .io_formats import (
    HeatmapData,
    IdMap,
    TimeSeries,
    export_heatmap,
    export_timeseries,
    heatmap_from_results,
    read_edge_list,
    read_report,
    timeseries_from_results,
    write_report,
)
from .randomness import deviate, deviate_array

__all__ = [
    "BenchmarkReport",
    "CsrGraph",
    "EdgeList",
    "EstimatorConfig",
    "FormatError",
    "GenSpec",
    "HeatmapData",
    "IdMap",
    "ModelSpec",
    "NetdiffError",
    "ParameterError",
    "SeedSet",
    "SelectionTrace",
    "SimulationResult",
    "TimeSeries",
    "TrialBatch",
    "TrialPlan",
    "ValidationError",
    "assign_weights_tv",
    "assign_weights_ur",
    "assign_weights_wc",
    "build_csr",
    "deviate",
    "deviate_array",
    "estimate_sigma",
    "export_heatmap",
    "export_timeseries",
    "generate",
    "heatmap_from_results",
    "live_edge_reachability",
    "normalize_incoming",
    "read_edge_list",
    "read_report",
    "run_benchmark",
    "run_trials",
    "select_celf",
    "select_degree",
    "select_greedy",
    "select_random",
    "simulate",
    "simulate_ic",
    "simulate_lt",
    "timeseries_from_results",
    "write_report",
]
