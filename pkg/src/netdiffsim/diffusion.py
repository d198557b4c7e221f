"""Independent cascade and linear threshold simulation.

Two interchangeable engines: `frontier` (BFS over out-arcs of the previous
step's newly activated nodes; work proportional to arcs incident to activated
nodes) and `naive` (full scan of every node in every step, as a reference
implementation). Per-arc coins and per-node thresholds come from the
stateless deviate, so both engines produce identical results for the same
TrialPlan.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ValidationError
from .graph import CsrGraph
from .randomness import THRESHOLD_TAG, _MASK64, deviate, deviate_array

ENGINES = ("frontier", "naive")
MODELS = ("ic", "lt")

_ENGINE_CODE = {"frontier": _kernels.ENGINE_FRONTIER, "naive": _kernels.ENGINE_NAIVE}
_MODEL_CODE = {"ic": _kernels.MODEL_IC, "lt": _kernels.MODEL_LT}

LT_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TrialPlan:
    """All randomness of one simulation trial: (global seed, trial index)."""

    global_seed: int
    trial_index: int = 0

    def __post_init__(self):
        if self.trial_index < 0:
            raise ValidationError("trial_index must be non-negative")


@dataclass(frozen=True)
class ModelSpec:
    """A diffusion model bound to a graph; validates LT's weight constraint."""

    model: str
    graph: CsrGraph

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValidationError(f"unknown model {self.model!r}; expected ic or lt")
        if self.model == "lt":
            sums = self.graph.incoming_weight_sums()
            bad = np.flatnonzero(sums > 1.0 + LT_SUM_TOLERANCE)
            if bad.size:
                v = int(bad[0])
                raise ValidationError(
                    f"LT incoming weights of node {v} sum to {sums[v]:.6f} > 1; "
                    "use normalize_incoming() or the WC weight model"
                )


@dataclass
class SimulationResult:
    """Outcome of a single trial."""

    activated: np.ndarray  # sorted node ids, seeds included
    newly_active_per_iter: np.ndarray  # entry 0 = |S|
    iterations: int
    edges_examined: int
    activated_at: np.ndarray  # step of first activation, -1 if never

    @property
    def activated_set(self) -> set:
        return set(int(v) for v in self.activated)

    @property
    def size(self) -> int:
        return int(self.activated.shape[0])


def _check_seeds(graph: CsrGraph, seeds) -> np.ndarray:
    arr = np.asarray(list(seeds), dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= graph.node_count):
        bad = arr[(arr < 0) | (arr >= graph.node_count)][0]
        raise ValidationError(f"seed id {int(bad)} outside [0, {graph.node_count})")
    if np.unique(arr).size != arr.size:
        raise ValidationError("seed set contains duplicates")
    return arr


def _trim_newly(newly: np.ndarray, n_seeds: int) -> np.ndarray:
    nz = np.flatnonzero(newly)
    last = int(nz[-1]) if nz.size else 0
    return newly[: last + 1].copy()


def _result_from_kernel(activated_at, newly, iterations, work) -> SimulationResult:
    activated = np.flatnonzero(activated_at >= 0).astype(np.int64)
    return SimulationResult(
        activated=activated,
        newly_active_per_iter=_trim_newly(newly, 0),
        iterations=int(iterations),
        edges_examined=int(work),
        activated_at=activated_at,
    )


def simulate_ic(
    spec: ModelSpec, seeds, plan: TrialPlan, engine: str = "frontier"
) -> SimulationResult:
    """Run one independent cascade trial.

    When u first activates at step t, arc (u, w) succeeds iff
    deviate(seed, trial, arc_slot) < p_{u,w}; each arc is consumed at most
    once and the process runs until a step activates nothing.
    """
    if spec.model != "ic":
        raise ValidationError(f"simulate_ic called with model {spec.model!r}")
    if engine not in ENGINES:
        raise ValidationError(f"unknown engine {engine!r}")
    g = spec.graph
    seed_arr = _check_seeds(g, seeds)
    gs = np.uint64(plan.global_seed & _MASK64)
    tr = np.uint64(plan.trial_index)
    fn = _kernels.ic_frontier if engine == "frontier" else _kernels.ic_naive
    return _result_from_kernel(*fn(g.offsets, g.targets, g.weights, seed_arr, gs, tr))


def simulate_lt(
    spec: ModelSpec,
    seeds,
    plan: TrialPlan,
    engine: str = "frontier",
    thresholds=None,
) -> SimulationResult:
    """Run one linear threshold trial.

    theta_v is sampled once per trial from the deviate (or taken from the
    explicit `thresholds` override); node v activates as soon as the summed
    weight of its active in-neighbors reaches theta_v. Deterministic given
    thresholds, so both engines agree exactly.
    """
    if spec.model != "lt":
        raise ValidationError(f"simulate_lt called with model {spec.model!r}")
    if engine not in ENGINES:
        raise ValidationError(f"unknown engine {engine!r}")
    g = spec.graph
    seed_arr = _check_seeds(g, seeds)
    gs = np.uint64(plan.global_seed & _MASK64)
    tr = np.uint64(plan.trial_index)
    if thresholds is None:
        theta = _kernels.thresholds_for_trial(g.node_count, gs, tr)
    else:
        theta = np.ascontiguousarray(thresholds, dtype=np.float64)
        if theta.shape[0] != g.node_count:
            raise ValidationError("thresholds array must have one entry per node")
    fn = _kernels.lt_frontier if engine == "frontier" else _kernels.lt_naive
    return _result_from_kernel(*fn(g.offsets, g.targets, g.weights, seed_arr, theta))


def lt_thresholds(graph: CsrGraph, plan: TrialPlan) -> np.ndarray:
    """The thresholds a given TrialPlan induces (exposed for tests/tools)."""
    ids = (np.arange(graph.node_count, dtype=np.uint64)) ^ THRESHOLD_TAG
    return deviate_array(plan.global_seed, plan.trial_index, ids)


def live_edge_reachability(spec: ModelSpec, seeds, plan: TrialPlan) -> set:
    """Independent IC oracle: keep each arc iff its coin succeeds, then BFS.

    IC activation equals reachability over the kept-arc subgraph under the
    identical per-arc coin rule. Implemented without the engine kernels on
    purpose.
    """
    if spec.model != "ic":
        raise ValidationError("live-edge reachability is defined for IC only")
    g = spec.graph
    seed_arr = _check_seeds(g, seeds)
    coins = deviate_array(plan.global_seed & _MASK64, plan.trial_index,
                          np.arange(g.arc_count))
    kept = coins < g.weights
    visited = set(int(s) for s in seed_arr)
    stack = list(visited)
    while stack:
        u = stack.pop()
        for slot in range(int(g.offsets[u]), int(g.offsets[u + 1])):
            if kept[slot]:
                w = int(g.targets[slot])
                if w not in visited:
                    visited.add(w)
                    stack.append(w)
    return visited


@dataclass
class TrialBatch:
    """Aggregated statistics over a batch of trials with one seed set."""

    trials: int
    sizes: np.ndarray  # |activated| per trial
    iterations: np.ndarray
    edges_examined: np.ndarray
    node_counts: np.ndarray  # per-node activation count over the batch
    newly_sum: np.ndarray  # per-iteration sum of newly activated counts

    @property
    def mean_size(self) -> float:
        return float(self.sizes.mean())

    def mean_cumulative(self) -> np.ndarray:
        """Mean cumulative activated count per iteration, final value carried
        forward for trials that stopped early."""
        nz = np.flatnonzero(self.newly_sum)
        last = int(nz[-1]) if nz.size else 0
        return np.cumsum(self.newly_sum[: last + 1]) / self.trials


def run_trials(
    spec: ModelSpec,
    seeds,
    global_seed: int,
    trials: int,
    engine: str = "frontier",
    parallel: int = 1,
) -> TrialBatch:
    """Run trials 0..trials-1 of TrialPlan(global_seed, .) and aggregate.

    With parallel > 1, contiguous trial chunks run on worker threads (the
    kernels release the GIL); results are identical to the sequential run.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    if engine not in ENGINES:
        raise ValidationError(f"unknown engine {engine!r}")
    g = spec.graph
    seed_arr = _check_seeds(g, seeds)
    gs = np.uint64(global_seed & _MASK64)
    model = _MODEL_CODE[spec.model]
    eng = _ENGINE_CODE[engine]
    n = g.node_count

    def chunk(lo, hi):
        counts = np.zeros(n, np.int64)
        newly = np.zeros(n + 1, np.int64)
        sizes, iters, works = _kernels.run_batch(
            g.offsets, g.targets, g.weights, seed_arr, gs,
            lo, hi, model, eng, counts, newly,
        )
        return sizes, iters, works, counts, newly

    if parallel <= 1 or trials == 1:
        parts = [chunk(0, trials)]
    else:
        workers = min(parallel, trials)
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = [
                pool.submit(chunk, int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:])
                if hi > lo
            ]
            parts = [f.result() for f in futs]

    sizes = np.concatenate([p[0] for p in parts])
    iters = np.concatenate([p[1] for p in parts])
    works = np.concatenate([p[2] for p in parts])
    counts = sum(p[3] for p in parts)
    newly = sum(p[4] for p in parts)
    return TrialBatch(trials, sizes, iters, works, counts, newly)


def simulate(
    spec: ModelSpec, seeds, plan: TrialPlan, engine: str = "frontier"
) -> SimulationResult:
    """Model-dispatching single-trial entry point."""
    if spec.model == "ic":
        return simulate_ic(spec, seeds, plan, engine)
    return simulate_lt(spec, seeds, plan, engine)
