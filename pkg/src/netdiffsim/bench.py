"""Comparative benchmark harness: time engines over a batch of trials.

Each engine runs the identical TrialPlans single-threaded after one untimed
warmup trial; only the simulation loop is timed, so graph construction and
JIT compilation stay out of the numbers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .diffusion import ModelSpec, run_trials
from .errors import ValidationError


@dataclass
class EngineStats:
    engine: str
    wall_seconds: float
    simulations_per_second: float
    total_edges_examined: int
    activated_sizes: np.ndarray
    mean_activated: float


@dataclass
class BenchmarkReport:
    model: str
    weight_model: str
    node_count: int
    arc_count: int
    seed_count: int
    trials: int
    global_seed: int
    engines: list = field(default_factory=list)

    def normalized_runtimes(self) -> dict:
        """Fastest engine = 1, others = ratio rounded to nearest integer."""
        fastest = min(e.wall_seconds for e in self.engines)
        return {
            e.engine: max(1, round(e.wall_seconds / fastest)) for e in self.engines
        }

    def to_payload(self) -> dict:
        return {
            "model": self.model,
            "weight_model": self.weight_model,
            "node_count": self.node_count,
            "arc_count": self.arc_count,
            "seed_count": self.seed_count,
            "trials": self.trials,
            "global_seed": self.global_seed,
            "normalized_runtimes": self.normalized_runtimes(),
            "engines": [
                {
                    "engine": e.engine,
                    "wall_seconds": e.wall_seconds,
                    "simulations_per_second": e.simulations_per_second,
                    "total_edges_examined": e.total_edges_examined,
                    "mean_activated": e.mean_activated,
                }
                for e in self.engines
            ],
        }


def run_benchmark(
    spec: ModelSpec,
    seeds,
    engines,
    trials: int,
    global_seed: int,
    weight_model: str = "file",
    repeats: int = 1,
) -> BenchmarkReport:
    """Time each engine over the same `trials` TrialPlans.

    With repeats > 1 each engine's batch is run that many times and the
    minimum wall time is reported (timeit-style), which suppresses scheduler
    noise on shared machines.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    if repeats < 1:
        raise ValidationError("repeats must be >= 1")
    engines = list(engines)
    if not engines:
        raise ValidationError("need at least one engine")
    seeds = list(seeds)
    report = BenchmarkReport(
        model=spec.model,
        weight_model=weight_model,
        node_count=spec.graph.node_count,
        arc_count=spec.graph.arc_count,
        seed_count=len(seeds),
        trials=trials,
        global_seed=global_seed,
    )
    walls = {e: np.inf for e in engines}
    batches = {}
    for engine in engines:
        # warmup: one untimed trial triggers allocation and JIT effects
        run_trials(spec, seeds, global_seed, 1, engine=engine)
    # Interleave repeats so slow phases of a shared machine hit every
    # engine, not whichever one happened to own that block of time.
    for _ in range(repeats):
        for engine in engines:
            t0 = time.perf_counter()
            batch = run_trials(spec, seeds, global_seed, trials, engine=engine)
            walls[engine] = min(walls[engine], time.perf_counter() - t0)
            batches[engine] = batch
    for engine in engines:
        batch = batches[engine]
        report.engines.append(
            EngineStats(
                engine=engine,
                wall_seconds=walls[engine],
                simulations_per_second=trials / walls[engine],
                total_edges_examined=int(batch.edges_examined.sum()),
                activated_sizes=batch.sizes,
                mean_activated=float(batch.sizes.mean()),
            )
        )
    return report


def format_table(report: BenchmarkReport) -> str:
    """Human-readable summary table."""
    lines = [
        f"model={report.model} weights={report.weight_model} "
        f"n={report.node_count} m={report.arc_count} "
        f"seeds={report.seed_count} trials={report.trials}",
        f"{'engine':<10} {'wall (s)':>10} {'sims/sec':>12} "
        f"{'edges examined':>16} {'mean activated':>15} {'normalized':>11}",
    ]
    norm = report.normalized_runtimes()
    for e in report.engines:
        lines.append(
            f"{e.engine:<10} {e.wall_seconds:>10.4f} "
            f"{e.simulations_per_second:>12.1f} {e.total_edges_examined:>16d} "
            f"{e.mean_activated:>15.2f} {norm[e.engine]:>11d}"
        )
    return "\n".join(lines)
