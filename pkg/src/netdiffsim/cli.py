"""Command-line entry point.

Subcommands: generate, weights, simulate, influence, benchmark. Every run is
deterministic given --seed (timings aside). Exit codes: 0 success, 2 usage
error, 3 validation error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bench import format_table, run_benchmark
from .diffusion import ModelSpec, run_trials
from .errors import NetdiffError, FormatError, ParameterError, ValidationError
from .generators import GenSpec, generate
from .graph import (
    assign_weights_tv,
    assign_weights_ur,
    assign_weights_wc,
    build_csr,
    normalize_incoming,
)
from .influence import (
    EstimatorConfig,
    SeedSet,
    select_celf,
    select_degree,
    select_greedy,
    select_random,
)
from .io_formats import (
    HeatmapData,
    IdMap,
    TimeSeries,
    dump_edges,
    export_heatmap,
    export_timeseries,
    read_edge_list,
    write_report,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

_GEN_KINDS = {"er": "erdos_renyi", "ws": "watts_strogatz", "regular": "random_regular"}


def _add_graph_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file (SNAP style: 'u v [w]')")
    src.add_argument("--gen", choices=sorted(_GEN_KINDS),
                     help="generate a synthetic graph instead of reading one")
    p.add_argument("--directed", action="store_true",
                   help="treat input edges as directed (default: undirected)")
    p.add_argument("--nodes", type=int, default=0, help="generator node count")
    p.add_argument("--p", type=float, default=0.0, dest="gen_p",
                   help="generator probability (ER edge prob, WS rewiring prob)")
    p.add_argument("--k", type=int, default=0, dest="gen_k",
                   help="generator integer parameter (WS neighbors, regular degree)")
    p.add_argument("--gen-seed", type=int, default=0,
                   help="seed for the synthetic generator")
    p.add_argument("--weights", default="wc", choices=["tv", "ur", "wc", "file"],
                   help="edge-weight model (file = use weights from the input)")
    p.add_argument("--weight-seed", type=int, default=None,
                   help="seed for TV/UR weight draws (default: derived from --seed)")
    p.add_argument("--normalize", action="store_true",
                   help="rescale incoming weights to satisfy the LT constraint")


def _add_seed_args(p):
    p.add_argument("--seeds", help="comma-separated seed node ids (external ids)")
    p.add_argument("--num-seeds", type=int, default=0,
                   help="pick this many seeds with --seed-method")
    p.add_argument("--seed-method", default="random", choices=["random", "degree"],
                   help="how to pick --num-seeds seeds")


def _load_graph(args, global_seed):
    if args.input is not None:
        weighted = args.weights == "file"
        try:
            with open(args.input) as fh:
                edges, id_map = read_edge_list(fh, directed=args.directed,
                                               weighted=weighted)
        except OSError as exc:
            raise _IoFail(str(exc)) from exc
        graph, _ = build_csr(edges)
    else:
        if args.weights == "file":
            raise ValidationError("--weights file requires --input")
        spec = GenSpec(_GEN_KINDS[args.gen], args.nodes, args.gen_p,
                       args.gen_k, args.gen_seed)
        graph, _ = build_csr(generate(spec))
        id_map = IdMap.identity(graph.node_count)

    wseed = args.weight_seed if args.weight_seed is not None else global_seed + 1
    if args.weights == "tv":
        graph = assign_weights_tv(graph, wseed)
    elif args.weights == "ur":
        graph = assign_weights_ur(graph, wseed)
    elif args.weights == "wc":
        graph = assign_weights_wc(graph)
    if args.normalize:
        graph = normalize_incoming(graph)
    return graph, id_map


def _resolve_seeds(args, graph, id_map, spec_for_degree=None, global_seed=0):
    if args.seeds:
        return [id_map.internal(tok) for tok in args.seeds.split(",")]
    if args.num_seeds > 0:
        dummy = ModelSpec("ic", graph) if spec_for_degree is None else spec_for_degree
        if args.seed_method == "degree":
            return list(select_degree(dummy, args.num_seeds))
        return list(select_random(dummy, args.num_seeds, global_seed))
    raise ValidationError("provide --seeds or --num-seeds")


class _IoFail(Exception):
    pass


def _emit(payload, kind, args):
    if getattr(args, "out", None):
        try:
            with open(args.out, "w") as fh:
                write_report(payload, kind, fh)
        except OSError as exc:
            raise _IoFail(str(exc)) from exc
    if getattr(args, "json", False):
        write_report(payload, kind, sys.stdout)
        return True
    return False


def cmd_generate(args):
    spec = GenSpec(_GEN_KINDS[args.kind], args.nodes, args.gen_p, args.gen_k,
                   args.gen_seed)
    edges = generate(spec)
    try:
        with open(args.out, "w") as fh:
            fh.write(f"# {spec.kind} n={spec.n} p={spec.p} k={spec.k} "
                     f"seed={spec.seed}\n")
            dump_edges(edges, fh)
    except OSError as exc:
        raise _IoFail(str(exc)) from exc
    print(f"wrote {len(edges.edges)} undirected edges over {spec.n} nodes "
          f"to {args.out}")
    return EXIT_OK


def cmd_weights(args):
    graph, id_map = _load_graph(args, args.seed)
    try:
        with open(args.out, "w") as fh:
            fh.write(f"# directed weighted arcs, weight model {args.weights}\n")
            from .io_formats import dump_edge_list

            dump_edge_list(graph, fh, id_map)
    except OSError as exc:
        raise _IoFail(str(exc)) from exc
    print(f"wrote {graph.arc_count} weighted arcs to {args.out}")
    return EXIT_OK


def cmd_simulate(args):
    graph, id_map = _load_graph(args, args.seed)
    spec = ModelSpec(args.model, graph)
    seeds = _resolve_seeds(args, graph, id_map, spec_for_degree=spec,
                           global_seed=args.seed)
    batch = run_trials(spec, seeds, args.seed, args.trials, engine=args.engine,
                       parallel=args.parallel)
    payload = {
        "model": args.model,
        "engine": args.engine,
        "weight_model": args.weights,
        "trials": args.trials,
        "global_seed": args.seed,
        "node_count": graph.node_count,
        "arc_count": graph.arc_count,
        "seeds": [str(id_map.external(s)) for s in seeds],
        "sigma_estimate": batch.mean_size,
        "mean_iterations": float(batch.iterations.mean()),
        "mean_edges_examined": float(batch.edges_examined.mean()),
    }

    heatmap = timeseries = None
    if args.export_heatmap:
        heatmap = HeatmapData(batch.node_counts, args.trials, list(seeds))
        with open(args.export_heatmap, "w") as fh:
            export_heatmap(heatmap, fh, id_map)
    if args.export_timeseries:
        timeseries = TimeSeries(batch.mean_cumulative(), args.trials)
        with open(args.export_timeseries, "w") as fh:
            export_timeseries(timeseries, fh)
    if args.plot:
        from . import plotting

        if heatmap is None:
            heatmap = HeatmapData(batch.node_counts, args.trials, list(seeds))
        if timeseries is None:
            timeseries = TimeSeries(batch.mean_cumulative(), args.trials)
        plotting.plot_heatmap(heatmap, args.plot + ".heatmap.png")
        plotting.plot_timeseries(timeseries, args.plot + ".timeseries.png")

    if not _emit(payload, "simulate", args):
        print(f"sigma_estimate = {batch.mean_size:.4f} over {args.trials} trials "
              f"({args.model}/{args.engine}, seed {args.seed})")
    return EXIT_OK


def _trace_payload(trace, id_map):
    return {
        "method": trace.method,
        "seed_set": [str(id_map.external(v)) for v in trace.seed_set],
        "marginal_gains": trace.marginal_gains,
        "evaluations_per_pick": trace.evaluations_per_pick,
        "sigma_estimate": trace.sigma_estimate,
        "estimator_trials": trace.estimator_trials,
    }


def cmd_influence(args):
    graph, id_map = _load_graph(args, args.seed)
    spec = ModelSpec(args.model, graph)
    cfg = EstimatorConfig(trials=args.trials, global_seed=args.seed)

    if args.method == "celf":
        trace = select_celf(spec, args.budget, cfg, parallel=args.parallel)
        chosen = trace.seed_set
    elif args.method == "greedy":
        trace = select_greedy(spec, args.budget, cfg, parallel=args.parallel)
        chosen = trace.seed_set
    elif args.method == "degree":
        trace = None
        chosen = select_degree(spec, args.budget)
    else:
        trace = None
        chosen = select_random(spec, args.budget, args.seed)

    batch = run_trials(spec, list(chosen), args.seed, args.trials,
                       parallel=args.parallel)
    payload = {
        "model": args.model,
        "method": args.method,
        "budget": args.budget,
        "trials": args.trials,
        "global_seed": args.seed,
        "weight_model": args.weights,
        "seed_set": [str(id_map.external(v)) for v in chosen],
        "sigma_estimate": batch.mean_size,
    }
    if trace is not None:
        payload["trace"] = _trace_payload(trace, id_map)

    series_by_label = {args.method: TimeSeries(batch.mean_cumulative(),
                                               args.trials)}
    if args.compare:
        comparison = {}
        for label, seed_set in (
            ("celf", chosen if args.method == "celf" else
             select_celf(spec, args.budget, cfg, parallel=args.parallel).seed_set),
            ("degree", select_degree(spec, args.budget)),
            ("random", select_random(spec, args.budget, args.seed)),
        ):
            b = run_trials(spec, list(seed_set), args.seed, args.trials,
                           parallel=args.parallel)
            series_by_label[label] = TimeSeries(b.mean_cumulative(), args.trials)
            comparison[label] = {
                "seed_set": [str(id_map.external(v)) for v in seed_set],
                "sigma_estimate": b.mean_size,
            }
        payload["comparison"] = comparison

    if args.seeds_out:
        with open(args.seeds_out, "w") as fh:
            for v in chosen:
                fh.write(f"{id_map.external(v)}\n")
    if args.export_timeseries:
        for label, series in series_by_label.items():
            path = args.export_timeseries
            if len(series_by_label) > 1:
                path = f"{path}.{label}.csv" if not path.endswith(".csv") \
                    else path[:-4] + f".{label}.csv"
            with open(path, "w") as fh:
                export_timeseries(series, fh)
    if args.plot:
        from . import plotting

        plotting.plot_comparison(series_by_label, args.plot)

    if not _emit(payload, "influence", args):
        ext = [str(id_map.external(v)) for v in chosen]
        print(f"{args.method} picked seeds {','.join(ext)} "
              f"with sigma_estimate {batch.mean_size:.4f}")
    return EXIT_OK


def cmd_benchmark(args):
    graph, id_map = _load_graph(args, args.seed)
    spec = ModelSpec(args.model, graph)
    seeds = _resolve_seeds(args, graph, id_map, spec_for_degree=spec,
                           global_seed=args.seed)
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    report = run_benchmark(spec, seeds, engines, args.trials, args.seed,
                           weight_model=args.weights, repeats=args.repeats)
    payload = report.to_payload()
    if args.plot:
        from . import plotting

        plotting.plot_benchmark(report, args.plot)
    if not _emit(payload, "benchmark", args):
        print(format_table(report))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="netdiffsim",
        description="Frontier-based IC/LT diffusion simulation, influence "
                    "maximization and benchmarking on CSR graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a synthetic graph edge list")
    p.add_argument("--kind", required=True, choices=sorted(_GEN_KINDS))
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--p", type=float, default=0.0, dest="gen_p")
    p.add_argument("--k", type=int, default=0, dest="gen_k")
    p.add_argument("--gen-seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("weights", help="assign edge weights and dump arcs")
    _add_graph_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("simulate", help="Monte-Carlo simulation and exports")
    _add_graph_args(p)
    _add_seed_args(p)
    p.add_argument("--model", default="ic", choices=["ic", "lt"])
    p.add_argument("--engine", default="frontier", choices=["frontier", "naive"])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0, help="global random seed")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--export-heatmap", help="write per-node activation CSV here")
    p.add_argument("--export-timeseries", help="write activation time-series CSV")
    p.add_argument("--plot", help="render figures with this path prefix")
    p.add_argument("--out", help="write JSON report here")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("influence", help="seed selection / influence maximization")
    _add_graph_args(p)
    p.add_argument("--model", default="ic", choices=["ic", "lt"])
    p.add_argument("--method", default="celf",
                   choices=["celf", "greedy", "degree", "random"])
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000,
                   help="Monte-Carlo trials per sigma evaluation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--compare", action="store_true",
                   help="also evaluate celf/degree/random for comparison")
    p.add_argument("--seeds-out", help="write chosen seed ids, one per line")
    p.add_argument("--export-timeseries", help="activation time-series CSV path")
    p.add_argument("--plot", help="render the comparison figure to this file")
    p.add_argument("--out", help="write JSON report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_influence)

    p = sub.add_parser("benchmark", help="time engines over repeated trials")
    _add_graph_args(p)
    _add_seed_args(p)
    p.add_argument("--model", default="ic", choices=["ic", "lt"])
    p.add_argument("--engines", default="frontier,naive")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--repeats", type=int, default=1,
                   help="repeat each timed batch, report the minimum wall time")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", help="render a throughput figure to this file")
    p.add_argument("--out", help="write JSON report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_benchmark)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ParameterError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (_IoFail, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NetdiffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
