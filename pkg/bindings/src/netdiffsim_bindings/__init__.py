"""Handle-based convenience layer over the netdiffsim core.

The wrapper owns no simulation logic: it builds a validated CSR model from
in-memory edge data (or a networkx graph), hands back an opaque ModelHandle,
and delegates sigma/select/simulate straight to the core so results are
numerically identical to the CLI's. Handles are cheap and not meant to be
shared across threads; open one handle per thread over the same graph
instead (the underlying CSR arrays are immutable and shared).
"""

from __future__ import annotations

from netdiffsim import (
    EdgeList,
    EstimatorConfig,
    ModelSpec,
    TrialPlan,
    ValidationError,
    assign_weights_tv,
    assign_weights_ur,
    assign_weights_wc,
    build_csr,
    estimate_sigma,
    normalize_incoming,
    select_celf,
    select_degree,
    select_greedy,
    select_random,
)
from netdiffsim import simulate as _core_simulate

__all__ = [
    "ModelHandle",
    "ReleasedHandleError",
    "from_edges",
    "from_networkx",
    "sigma",
    "select",
    "simulate",
]

WEIGHT_MODELS = ("file", "tv", "ur", "wc")

_METHODS = {
    "celf": lambda spec, k, cfg: list(select_celf(spec, k, cfg).seed_set),
    "greedy": lambda spec, k, cfg: list(select_greedy(spec, k, cfg).seed_set),
    "degree": lambda spec, k, cfg: list(select_degree(spec, k)),
    "random": lambda spec, k, cfg: list(select_random(spec, k, cfg.global_seed)),
}


class ReleasedHandleError(ValidationError):
    """Raised when an operation touches a handle after release()."""


class ModelHandle:
    """Opaque reference to a core ModelSpec (model + immutable CSR graph).

    Valid until release(); afterwards every operation raises
    ReleasedHandleError. When built from a networkx graph the original node
    labels are retained and translated at the boundary.
    """

    def __init__(self, spec: ModelSpec, labels=None):
        self._spec = spec
        self._labels = list(labels) if labels is not None else None
        self._index = (
            {lab: i for i, lab in enumerate(self._labels)}
            if self._labels is not None
            else None
        )

    @property
    def spec(self) -> ModelSpec:
        if self._spec is None:
            raise ReleasedHandleError("handle has been released")
        return self._spec

    @property
    def released(self) -> bool:
        return self._spec is None

    def release(self):
        """Drop the graph reference; idempotent."""
        self._spec = None
        self._labels = None
        self._index = None

    @property
    def node_count(self) -> int:
        return self.spec.graph.node_count

    @property
    def arc_count(self) -> int:
        return self.spec.graph.arc_count

    def memory_bytes(self) -> int:
        """Bytes held by the underlying CSR arrays (Theta(n + m) words)."""
        return self.spec.graph.memory_bytes()

    def to_internal(self, seeds):
        if self._index is None:
            return list(seeds)
        try:
            return [self._index[s] for s in seeds]
        except KeyError as exc:
            raise ValidationError(f"unknown node label {exc.args[0]!r}") from None

    def to_labels(self, internal_ids):
        if self._labels is None:
            return [int(v) for v in internal_ids]
        return [self._labels[int(v)] for v in internal_ids]


def _weighted_graph(edges: EdgeList, weights: str, weight_seed: int,
                    normalize: bool):
    if weights not in WEIGHT_MODELS:
        raise ValidationError(
            f"unknown weight model {weights!r}; expected one of {WEIGHT_MODELS}"
        )
    graph, _ = build_csr(edges)
    if weights == "tv":
        graph = assign_weights_tv(graph, weight_seed)
    elif weights == "ur":
        graph = assign_weights_ur(graph, weight_seed)
    elif weights == "wc":
        graph = assign_weights_wc(graph)
    if normalize:
        graph = normalize_incoming(graph)
    return graph


def from_edges(
    edges,
    directed: bool = False,
    weights: str = "file",
    weight_seed: int = 0,
    model: str = "ic",
    normalize: bool = False,
) -> ModelHandle:
    """Build a ModelHandle from an iterable of (u, v) or (u, v, w) tuples.

    Node ids must be dense non-negative integers. With weights="file" the
    third tuple element (default 1.0) is used directly; tv/ur/wc replace it
    with the corresponding weight model, tv/ur keyed by weight_seed.
    """
    triples = []
    for e in edges:
        if len(e) == 2:
            triples.append((e[0], e[1], None))
        elif len(e) == 3:
            triples.append((e[0], e[1], e[2]))
        else:
            raise ValidationError(f"edge {e!r} is not (u, v) or (u, v, w)")
    graph = _weighted_graph(EdgeList(directed=directed, edges=triples),
                            weights, weight_seed, normalize)
    return ModelHandle(ModelSpec(model, graph))


def from_networkx(
    g,
    weights: str = "file",
    weight_seed: int = 0,
    model: str = "ic",
    normalize: bool = False,
    weight_attr: str = "weight",
) -> ModelHandle:
    """Build a ModelHandle from a networkx (Di)Graph.

    Node labels may be arbitrary hashables; they are densified in g.nodes()
    order and translated back at the API boundary, so sigma/select/simulate
    accept and return the original labels.
    """
    labels = list(g.nodes())
    index = {lab: i for i, lab in enumerate(labels)}
    # tv/ur/wc overwrite weights anyway; only "file" reads the attribute,
    # so unrelated weight annotations never trip the [0, 1] validation
    use_attr = weights == "file"
    triples = [
        (index[u], index[v], data.get(weight_attr) if use_attr else None)
        for u, v, data in g.edges(data=True)
    ]
    graph = _weighted_graph(
        EdgeList(directed=g.is_directed(), edges=triples,
                 node_count=len(labels)),
        weights, weight_seed, normalize,
    )
    return ModelHandle(ModelSpec(model, graph), labels=labels)


def sigma(handle: ModelHandle, seeds, trials: int, seed: int) -> float:
    """Monte-Carlo influence estimate; delegates to the core estimator."""
    return estimate_sigma(
        handle.spec, handle.to_internal(seeds), EstimatorConfig(trials, seed)
    )


def select(handle: ModelHandle, method: str, k: int, trials: int,
           seed: int) -> list:
    """Pick k seeds with celf/greedy/degree/random; returns node labels."""
    try:
        run = _METHODS[method]
    except KeyError:
        raise ValidationError(
            f"unknown method {method!r}; expected one of {sorted(_METHODS)}"
        ) from None
    chosen = run(handle.spec, k, EstimatorConfig(trials, seed))
    return handle.to_labels(chosen)


def simulate(handle: ModelHandle, seeds, seed: int, trial: int = 0,
             engine: str = "frontier"):
    """Run one trial; returns the core SimulationResult (internal node ids;
    use handle.to_labels on result.activated for labeled graphs)."""
    return _core_simulate(
        handle.spec, handle.to_internal(seeds), TrialPlan(seed, trial), engine
    )
