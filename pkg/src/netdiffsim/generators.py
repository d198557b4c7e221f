"""Synthetic benchmark graphs: Erdos-Renyi, Watts-Strogatz, random regular.

Backed by networkx generators (fast G(n,p) uses geometric skipping; the
regular generator uses the pairing model with restarts), wrapped behind a
validated spec so every instance is reproducible from (kind, params, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import ParameterError
from .graph import EdgeList

KINDS = ("erdos_renyi", "watts_strogatz", "random_regular")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    p: float = 0.0  # ER edge probability / WS rewiring probability
    k: int = 0  # WS ring neighbors / regular degree
    seed: int = 0

    def validate(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown generator kind {self.kind!r}")
        if self.n < 1:
            raise ParameterError("n must be >= 1")
        if not (0.0 <= self.p <= 1.0):
            raise ParameterError("p must be in [0, 1]")
        if self.kind == "watts_strogatz":
            if self.k % 2 != 0 or not (0 < self.k < self.n):
                raise ParameterError("WS requires even k with 0 < k < n")
        if self.kind == "random_regular":
            if not (0 <= self.k < self.n):
                raise ParameterError("regular degree must satisfy k < n")
            if (self.n * self.k) % 2 != 0:
                raise ParameterError("regular graph needs n*k even")


def generate(spec: GenSpec) -> EdgeList:
    """Generate the undirected edge list for a spec; deterministic per seed."""
    spec.validate()
    if spec.kind == "erdos_renyi":
        g = nx.fast_gnp_random_graph(spec.n, spec.p, seed=spec.seed)
    elif spec.kind == "watts_strogatz":
        g = nx.watts_strogatz_graph(spec.n, spec.k, spec.p, seed=spec.seed)
    else:
        g = nx.random_regular_graph(spec.k, spec.n, seed=spec.seed)
    edges = [(int(u), int(v), None) for u, v in sorted(g.edges())]
    return EdgeList(directed=False, edges=edges, node_count=spec.n)
