import numpy as np
import pytest

from netdiffsim import EdgeList, build_csr


def path_graph(p=0.5, length=3):
    """Directed path 0 -> 1 -> ... with uniform arc probability p."""
    edges = [(i, i + 1, p) for i in range(length - 1)]
    graph, _ = build_csr(EdgeList(directed=True, edges=edges))
    return graph


def star_graph(leaves=5, weight=1.0):
    """Center 0 pointing at `leaves` leaf nodes."""
    edges = [(0, i, weight) for i in range(1, leaves + 1)]
    graph, _ = build_csr(EdgeList(directed=True, edges=edges))
    return graph


def reverse_star_graph(leaves=4, weight=None):
    """Leaves 1..k all pointing at center 0."""
    edges = [(i, 0, weight) for i in range(1, leaves + 1)]
    graph, _ = build_csr(EdgeList(directed=True, edges=edges))
    return graph


def random_edge_list(rng, n, arcs):
    """Directed EdgeList of `arcs` attempts over n nodes (loops/dups allowed)."""
    out = []
    for _ in range(arcs):
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        out.append((u, v, float(rng.random())))
    return EdgeList(directed=True, edges=out)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
