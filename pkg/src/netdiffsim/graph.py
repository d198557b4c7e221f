"""Immutable CSR graph storage and edge-weight assignment models.

The graph is stored in compressed sparse row form: an offsets array of length
n+1 plus contiguous target/weight arrays of length m, so the out-neighbors of
every node sit in one memory block and repeated traversals stay cache-friendly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .randomness import WEIGHT_TRIAL_TAG, deviate_array

TRIVALENCY_CONSTANTS = (0.1, 0.01, 0.001)


@dataclass
class EdgeList:
    """Plain directed/undirected edge triples awaiting CSR construction.

    Each edge is (source, target, weight_or_None); node ids are non-negative
    integers. Sparse or string ids must be remapped first (see io_formats).
    """

    directed: bool
    edges: list = field(default_factory=list)
    node_count: int | None = None  # explicit n, for graphs with isolated nodes

    def validate(self):
        for i, (u, v, w) in enumerate(self.edges):
            if u < 0 or v < 0:
                raise ValidationError(f"edge {i}: negative node id ({u}, {v})")
            if w is not None and not (0.0 <= w <= 1.0):
                raise ValidationError(
                    f"edge {i}: weight {w!r} outside [0, 1] on arc ({u}, {v})"
                )


@dataclass(frozen=True)
class CsrGraph:
    """Immutable weighted directed graph in CSR form.

    offsets[v]..offsets[v+1] delimits node v's out-arc slots in `targets` and
    `weights`. Within each slice targets are strictly increasing; there are no
    self-loops or duplicate arcs. Safe to share across concurrent trials.
    """

    node_count: int
    offsets: np.ndarray  # int64, length n+1
    targets: np.ndarray  # int64, length m
    weights: np.ndarray  # float64, length m
    in_degree: np.ndarray  # int64, length n

    @property
    def arc_count(self) -> int:
        return int(self.targets.shape[0])

    def out_degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def out_slice(self, v):
        """(targets, weights, slots) of node v's out-arcs."""
        lo, hi = int(self.offsets[v]), int(self.offsets[v + 1])
        return self.targets[lo:hi], self.weights[lo:hi], np.arange(lo, hi)

    def arc_slot(self, u: int, v: int) -> int:
        """Slot index of arc (u, v); raises if absent. O(log out_degree(u))."""
        lo, hi = int(self.offsets[u]), int(self.offsets[u + 1])
        pos = lo + int(np.searchsorted(self.targets[lo:hi], v))
        if pos >= hi or self.targets[pos] != v:
            raise KeyError(f"no arc ({u}, {v})")
        return pos

    def arc_dump(self) -> list:
        """All arcs as (source, target, weight) triples in CSR order."""
        out = []
        for v in range(self.node_count):
            for slot in range(int(self.offsets[v]), int(self.offsets[v + 1])):
                out.append((v, int(self.targets[slot]), float(self.weights[slot])))
        return out

    def incoming_weight_sums(self) -> np.ndarray:
        """Per-node sum of incoming arc weights (LT constraint check)."""
        return np.bincount(
            self.targets, weights=self.weights, minlength=self.node_count
        )

    def memory_bytes(self) -> int:
        """Bytes held by the CSR arrays; Theta(n + m) words, no indirection."""
        return (
            self.offsets.nbytes
            + self.targets.nbytes
            + self.weights.nbytes
            + self.in_degree.nbytes
        )

    def with_weights(self, weights: np.ndarray) -> "CsrGraph":
        if weights.shape != self.weights.shape:
            raise ValidationError("replacement weight array has wrong length")
        if weights.size and (weights.min() < 0.0 or weights.max() > 1.0):
            bad = int(np.flatnonzero((weights < 0.0) | (weights > 1.0))[0])
            raise ValidationError(f"weight outside [0, 1] at arc slot {bad}")
        w = np.ascontiguousarray(weights, dtype=np.float64)
        w.setflags(write=False)
        return CsrGraph(self.node_count, self.offsets, self.targets, w, self.in_degree)

    def validate(self):
        n, m = self.node_count, self.arc_count
        if self.offsets.shape[0] != n + 1 or self.offsets[0] != 0:
            raise ValidationError("offsets must have length n+1 and start at 0")
        if self.offsets[-1] != m:
            raise ValidationError("offsets[n] must equal arc count")
        if np.any(np.diff(self.offsets) < 0):
            raise ValidationError("offsets must be non-decreasing")
        if m:
            if self.targets.min() < 0 or self.targets.max() >= n:
                raise ValidationError("arc target outside [0, n)")
            if self.weights.min() < 0.0 or self.weights.max() > 1.0:
                bad = int(
                    np.flatnonzero((self.weights < 0.0) | (self.weights > 1.0))[0]
                )
                raise ValidationError(f"weight outside [0, 1] at arc slot {bad}")
        for v in range(n):
            lo, hi = int(self.offsets[v]), int(self.offsets[v + 1])
            tgt = self.targets[lo:hi]
            if np.any(tgt == v):
                raise ValidationError(f"self-loop at node {v}")
            if tgt.size > 1 and np.any(np.diff(tgt) <= 0):
                raise ValidationError(f"targets of node {v} not strictly increasing")
        expect_in = np.bincount(self.targets, minlength=n).astype(np.int64)
        if not np.array_equal(expect_in, self.in_degree):
            raise ValidationError("in_degree array inconsistent with targets")


@dataclass(frozen=True)
class BuildStats:
    self_loops_dropped: int
    duplicates_merged: int


def build_csr(edges: EdgeList, node_count: int | None = None):
    """Build a validated CsrGraph from an EdgeList.

    Undirected edges become two directed arcs. Self-loops are dropped and
    duplicate arcs merged keeping the first occurrence (SNAP dumps contain
    repeats; summing weights would corrupt probabilities). Returns
    (graph, BuildStats).
    """
    edges.validate()
    triples = edges.edges
    if triples:
        src = np.fromiter((e[0] for e in triples), dtype=np.int64, count=len(triples))
        dst = np.fromiter((e[1] for e in triples), dtype=np.int64, count=len(triples))
        wgt = np.fromiter(
            ((1.0 if e[2] is None else e[2]) for e in triples),
            dtype=np.float64,
            count=len(triples),
        )
    else:
        src = np.empty(0, np.int64)
        dst = np.empty(0, np.int64)
        wgt = np.empty(0, np.float64)

    if not edges.directed and src.size:
        src, dst = np.concatenate([src, dst]), np.concatenate([dst, src])
        wgt = np.concatenate([wgt, wgt])

    loops = src == dst
    n_loops = int(loops.sum())
    if n_loops:
        keep = ~loops
        src, dst, wgt = src[keep], dst[keep], wgt[keep]

    max_id = int(max(src.max(initial=-1), dst.max(initial=-1)))
    if node_count is None:
        node_count = edges.node_count
    n = max_id + 1 if node_count is None else node_count
    if node_count is not None and max_id >= node_count:
        raise ValidationError(
            f"node id {max_id} exceeds declared node_count {node_count}"
        )

    # Stable sort by (src, dst, input position); first of each (src, dst) wins.
    order = np.lexsort((np.arange(src.size), dst, src))
    src, dst, wgt = src[order], dst[order], wgt[order]
    if src.size:
        fresh = np.empty(src.size, dtype=bool)
        fresh[0] = True
        fresh[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
        n_dups = int(src.size - fresh.sum())
        src, dst, wgt = src[fresh], dst[fresh], wgt[fresh]
    else:
        n_dups = 0

    offsets = np.zeros(n + 1, dtype=np.int64)
    np.add.at(offsets, src + 1, 1)
    np.cumsum(offsets, out=offsets)
    in_degree = np.bincount(dst, minlength=n).astype(np.int64)

    for a in (offsets, dst, wgt, in_degree):
        a.setflags(write=False)
    graph = CsrGraph(n, offsets, dst, wgt, in_degree)
    graph.validate()
    return graph, BuildStats(n_loops, n_dups)


def assign_weights_tv(graph: CsrGraph, seed: int) -> CsrGraph:
    """Trivalency model: each arc weight drawn uniformly from {0.1, 0.01, 0.001}."""
    u = deviate_array(seed, int(WEIGHT_TRIAL_TAG), np.arange(graph.arc_count))
    idx = np.minimum((u * 3).astype(np.int64), 2)
    return graph.with_weights(np.asarray(TRIVALENCY_CONSTANTS)[idx])


def assign_weights_ur(graph: CsrGraph, seed: int) -> CsrGraph:
    """Uniformly-random model: each arc weight uniform on [0, 1)."""
    u = deviate_array(seed, int(WEIGHT_TRIAL_TAG), np.arange(graph.arc_count))
    return graph.with_weights(u)


def assign_weights_wc(graph: CsrGraph) -> CsrGraph:
    """Weighted cascade: every arc entering v gets weight 1/in_degree(v)."""
    safe = np.maximum(graph.in_degree, 1).astype(np.float64)
    return graph.with_weights(1.0 / safe[graph.targets])


def normalize_incoming(graph: CsrGraph) -> CsrGraph:
    """Rescale each node's incoming weights so their sum is at most 1.

    Preprocessing step for running LT on weightings (TV/UR) that do not
    already satisfy the incoming-sum constraint. Nodes whose sum is <= 1 are
    left untouched.
    """
    sums = graph.incoming_weight_sums()
    scale = np.ones(graph.node_count)
    over = sums > 1.0
    scale[over] = 1.0 / sums[over]
    return graph.with_weights(graph.weights * scale[graph.targets])
