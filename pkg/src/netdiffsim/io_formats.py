"""File formats: SNAP-style edge lists, CSV exports, JSON reports.

Graphics are intentionally not produced here; the CSV/JSON emitted by this
module is the canonical interchange, and figure rendering lives in the
plotting module used by the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError, ValidationError
from .graph import CsrGraph, EdgeList

SCHEMA_PREFIX = "netdiffsim"
SCHEMA_VERSION = "1"


class IdMap:
    """Insertion-ordered bijection between external tokens and dense ids."""

    def __init__(self):
        self._to_internal: dict = {}
        self._to_external: list = []

    def intern(self, token) -> int:
        got = self._to_internal.get(token)
        if got is None:
            got = len(self._to_external)
            self._to_internal[token] = got
            self._to_external.append(token)
        return got

    def internal(self, token) -> int:
        try:
            return self._to_internal[token]
        except KeyError:
            raise ValidationError(f"unknown node id {token!r}") from None

    def external(self, internal_id: int):
        return self._to_external[internal_id]

    def __len__(self):
        return len(self._to_external)

    @classmethod
    def identity(cls, n: int) -> "IdMap":
        m = cls()
        for v in range(n):
            m.intern(str(v))
        return m


def read_edge_list(stream, directed: bool, weighted: bool = False):
    """Parse whitespace-separated `u v [w]` lines; `#` starts a comment.

    Tokens may be arbitrary strings; they are remapped densely in first-seen
    order. Returns (EdgeList, IdMap).
    """
    id_map = IdMap()
    edges = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if weighted:
            if len(parts) != 3:
                raise FormatError(f"expected 'u v w', got {line!r}", line_no)
        elif len(parts) not in (2, 3):
            raise FormatError(f"expected 'u v [w]', got {line!r}", line_no)
        u = id_map.intern(parts[0])
        v = id_map.intern(parts[1])
        w = None
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise FormatError(f"bad weight {parts[2]!r}", line_no) from None
            if weighted and not (0.0 <= w <= 1.0):
                raise FormatError(f"weight {w} outside [0, 1]", line_no)
            if not weighted:
                w = None  # unweighted mode ignores a trailing column
        edges.append((u, v, w))
    return EdgeList(directed=directed, edges=edges), id_map


def dump_edge_list(graph: CsrGraph, stream, id_map: IdMap | None = None,
                   weighted: bool = True):
    """Write every arc as `u v w` (directed dump) in CSR order."""
    for u, v, w in graph.arc_dump():
        if id_map is not None:
            u, v = id_map.external(u), id_map.external(v)
        if weighted:
            stream.write(f"{u} {v} {w!r}\n")
        else:
            stream.write(f"{u} {v}\n")


def dump_edges(edges: EdgeList, stream, id_map: IdMap | None = None):
    """Write an EdgeList as `u v [w]` lines."""
    for u, v, w in edges.edges:
        if id_map is not None:
            u, v = id_map.external(u), id_map.external(v)
        if w is None:
            stream.write(f"{u} {v}\n")
        else:
            stream.write(f"{u} {v} {w!r}\n")


@dataclass
class HeatmapData:
    """Per-node activation counts over a batch of T trials."""

    counts: np.ndarray
    trials: int
    seeds: list

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.size and (counts.min() < 0 or counts.max() > self.trials):
            raise ValidationError("activation count outside [0, trials]")
        for s in self.seeds:
            if counts[s] != self.trials:
                raise ValidationError(
                    f"seed {s} not active in every trial ({counts[s]}/{self.trials})"
                )
        self.counts = counts

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.trials


@dataclass
class TimeSeries:
    """Mean cumulative activated count per iteration over T trials.

    Trials that stop early are padded by carrying their final value forward.
    """

    mean_cumulative: np.ndarray
    trials: int

    def __post_init__(self):
        arr = np.asarray(self.mean_cumulative, dtype=np.float64)
        if arr.size == 0:
            raise ValidationError("time series must have at least one entry")
        if np.any(np.diff(arr) < -1e-12):
            raise ValidationError("cumulative series must be non-decreasing")
        self.mean_cumulative = arr


def heatmap_from_results(results, node_count: int, seeds) -> HeatmapData:
    """Aggregate per-node activation counts from SimulationResult objects."""
    counts = np.zeros(node_count, np.int64)
    for r in results:
        counts[r.activated] += 1
    return HeatmapData(counts, len(results), list(seeds))


def timeseries_from_results(results) -> TimeSeries:
    """Mean cumulative activation per iteration, final values carried forward."""
    if not results:
        raise ValidationError("empty result batch")
    longest = max(len(r.newly_active_per_iter) for r in results)
    total = np.zeros(longest, np.float64)
    for r in results:
        cum = np.cumsum(r.newly_active_per_iter)
        total[: cum.size] += cum
        total[cum.size:] += cum[-1]
    return TimeSeries(total / len(results), len(results))


def export_heatmap(data: HeatmapData, stream, id_map: IdMap | None = None):
    """CSV rows `external_id,activation_count,frequency`."""
    stream.write("external_id,activation_count,frequency\n")
    for v in range(data.counts.shape[0]):
        ext = id_map.external(v) if id_map is not None else v
        freq = float(data.counts[v]) / data.trials
        stream.write(f"{ext},{int(data.counts[v])},{freq!r}\n")


def export_timeseries(series: TimeSeries, stream):
    """CSV rows `iteration,mean_cumulative_activated`."""
    stream.write("iteration,mean_cumulative_activated\n")
    for i, x in enumerate(series.mean_cumulative):
        stream.write(f"{i},{float(x)!r}\n")


def _schema(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/{SCHEMA_VERSION}"


def write_report(payload: dict, kind: str, stream):
    """Emit a versioned JSON report; `payload` must be JSON-serializable."""
    doc = {"schema": _schema(kind)}
    doc.update(payload)
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")


def read_report(stream) -> dict:
    doc = json.load(stream)
    schema = doc.get("schema", "")
    if not schema.startswith(SCHEMA_PREFIX + "/"):
        raise FormatError(f"not a {SCHEMA_PREFIX} report (schema={schema!r})")
    return doc
