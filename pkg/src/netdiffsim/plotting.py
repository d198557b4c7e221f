"""Matplotlib rendering of exported data, used by the CLI report path.

All figures are written straight to files; the CSV/JSON exports remain the
canonical outputs and these plots are generated from the same data.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_timeseries(series, path, label=None):
    """Mean cumulative activated nodes per iteration."""
    fig, ax = plt.subplots(figsize=(6, 4))
    y = series.mean_cumulative
    ax.plot(np.arange(y.size), y, marker="o", markersize=3, label=label)
    ax.set_xlabel("Iteration")
    ax.set_ylabel("Mean number of nodes activated")
    ax.grid(alpha=0.4)
    if label:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_comparison(series_by_label, path):
    """Overlay several activation time series (e.g. CELF vs baselines)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, series in series_by_label.items():
        y = series.mean_cumulative
        ax.plot(np.arange(y.size), y, marker="o", markersize=3, label=label)
    ax.set_xlabel("Iteration")
    ax.set_ylabel("Mean number of nodes activated")
    ax.grid(alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_heatmap(data, path):
    """Activation frequency per node, sorted descending (layout-free view)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    freq = np.sort(data.frequencies)[::-1]
    ax.bar(np.arange(freq.size), freq, width=1.0, color=plt.cm.Reds(freq))
    ax.set_xlabel("Node (sorted by activation frequency)")
    ax.set_ylabel("Activation frequency")
    ax.set_ylim(0, 1.02)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_benchmark(report, path):
    """Simulations per second by engine."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    names = [e.engine for e in report.engines]
    rates = [e.simulations_per_second for e in report.engines]
    ax.bar(names, rates)
    ax.set_ylabel("simulations / second")
    ax.set_title(
        f"{report.model.upper()} on n={report.node_count}, m={report.arc_count}, "
        f"{report.weight_model.upper()} weights"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
