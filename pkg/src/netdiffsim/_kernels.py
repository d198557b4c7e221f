"""Jitted simulation kernels for both diffusion models and both engines.

Every kernel returns the same tuple:

    (activated_at, newly, iterations, work)

where activated_at[v] is the step at which v first became active (-1 if
never), newly[t] counts nodes first activated at step t (entry 0 = seeds),
iterations is the number of executed steps until the process quiesced, and
work counts the units examined (arcs for the frontier engine; the naive
engine additionally pays one unit per node per step for its full scan).

Arc coins and thresholds are keyed by (global_seed, trial, entity) through
the stateless deviate, so outcomes are independent of within-step processing
order and the two engines agree exactly.
"""

import numpy as np
from numba import njit

from .randomness import THRESHOLD_TAG, _deviate_u64

ENGINE_FRONTIER = 0
ENGINE_NAIVE = 1
MODEL_IC = 0
MODEL_LT = 1


@njit(cache=True, nogil=True)
def thresholds_for_trial(n, global_seed, trial):
    theta = np.empty(n, np.float64)
    for v in range(n):
        theta[v] = _deviate_u64(global_seed, trial, THRESHOLD_TAG ^ np.uint64(v))
    return theta


@njit(cache=True, nogil=True)
def ic_frontier(offsets, targets, weights, seeds, global_seed, trial):
    # IC outcomes are per-arc-coin keyed, hence independent of within-step
    # processing order; the frontier is left unsorted for speed.
    n = offsets.shape[0] - 1
    activated_at = np.full(n, -1, np.int64)
    newly = np.zeros(n + 1, np.int64)
    cur = np.empty(n, np.int64)
    nxt = np.empty(n, np.int64)
    nc = seeds.shape[0]
    for i in range(nc):
        cur[i] = seeds[i]
        activated_at[seeds[i]] = 0
    newly[0] = nc
    work = 0
    t = 0
    while nc > 0:
        t += 1
        nn = 0
        if nc * 8 >= n:
            # Dense step: walking node ids in order keeps the CSR arrays
            # streaming; the frontier list would visit them in random order.
            for u in range(n):
                if activated_at[u] != t - 1:
                    continue
                for slot in range(offsets[u], offsets[u + 1]):
                    work += 1
                    w = targets[slot]
                    if activated_at[w] == -1 and (
                        _deviate_u64(global_seed, trial, np.uint64(slot))
                        < weights[slot]
                    ):
                        activated_at[w] = t
                        nxt[nn] = w
                        nn += 1
        else:
            for i in range(nc):
                u = cur[i]
                for slot in range(offsets[u], offsets[u + 1]):
                    work += 1
                    w = targets[slot]
                    if activated_at[w] == -1 and (
                        _deviate_u64(global_seed, trial, np.uint64(slot))
                        < weights[slot]
                    ):
                        activated_at[w] = t
                        nxt[nn] = w
                        nn += 1
        if nn > 0:
            newly[t] = nn
        cur, nxt = nxt, cur
        nc = nn
    return activated_at, newly, t, work


@njit(cache=True, nogil=True)
def ic_naive(offsets, targets, weights, seeds, global_seed, trial):
    # Full per-node scan each step, in the style of per-node-loop simulators.
    n = offsets.shape[0] - 1
    activated_at = np.full(n, -1, np.int64)
    newly = np.zeros(n + 1, np.int64)
    for s in seeds:
        activated_at[s] = 0
    newly[0] = seeds.shape[0]
    work = 0
    t = 0
    prev = seeds.shape[0]
    while prev > 0:
        t += 1
        nn = 0
        work += n
        for u in range(n):
            if activated_at[u] == t - 1:
                for slot in range(offsets[u], offsets[u + 1]):
                    work += 1
                    w = targets[slot]
                    if activated_at[w] == -1 and (
                        _deviate_u64(global_seed, trial, np.uint64(slot))
                        < weights[slot]
                    ):
                        activated_at[w] = t
                        nn += 1
        if nn > 0:
            newly[t] = nn
        prev = nn
    return activated_at, newly, t, work


@njit(cache=True, nogil=True)
def lt_frontier(offsets, targets, weights, seeds, theta):
    n = offsets.shape[0] - 1
    activated_at = np.full(n, -1, np.int64)
    newly = np.zeros(n + 1, np.int64)
    acc = np.zeros(n, np.float64)
    frontier = np.sort(seeds)
    for s in frontier:
        activated_at[s] = 0
    newly[0] = frontier.shape[0]
    nxt = np.empty(n, np.int64)
    work = 0
    t = 0
    while frontier.shape[0] > 0:
        t += 1
        nn = 0
        for i in range(frontier.shape[0]):
            u = frontier[i]
            for slot in range(offsets[u], offsets[u + 1]):
                work += 1
                w = targets[slot]
                acc[w] += weights[slot]
                if activated_at[w] == -1 and acc[w] >= theta[w]:
                    activated_at[w] = t
                    nxt[nn] = w
                    nn += 1
        if nn > 0:
            newly[t] = nn
        frontier = np.sort(nxt[:nn])
    return activated_at, newly, t, work


@njit(cache=True, nogil=True)
def lt_naive(offsets, targets, weights, seeds, theta):
    # Same accumulation order as the frontier engine (ascending node id per
    # step), so floating-point sums match bit for bit; the cost model is the
    # full scan of all nodes in every step.
    n = offsets.shape[0] - 1
    activated_at = np.full(n, -1, np.int64)
    newly = np.zeros(n + 1, np.int64)
    acc = np.zeros(n, np.float64)
    for s in seeds:
        activated_at[s] = 0
    newly[0] = seeds.shape[0]
    work = 0
    t = 0
    prev = seeds.shape[0]
    while prev > 0:
        t += 1
        nn = 0
        work += n
        for u in range(n):
            if activated_at[u] == t - 1:
                for slot in range(offsets[u], offsets[u + 1]):
                    work += 1
                    w = targets[slot]
                    acc[w] += weights[slot]
                    if activated_at[w] == -1 and acc[w] >= theta[w]:
                        activated_at[w] = t
                        nn += 1
        if nn > 0:
            newly[t] = nn
        prev = nn
    return activated_at, newly, t, work


@njit(cache=True, nogil=True)
def run_batch(
    offsets,
    targets,
    weights,
    seeds,
    global_seed,
    trial_lo,
    trial_hi,
    model,
    engine,
    node_counts,
    newly_sum,
):
    """Run trials [trial_lo, trial_hi) and accumulate batch statistics.

    node_counts (length n) and newly_sum (length n+1) are accumulated in
    place; returns per-trial (sizes, iterations, work) arrays.
    """
    n = offsets.shape[0] - 1
    count = trial_hi - trial_lo
    sizes = np.empty(count, np.int64)
    iters = np.empty(count, np.int64)
    works = np.empty(count, np.int64)
    for k in range(count):
        trial = np.uint64(trial_lo + k)
        if model == MODEL_IC:
            if engine == ENGINE_FRONTIER:
                activated_at, newly, t, work = ic_frontier(
                    offsets, targets, weights, seeds, global_seed, trial
                )
            else:
                activated_at, newly, t, work = ic_naive(
                    offsets, targets, weights, seeds, global_seed, trial
                )
        else:
            theta = thresholds_for_trial(n, global_seed, trial)
            if engine == ENGINE_FRONTIER:
                activated_at, newly, t, work = lt_frontier(
                    offsets, targets, weights, seeds, theta
                )
            else:
                activated_at, newly, t, work = lt_naive(
                    offsets, targets, weights, seeds, theta
                )
        size = 0
        for v in range(n):
            if activated_at[v] >= 0:
                size += 1
                node_counts[v] += 1
        for i in range(t + 1):
            newly_sum[i] += newly[i]
        sizes[k] = size
        iters[k] = t
        works[k] = work
    return sizes, iters, works
