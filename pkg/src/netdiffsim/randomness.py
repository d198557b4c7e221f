"""Deterministic, stateless randomness shared by every stochastic operation.

All randomness in the library is derived from a single counter-based scheme:
a 64-bit avalanche mix (SplitMix64 finalizer) over the triple
(global_seed, trial_index, entity_id).  Arc coins, node thresholds and edge
weights each live in a disjoint entity/trial namespace, so one global seed
fully determines a whole experiment while trials stay independent and
order-free.
"""

import numpy as np
from numba import njit

_MASK64 = (1 << 64) - 1

# Distinct namespaces so weight draws and thresholds never collide with arc coins.
GOLDEN = np.uint64(0x9E3779B97F4A7C15)
WEIGHT_TRIAL_TAG = np.uint64(0xA24BAED4963EE407)
THRESHOLD_TAG = np.uint64(0xD1B54A32D192ED03)

_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, inline="always")
def _mix64(x):
    x ^= x >> np.uint64(30)
    x *= np.uint64(0xBF58476D1CE4E5B9)
    x ^= x >> np.uint64(27)
    x *= np.uint64(0x94D049BB133111EB)
    x ^= x >> np.uint64(31)
    return x


@njit(cache=True, inline="always")
def _deviate_u64(global_seed, trial_index, entity_id):
    h = _mix64(global_seed + GOLDEN)
    h = _mix64(h ^ (trial_index * np.uint64(0xBF58476D1CE4E5B9)))
    h = _mix64(h ^ (entity_id * np.uint64(0x94D049BB133111EB)))
    return (h >> np.uint64(11)) * _INV_2_53


@njit(cache=True, nogil=True)
def _deviate_batch(global_seed, trial_index, entity_ids, out):
    for i in range(entity_ids.shape[0]):
        out[i] = _deviate_u64(global_seed, trial_index, entity_ids[i])


def deviate(global_seed: int, trial_index: int, entity_id: int) -> float:
    """Deterministic uniform deviate in [0, 1) keyed by the three inputs.

    Stateless: identical arguments always give the identical value.
    """
    return float(
        _deviate_u64(
            np.uint64(global_seed & _MASK64),
            np.uint64(trial_index & _MASK64),
            np.uint64(entity_id & _MASK64),
        )
    )


def deviate_array(global_seed: int, trial_index: int, entity_ids) -> np.ndarray:
    """Vectorized `deviate` over an array of entity ids."""
    ids = np.ascontiguousarray(entity_ids, dtype=np.uint64)
    out = np.empty(ids.shape[0], dtype=np.float64)
    _deviate_batch(
        np.uint64(global_seed & _MASK64), np.uint64(trial_index & _MASK64), ids, out
    )
    return out
