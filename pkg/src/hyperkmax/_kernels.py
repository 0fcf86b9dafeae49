"""Vectorised bit-mask kernels shared by the connectivity routines.

All vertex sets and edges are ``uint64`` masks, so these kernels cover
hypergraphs with at most :data:`MAX_N` vertices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

MAX_N = 62

# bound on batch_size * n_edges per propagation step, keeps memory near 64 MB
_CHUNK_CELLS = 1 << 23


def check_n(n: int) -> None:
    if n > MAX_N:
        raise ValueError(f"connectivity kernels support at most {MAX_N} vertices, got {n}")


def edge_array(masks) -> np.ndarray:
    return np.fromiter(masks, dtype=np.uint64, count=len(masks))


def popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def reach_batch(edges: np.ndarray, within: np.ndarray, start: np.ndarray) -> np.ndarray:
    """Vertices reachable from ``start`` using only edges contained in ``within``.

    ``within`` and ``start`` are equal-length mask arrays; ``start`` should be a
    subset of ``within``.
    """
    within = np.asarray(within, dtype=np.uint64)
    start = np.asarray(start, dtype=np.uint64)
    out = np.empty_like(within)
    if len(edges) == 0 or len(within) == 0:
        out[:] = start
        return out
    step = max(1, _CHUNK_CELLS // len(edges))
    for lo in range(0, len(within), step):
        w = within[lo : lo + step]
        inside = (w[:, None] & edges[None, :]) == edges[None, :]
        live = np.where(inside, edges[None, :], np.uint64(0))
        reach = start[lo : lo + step].copy()
        while True:
            touched = (live & reach[:, None]) != 0
            grown = reach | np.bitwise_or.reduce(np.where(touched, live, np.uint64(0)), axis=1)
            if np.array_equal(grown, reach):
                break
            reach = grown
        out[lo : lo + step] = reach
    return out


def connected_batch(edges: np.ndarray, within: np.ndarray) -> np.ndarray:
    """Whether each induced sub-hypergraph is connected (0 or 1 vertex counts as connected)."""
    within = np.asarray(within, dtype=np.uint64)
    low = within & (~within + np.uint64(1))
    return reach_batch(edges, within, low) == within


@lru_cache(maxsize=4096)
def _combo_masks(n: int, s: int) -> np.ndarray:
    """Masks of all s-subsets of ``range(n)`` in lexicographic order of label tuples."""
    arr = np.fromiter(
        (sum(1 << v for v in c) for c in combinations(range(n), s)),
        dtype=np.uint64,
    )
    arr.flags.writeable = False
    return arr


def subset_masks(pool: int, s: int) -> np.ndarray:
    """All s-subsets of the vertex set ``pool`` in lexicographic label order."""
    labels = [i for i in range(pool.bit_length()) if pool >> i & 1]
    local = _combo_masks(len(labels), s)
    if len(local) == 0:
        return local
    out = np.zeros(len(local), dtype=np.uint64)
    for i, v in enumerate(labels):
        bit = (local >> np.uint64(i)) & np.uint64(1)
        out |= bit << np.uint64(v)
    return out
