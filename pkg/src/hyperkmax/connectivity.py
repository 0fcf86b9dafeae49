"""Exact vertex connectivity under induced-subhypergraph deletion.

Deleting a vertex set X removes every edge that meets X. Because an edge
can die without any of its surviving vertices being separated by a flow
argument, the usual incidence-graph max-flow reduction does not apply for
r >= 3; cuts are found by enumerating candidate sets by size instead.

Ties are broken by the lexicographic order of the ascending label tuple,
so every result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels as K
from .hypergraph import Hypergraph, component_masks, induced, lex_key, mask_of, members

__all__ = [
    "CutResult",
    "SeparationTriple",
    "KappaBarResult",
    "BRUTE_FORCE_MAX_N",
    "is_connected",
    "min_separator",
    "min_vertex_cut",
    "kappa",
    "is_t_connected",
    "kappa_of_set",
    "kappa_bar_bruteforce",
    "kappa_bar",
    "find_t_connected",
    "separation_triple",
]

BRUTE_FORCE_MAX_N = 14


@dataclass(frozen=True)
class CutResult:
    kappa: int
    cut: frozenset[int] | None

    @property
    def kind(self) -> str:
        return "no-cut" if self.cut is None else "cut"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "kappa": self.kappa,
            "cut": None if self.cut is None else sorted(self.cut),
        }


@dataclass(frozen=True)
class KappaBarResult:
    value: int
    witness: frozenset[int]

    def to_dict(self) -> dict:
        return {"kappa_bar": self.value, "witness": sorted(self.witness)}


@dataclass(frozen=True)
class SeparationTriple:
    s: frozenset[int]
    side1: frozenset[int]
    side2: frozenset[int]
    h1: Hypergraph
    h2: Hypergraph
    h1_labels: tuple[int, ...]
    h2_labels: tuple[int, ...]

    @property
    def n1(self) -> int:
        return self.h1.n

    @property
    def n2(self) -> int:
        return self.h2.n

    def to_dict(self) -> dict:
        return {
            "s": sorted(self.s),
            "side1": sorted(self.side1),
            "side2": sorted(self.side2),
            "n1": self.n1,
            "n2": self.n2,
        }


# -- mask-level helpers ----------------------------------------------------------


def _edges(h: Hypergraph) -> np.ndarray:
    K.check_n(h.n)
    return K.edge_array(h.masks)


def _find_cut(edges: np.ndarray, pool: int, max_size: int) -> int | None:
    """Lexicographically first minimum X within ``pool`` with ``pool - X`` disconnected.

    Only sizes ``0..max_size`` are tried; returns None if no such X exists
    in that range.
    """
    size = pool.bit_count()
    top = min(max_size, size - 2)
    pool_u = np.uint64(pool)
    for s in range(top + 1):
        cand = K.subset_masks(pool, s)
        ok = K.connected_batch(edges, pool_u & ~cand)
        bad = np.flatnonzero(~ok)
        if len(bad):
            return int(cand[bad[0]])
    return None


def _kappa_mask(edges: np.ndarray, pool: int) -> tuple[int, int | None]:
    size = pool.bit_count()
    if size <= 1:
        return 0, None
    cut = _find_cut(edges, pool, size - 2)
    if cut is None:
        return size - 1, None
    return cut.bit_count(), cut


def _neighborhood(edges_inside: list[int], v: int) -> int:
    bit = 1 << v
    nb = 0
    for e in edges_inside:
        if e & bit:
            nb |= e
    return nb & ~bit


def _peel(edge_list: list[int], pool: int, t: int) -> int:
    """Drop vertices whose neighbourhood inside the pool has fewer than t vertices."""
    changed = True
    while changed and pool:
        changed = False
        inside = [e for e in edge_list if e & pool == e]
        for v in members(pool):
            if _neighborhood(inside, v).bit_count() < t:
                pool &= ~(1 << v)
                changed = True
                break
    return pool


def _t_connected_cores(
    edges: np.ndarray, edge_list: list[int], pool: int, t: int, must: int = 0, first_only: bool = False
) -> list[int]:
    """Vertex sets Y with kappa(H[Y]) >= t that contain every other such set.

    Every induced sub-hypergraph of ``H[pool]`` with connectivity >= t (and
    containing ``must``) lies inside one of the returned sets, and each
    returned set itself has connectivity >= t.
    """
    found: list[int] = []
    stack = [pool]
    while stack:
        y = stack.pop()
        if t > 0:
            y = _peel(edge_list, y, t)
        if y & must != must or y.bit_count() <= t:
            continue
        cut = _find_cut(edges, y, t - 1)
        if cut is None:
            found.append(y)
            if first_only:
                return found
            continue
        rest = y & ~cut
        children = [cut | c for c in component_masks(edge_list, rest)]
        for child in reversed(children):
            if child & must == must:
                stack.append(child)
    return found


def _pick_witness(cands: Iterable[int]) -> int:
    return min(cands, key=lambda y: (-y.bit_count(), lex_key(y)))


# -- public API ----------------------------------------------------------------


def is_connected(h: Hypergraph) -> bool:
    return len(component_masks(h.masks, h.vertex_mask)) <= 1


def min_separator(h: Hypergraph, u: int, v: int) -> CutResult:
    """Smallest X avoiding u, v whose deletion leaves u and v in different components."""
    if u == v:
        raise ValueError("u and v must differ")
    for x in (u, v):
        if not (0 <= x < h.n):
            raise ValueError(f"vertex {x} outside [0, {h.n})")
    edges = _edges(h)
    full = h.vertex_mask
    pool = full & ~(1 << u) & ~(1 << v)
    for s in range(pool.bit_count() + 1):
        cand = K.subset_masks(pool, s)
        rest = np.uint64(full) & ~cand
        reach = K.reach_batch(edges, rest, np.full(len(cand), 1 << u, dtype=np.uint64))
        hit = np.flatnonzero((reach & np.uint64(1 << v)) == 0)
        if len(hit):
            x = int(cand[hit[0]])
            return CutResult(x.bit_count(), frozenset(members(x)))
    return CutResult(max(h.n - 1, 0), None)


def min_vertex_cut(h: Hypergraph) -> CutResult:
    """Minimum vertex cut (lexicographically first among minimum ones)."""
    k, cut = _kappa_mask(_edges(h), h.vertex_mask)
    return CutResult(k, None if cut is None else frozenset(members(cut)))


def kappa(h: Hypergraph) -> int:
    return min_vertex_cut(h).kappa


def kappa_of_set(h: Hypergraph, y: int | Iterable[int]) -> int:
    """kappa of the induced sub-hypergraph H[y], without relabelling."""
    ym = y if isinstance(y, int) else mask_of(y)
    return _kappa_mask(_edges(h), ym)[0]


def is_t_connected(h: Hypergraph, t: int) -> bool:
    """``kappa(h) >= t``; stops at the first cut smaller than t."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return True
    if h.n <= t:
        return False
    return _find_cut(_edges(h), h.vertex_mask, t - 1) is None


def kappa_bar_bruteforce(h: Hypergraph, max_n: int = BRUTE_FORCE_MAX_N) -> KappaBarResult:
    """Maximum of kappa(H[Y]) over every vertex subset Y.

    For every Y the largest disconnected subset W of Y (|W| >= 2) is found by
    a subset-maximum sweep; ``kappa(H[Y]) = |Y| - |W|`` when such W exists and
    ``|Y| - 1`` otherwise. The witness is the largest maximising Y, ties going
    to the lexicographically smallest label tuple.
    """
    if h.n > max_n:
        raise ValueError(f"brute force limited to n <= {max_n}, got n={h.n}")
    n = h.n
    if n == 0:
        return KappaBarResult(0, frozenset())
    edges = _edges(h)
    ys = np.arange(1 << n, dtype=np.uint64)
    size = K.popcount(ys)
    conn = K.connected_batch(edges, ys)
    best = np.where(~conn & (size >= 2), size, -1)
    for i in range(n):
        bit = 1 << i
        idx = np.arange(1 << n)
        has = (idx & bit) != 0
        best[has] = np.maximum(best[has], best[idx[has] ^ bit])
    kap = np.where(best >= 2, size - best, np.maximum(size - 1, 0))
    value = int(kap.max())
    top = np.flatnonzero(kap == value)
    top_size = size[top].max()
    cands = [int(y) for y in top[size[top] == top_size]]
    return KappaBarResult(value, frozenset(members(_pick_witness(cands))))


def _upper_probe(h: Hypergraph) -> int:
    inside = list(h.masks)
    ub = max((_neighborhood(inside, v).bit_count() for v in range(h.n)), default=0)
    return min(ub, max(h.n - 1, 0))


def find_t_connected(h: Hypergraph, t: int, must: int | Iterable[int] = 0) -> frozenset[int] | None:
    """Some Y containing ``must`` with ``kappa(H[Y]) >= t``, or None.

    The returned set is maximal: no strictly larger such Y contains it.
    """
    mm = must if isinstance(must, int) else mask_of(must)
    found = _t_connected_cores(_edges(h), list(h.masks), h.vertex_mask, t, must=mm, first_only=True)
    return frozenset(members(found[0])) if found else None


def kappa_bar(h: Hypergraph, t_probe: int | None = None) -> KappaBarResult:
    """Maximum connectivity over all sub-hypergraphs, by peeling and cut decomposition.

    For a threshold t, vertices whose neighbourhood has fewer than t members
    cannot sit in any t-connected induced sub-hypergraph and are peeled. If
    the remaining core is not t-connected, a cut S of size < t splits it and
    every t-connected set lies inside S plus a single component, so each of
    those pieces is searched on its own. The largest t that survives is the
    answer. ``t_probe`` is an optional first guess for that threshold.

    Returns the same value and witness as :func:`kappa_bar_bruteforce`.
    """
    n = h.n
    if n == 0:
        return KappaBarResult(0, frozenset())
    edges = _edges(h)
    edge_list = list(h.masks)
    full = h.vertex_mask
    cache: dict[int, bool] = {0: True}

    def feasible(t: int) -> bool:
        if t not in cache:
            cache[t] = bool(_t_connected_cores(edges, edge_list, full, t, first_only=True))
        return cache[t]

    lo, hi = 0, _upper_probe(h)
    if t_probe is not None and lo < t_probe <= hi:
        if feasible(t_probe):
            lo = t_probe
        else:
            hi = t_probe - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid - 1
    cores = _t_connected_cores(edges, edge_list, full, lo)
    return KappaBarResult(lo, frozenset(members(_pick_witness(cores))))


def separation_triple(h: Hypergraph) -> SeparationTriple:
    """Split along the lexicographically first minimum cut.

    ``side1`` is the component of H - S holding the smallest label; ``side2``
    is everything else outside S.
    """
    edges = _edges(h)
    _, cut = _kappa_mask(edges, h.vertex_mask)
    if cut is None:
        raise ValueError("hypergraph has no vertex cut")
    comps = component_masks(h.masks, h.vertex_mask & ~cut)
    side1 = comps[0]
    side2 = h.vertex_mask & ~cut & ~side1
    h1, l1 = induced(h, cut | side1)
    h2, l2 = induced(h, cut | side2)
    return SeparationTriple(
        s=frozenset(members(cut)),
        side1=frozenset(members(side1)),
        side2=frozenset(members(side2)),
        h1=h1,
        h2=h2,
        h1_labels=l1,
        h2_labels=l2,
    )
