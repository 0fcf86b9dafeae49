"""Extremal-size searches: exhaustive enumeration and sampled saturation."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..bounds import binom, conjectured_upper
from ..hypergraph import Hypergraph, component_masks, empty, mask_of
from ..maximality import saturate

__all__ = [
    "Limits",
    "SearchResult",
    "BudgetExceeded",
    "exhaustive_extremal",
    "sample_saturations",
    "trial_seeds",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Limits:
    max_edges: int = 24
    max_nodes: int | None = None
    time_budget: float | None = None


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    r: int
    mode: str
    min_size: int | None
    max_size: int | None
    min_witness: Hypergraph | None
    max_witness: Hypergraph | None
    histogram: dict[int, int]
    count_maximal: int | None = None
    seed: int | None = None
    complete: bool = True
    nodes: int = 0
    maximal: tuple[Hypergraph, ...] = ()
    above_conjecture: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "mode": self.mode,
            "seed": self.seed,
            "complete": self.complete,
            "count_maximal": self.count_maximal,
            "min_size": self.min_size,
            "max_size": self.max_size,
            "min_witness": None if self.min_witness is None else self.min_witness.to_dict(),
            "max_witness": None if self.max_witness is None else self.max_witness.to_dict(),
            "histogram": {str(s): c for s, c in sorted(self.histogram.items())},
            "conj_upper": str(conjectured_upper(self.n, self.k, self.r)),
            "above_conjecture": list(self.above_conjecture),
            "nodes": self.nodes,
        }


class _Family:
    """Membership oracle for {E : no induced (k+1)-connected set} over K_n^r.

    Edge sets are ints over the universe index. ``blocked(E, i)`` says whether
    some vertex set containing edge i is (k+1)-connected in ``E``; vertex sets
    Y qualify when every W inside Y with ``|W| >= |Y| - k`` is connected.
    """

    def __init__(self, n: int, k: int, r: int):
        self.universe = [mask_of(c) for c in combinations(range(n), r)]
        m = len(self.universe)
        self.m = m
        self._inside = [
            sum(1 << i for i, e in enumerate(self.universe) if e & w == e) for w in range(1 << n)
        ]
        self._tests: dict[int, list[int]] = {}
        for y in range(1 << n):
            s = y.bit_count()
            if s < k + 2:
                continue
            subs = [w for w in range(1 << n) if w & y == w and w.bit_count() >= max(2, s - k)]
            subs.sort(key=int.bit_count)
            self._tests[y] = subs
        self._through = [[y for y in self._tests if y & e == e] for e in self.universe]
        self._memo: dict[tuple[int, int], bool] = {}

    def _connected(self, w: int, edges: int) -> bool:
        key = (w, edges & self._inside[w])
        hit = self._memo.get(key)
        if hit is None:
            live = [self.universe[i] for i in range(self.m) if key[1] >> i & 1]
            hit = len(component_masks(live, w)) <= 1
            self._memo[key] = hit
        return hit

    def blocked(self, edges: int, i: int) -> bool:
        for y in self._through[i]:
            if all(self._connected(w, edges) for w in self._tests[y]):
                return True
        return False

    def addable(self, edges: int, i: int) -> bool:
        return not self.blocked(edges | 1 << i, i)

    def to_hypergraph(self, n: int, r: int, edges: int) -> Hypergraph:
        return Hypergraph._from_masks(n, r, [self.universe[i] for i in range(self.m) if edges >> i & 1])


class _Budget:
    def __init__(self, limits: Limits):
        self.limits = limits
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        lim = self.limits
        if lim.max_nodes is not None and self.nodes > lim.max_nodes:
            raise BudgetExceeded(f"node budget {lim.max_nodes} exceeded")
        if lim.time_budget is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.start > lim.time_budget:
                raise BudgetExceeded(f"time budget {lim.time_budget}s exceeded")


def _maximal_blocking(fam: _Family, budget: _Budget) -> list[int]:
    m = fam.m
    found = []
    stack = [(0, 0, 0)]
    while stack:
        edges, j, pending = stack.pop()
        budget.tick()
        still = 0
        for x in range(m):
            if pending >> x & 1 and fam.addable(edges, x):
                still |= 1 << x
        if j == m:
            if not still:
                found.append(edges)
            continue
        later = 0
        for e in range(j, m):
            if fam.addable(edges, e):
                later |= 1 << e
        reach = edges | later
        if any(still >> x & 1 and fam.addable(reach, x) for x in range(m)):
            continue
        if later >> j & 1:
            stack.append((edges, j + 1, still | 1 << j))
            stack.append((edges | 1 << j, j + 1, still))
        else:
            stack.append((edges, j + 1, still))
    return found


def _maximal_downset(fam: _Family, budget: _Budget) -> list[int]:
    m = fam.m
    found = []
    stack = [(0, -1, list(range(m)))]
    while stack:
        edges, last, addable = stack.pop()
        budget.tick()
        if not addable:
            found.append(edges)
            continue
        for j in addable:
            if j > last:
                grown = edges | 1 << j
                stack.append((grown, j, [x for x in addable if x != j and fam.addable(grown, x)]))
    return found


def _extremes(hs: list[Hypergraph]) -> tuple:
    if not hs:
        return None, None, None, None
    lo = min(hs, key=lambda h: (h.m, h.edges))
    hi = min(hs, key=lambda h: (-h.m, h.edges))
    return lo.m, hi.m, lo, hi


def exhaustive_extremal(
    n: int,
    k: int,
    r: int,
    limits: Limits = Limits(),
    strategy: str = "blocking",
) -> SearchResult:
    """All labelled vertex-k-maximal r-uniform hypergraphs on n vertices.

    Depth-first over edge subsets of K_n^r in lexicographic edge order. A
    branch is dropped as soon as its edge set holds a (k+1)-connected
    induced sub-hypergraph, which is sound because that property survives
    adding edges. With ``strategy="blocking"`` branches also decide to
    exclude an edge, and a branch dies once some excluded edge can never be
    blocked by later additions. ``strategy="downset"`` walks every admissible
    edge set instead.

    If a budget runs out the result carries ``complete=False`` and only the
    hypergraphs found so far.
    """
    if k < 2 or r < 2 or n < k + 1:
        raise ValueError(f"need k, r >= 2 and n >= k + 1 (got n={n}, k={k}, r={r})")
    if binom(n, r) > limits.max_edges:
        raise ValueError(f"C({n},{r}) = {binom(n, r)} candidate edges exceeds ceiling {limits.max_edges}")
    fam = _Family(n, k, r)
    budget = _Budget(limits)
    walker = {"blocking": _maximal_blocking, "downset": _maximal_downset}[strategy]
    complete = True
    found: list[int] = []
    try:
        found = walker(fam, budget)
    except BudgetExceeded:
        complete = False
    hs = sorted((fam.to_hypergraph(n, r, e) for e in found), key=lambda h: h.edges)
    lo, hi, lo_w, hi_w = _extremes(hs)
    cu = conjectured_upper(n, k, r)
    return SearchResult(
        n=n,
        k=k,
        r=r,
        mode="exhaustive",
        min_size=lo,
        max_size=hi,
        min_witness=lo_w,
        max_witness=hi_w,
        histogram=dict(sorted(Counter(h.m for h in hs).items())),
        count_maximal=len(hs),
        complete=complete,
        nodes=budget.nodes,
        maximal=tuple(hs),
        above_conjecture=tuple(sorted({h.m for h in hs if h.m > cu})),
    )


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Independent per-trial seeds derived from one root seed."""
    ss = np.random.SeedSequence(seed)
    return [int(c.generate_state(1)[0]) for c in ss.spawn(trials)]


def _one_trial(args: tuple[int, int, int, int]) -> Hypergraph:
    n, k, r, s = args
    return saturate(empty(n, r), k, order="random", seed=s)


def sample_saturations(
    n: int, k: int, r: int, trials: int, seed: int = 0, workers: int = 1
) -> SearchResult:
    """Saturate the edgeless hypergraph under ``trials`` seeded random orders.

    Sizes above the conjectured upper bound are listed in ``above_conjecture``
    as observations; nothing is asserted here.
    """
    if k < 2 or r < 2 or n < 1:
        raise ValueError(f"need k, r >= 2 and n >= 1 (got n={n}, k={k}, r={r})")
    jobs = [(n, k, r, s) for s in trial_seeds(seed, trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hs = list(pool.map(_one_trial, jobs))
    else:
        hs = [_one_trial(j) for j in jobs]
    lo, hi, lo_w, hi_w = _extremes(hs)
    cu: Fraction = conjectured_upper(n, k, r)
    return SearchResult(
        n=n,
        k=k,
        r=r,
        mode="sampled",
        min_size=lo,
        max_size=hi,
        min_witness=lo_w,
        max_witness=hi_w,
        histogram=dict(sorted(Counter(h.m for h in hs).items())),
        seed=seed,
        above_conjecture=tuple(sorted({h.m for h in hs if h.m > cu})),
    )
