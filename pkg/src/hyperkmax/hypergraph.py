"""Immutable r-uniform hypergraphs on the labels ``0..n-1``.

Edges and vertex sets are held internally as integer bit masks (bit ``i``
set means vertex ``i`` is a member). Python ints are unbounded, so the same
representation serves every ``n``. Public accessors hand out sorted label
tuples and frozensets; the edge order is lexicographic on the sorted label
tuples, so it depends only on the edge set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .bounds import binom, hu_decomposition

__all__ = [
    "Hypergraph",
    "mask_of",
    "members",
    "lex_key",
    "complete",
    "empty",
    "complement",
    "union",
    "disjoint_union",
    "r_join",
    "h_l",
    "h_u",
    "induced",
    "delete_vertices",
    "components",
    "crossing_edges",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key for vertex sets: lexicographic on the ascending label tuple."""
    return members(mask)


def _as_mask(x: int | Iterable[int]) -> int:
    if isinstance(x, int):
        return x
    return mask_of(x)


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph with vertices ``0..n-1``.

    Construct through :meth:`from_edges` (or the family builders in this
    module); the raw constructor expects ``masks`` already canonical.
    """

    n: int
    r: int
    masks: tuple[int, ...]
    _mask_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_mask_set", frozenset(self.masks))

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        if r < 2:
            raise ValueError(f"uniformity r must be >= 2, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        seen: set[int] = set()
        for e in edges:
            labels = tuple(e)
            if len(set(labels)) != len(labels) or len(labels) != r:
                raise ValueError(f"edge {labels} does not have exactly {r} distinct vertices")
            for v in labels:
                if not (0 <= v < n):
                    raise ValueError(f"edge {labels} has a vertex outside [0, {n})")
            m = mask_of(labels)
            if m in seen:
                raise ValueError(f"duplicate edge {tuple(sorted(labels))}")
            seen.add(m)
        return cls._from_masks(n, r, seen)

    @classmethod
    def _from_masks(cls, n: int, r: int, masks: Iterable[int]) -> "Hypergraph":
        return cls(n, r, tuple(sorted(set(masks), key=lex_key)))

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.masks)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(members(e) for e in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        if isinstance(edge, int):
            return edge in self._mask_set
        try:
            return mask_of(edge) in self._mask_set  # type: ignore[arg-type]
        except TypeError:
            return False

    def has_edge(self, edge: int | Iterable[int]) -> bool:
        return _as_mask(edge) in self._mask_set

    def is_complete(self) -> bool:
        return self.m == binom(self.n, self.r)

    # -- edge edits --------------------------------------------------------

    def _check_edge(self, edge: int | Iterable[int]) -> int:
        m = _as_mask(edge)
        if m >> self.n:
            raise ValueError(f"edge {members(m)} has a vertex outside [0, {self.n})")
        if m.bit_count() != self.r:
            raise ValueError(f"edge {members(m)} does not have exactly {self.r} vertices")
        return m

    def add_edge(self, edge: int | Iterable[int]) -> "Hypergraph":
        m = self._check_edge(edge)
        if m in self._mask_set:
            raise ValueError(f"edge {members(m)} is already present")
        return Hypergraph._from_masks(self.n, self.r, self.masks + (m,))

    def remove_edge(self, edge: int | Iterable[int]) -> "Hypergraph":
        m = self._check_edge(edge)
        if m not in self._mask_set:
            raise ValueError(f"edge {members(m)} is not present")
        return Hypergraph(self.n, self.r, tuple(x for x in self.masks if x != m))

    def add_edges(self, edges: Iterable[int | Iterable[int]]) -> "Hypergraph":
        h = self
        for e in edges:
            h = h.add_edge(e)
        return h

    # -- degrees -----------------------------------------------------------

    def degree(self, u: int) -> int:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} outside [0, {self.n})")
        bit = 1 << u
        return sum(1 for e in self.masks if e & bit)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.masks:
            for v in members(e):
                deg[v] += 1
        return deg

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self) -> bool:
        d = self.degrees()
        return len(set(d)) <= 1

    def neighborhood_mask(self, u: int, within: int | None = None) -> int:
        """Union of the edges through ``u`` (restricted to ``within``) minus ``u``."""
        bit = 1 << u
        nb = 0
        for e in self.masks:
            if e & bit and (within is None or e & within == e):
                nb |= e
        return nb & ~bit

    # -- misc --------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, m={self.m})"


# -- constructors ------------------------------------------------------------


def _all_r_subsets(vertices: Sequence[int], r: int) -> Iterator[int]:
    for c in combinations(vertices, r):
        yield mask_of(c)


def complete(n: int, r: int) -> Hypergraph:
    """K_n^r; edgeless when ``n < r``."""
    if r < 2:
        raise ValueError(f"uniformity r must be >= 2, got {r}")
    if n < 0:
        raise ValueError(f"vertex count must be >= 0, got {n}")
    return Hypergraph(n, r, tuple(_all_r_subsets(range(n), r)))


def empty(n: int, r: int) -> Hypergraph:
    if r < 2:
        raise ValueError(f"uniformity r must be >= 2, got {r}")
    return Hypergraph(n, r, ())


def complement(h: Hypergraph) -> Hypergraph:
    return Hypergraph(h.n, h.r, tuple(e for e in _all_r_subsets(range(h.n), h.r) if e not in h._mask_set))


def union(h1: Hypergraph, h2: Hypergraph, offset: int = 0) -> Hypergraph:
    """Union of ``h1`` and ``h2`` with the labels of ``h2`` shifted by ``offset``.

    ``offset=0`` overlays the two label spaces; ``offset=h1.n`` gives the
    disjoint union.
    """
    if h1.r != h2.r:
        raise ValueError(f"uniformity mismatch: {h1.r} != {h2.r}")
    if offset < 0:
        raise ValueError("offset must be non-negative")
    n = max(h1.n, h2.n + offset)
    return Hypergraph._from_masks(n, h1.r, list(h1.masks) + [e << offset for e in h2.masks])


def disjoint_union(*parts: Hypergraph) -> Hypergraph:
    if not parts:
        raise ValueError("need at least one operand")
    out = parts[0]
    for p in parts[1:]:
        out = union(out, p, offset=out.n)
    return out


def r_join(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Disjoint union plus every r-set meeting both sides; ``h2`` is relabelled by ``h1.n``."""
    if h1.r != h2.r:
        raise ValueError(f"uniformity mismatch: {h1.r} != {h2.r}")
    base = union(h1, h2, offset=h1.n)
    left = (1 << h1.n) - 1
    right = ((1 << h2.n) - 1) << h1.n
    extra = [e for e in _all_r_subsets(range(h1.n + h2.n), h1.r) if e & left and e & right]
    return Hypergraph._from_masks(h1.n + h2.n, h1.r, list(base.masks) + extra)


def h_l(n: int, k: int, r: int) -> Hypergraph:
    """Complete K_k^r hub on ``0..k-1`` r-joined to an edgeless set ``k..n-1``."""
    if k < 2 or r < 2:
        raise ValueError(f"need k, r >= 2 (got k={k}, r={r})")
    if n < k + 1:
        raise ValueError(f"need n >= k + 1 (got n={n}, k={k})")
    return r_join(complete(k, r), empty(n - k, r))


def h_u(n: int, k: int, r: int) -> Hypergraph:
    """Edgeless hub ``0..k-1`` r-joined to p-1 disjoint K_k^r and one K_q^r.

    With ``n = p*k + q`` and ``1 <= q <= k``; the cliques occupy consecutive
    label blocks after the hub, the K_q^r block last.
    """
    if k < 2 or r < 2:
        raise ValueError(f"need k, r >= 2 (got k={k}, r={r})")
    if n < 2 * k:
        raise ValueError(f"need n >= 2k (got n={n}, k={k})")
    p, q = hu_decomposition(n, k)
    rest = disjoint_union(*([complete(k, r)] * (p - 1) + [complete(q, r)]))
    return r_join(empty(k, r), rest)


# -- induced structure ---------------------------------------------------------


def induced(h: Hypergraph, y: int | Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """Subhypergraph induced by ``y``, relabelled contiguously.

    Returns ``(sub, label_map)`` where ``label_map[i]`` is the original label
    of new vertex ``i``.
    """
    ym = _as_mask(y)
    if ym >> h.n:
        raise ValueError(f"vertex set {members(ym)} not inside [0, {h.n})")
    labels = members(ym)
    new = {v: i for i, v in enumerate(labels)}
    kept = []
    for e in h.masks:
        if e & ym == e:
            kept.append(mask_of(new[v] for v in members(e)))
    return Hypergraph._from_masks(len(labels), h.r, kept), labels


def delete_vertices(h: Hypergraph, x: int | Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
    """``H - X``: the subhypergraph induced by the remaining vertices."""
    xm = _as_mask(x)
    return induced(h, h.vertex_mask & ~xm)


def component_masks(edge_masks: Sequence[int], vertex_mask: int) -> list[int]:
    """Components of the hypergraph (vertex_mask, edges inside vertex_mask) as masks.

    Edges not contained in ``vertex_mask`` are ignored, which gives induced
    semantics for free.
    """
    inside = [e for e in edge_masks if e & vertex_mask == e]
    comps = []
    rest = vertex_mask
    while rest:
        comp = rest & -rest
        grown = True
        while grown:
            grown = False
            for e in inside:
                if e & comp and e & ~comp:
                    comp |= e
                    grown = True
        comps.append(comp)
        rest &= ~comp
    return comps


def components(h: Hypergraph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest member."""
    return [frozenset(members(c)) for c in component_masks(h.masks, h.vertex_mask)]


def crossing_edges(
    h: Hypergraph, parts: Sequence[Iterable[int]], exact: bool = False
) -> list[tuple[int, ...]]:
    """Edges meeting every part (and, with ``exact``, lying inside their union)."""
    pm = [_as_mask(p) for p in parts]
    if not pm:
        raise ValueError("need at least one part")
    seen = 0
    for p in pm:
        if p == 0:
            raise ValueError("parts must be non-empty")
        if p & seen:
            raise ValueError("parts must be pairwise disjoint")
        if p >> h.n:
            raise ValueError("part has a vertex outside the hypergraph")
        seen |= p
    out = []
    for e in h.masks:
        if all(e & p for p in pm) and (not exact or e & seen == e):
            out.append(members(e))
    return out
