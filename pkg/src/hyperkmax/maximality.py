"""Vertex-k-maximality: decision with certificates, and greedy saturation."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .bounds import binom
from .connectivity import (
    find_t_connected,
    kappa,
    kappa_bar,
    kappa_of_set,
    separation_triple,
)
from .hypergraph import Hypergraph, complement, crossing_edges, induced, mask_of, members

__all__ = [
    "MaximalityReport",
    "is_vertex_k_maximal",
    "saturate",
    "missing_edges",
    "verify_lemma_2_1",
    "verify_lemma_2_3",
    "LemmaCheck",
    "separation_formula",
    "recheck_certificates",
]

Verdict = Literal["maximal", "not-admissible", "not-maximal"]


@dataclass(frozen=True)
class MaximalityReport:
    k: int
    kappa: int
    kappa_bar: int
    verdict: Verdict
    certificates: tuple[tuple[tuple[int, ...], frozenset[int]], ...] = ()
    counterexample: tuple[int, ...] | None = None

    @property
    def is_maximal(self) -> bool:
        return self.verdict == "maximal"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "k": self.k,
            "kappa": self.kappa,
            "kappa_bar": self.kappa_bar,
            "certificates": [{"edge": list(e), "witness": sorted(w)} for e, w in self.certificates],
            "counterexample": None if self.counterexample is None else list(self.counterexample),
        }


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def missing_edges(h: Hypergraph) -> tuple[int, ...]:
    """Masks of the complement's edges, lexicographic order."""
    return complement(h).masks


def _certificate(args: tuple[Hypergraph, int, int]) -> tuple[int, frozenset[int] | None]:
    h, e, k = args
    return e, find_t_connected(h.add_edge(e), k + 1, must=e)


def is_vertex_k_maximal(h: Hypergraph, k: int, workers: int = 1) -> MaximalityReport:
    """Decide vertex-k-maximality of ``h``.

    When maximal, each missing edge e carries a vertex set Y_e with
    ``kappa((h + e)[Y_e]) >= k + 1``. Otherwise the report names either the
    inadmissibility (``kappa_bar > k``) or the first missing edge whose
    addition keeps ``kappa_bar <= k``.
    """
    _check_k(k)
    kb = kappa_bar(h).value
    kap = kappa(h)
    if kb > k:
        return MaximalityReport(k, kap, kb, "not-admissible")
    todo = [(h, e, k) for e in missing_edges(h)]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_certificate, todo, chunksize=8))
    else:
        results = []
        for item in todo:
            res = _certificate(item)
            results.append(res)
            if res[1] is None:
                break
    certs = []
    for e, w in results:
        if w is None:
            return MaximalityReport(k, kap, kb, "not-maximal", counterexample=members(e))
        certs.append((members(e), w))
    return MaximalityReport(k, kap, kb, "maximal", tuple(certs))


def saturate(
    h: Hypergraph,
    k: int,
    order: Literal["lex", "random"] = "lex",
    seed: int | None = None,
) -> Hypergraph:
    """Grow ``h`` into a vertex-k-maximal hypergraph.

    Missing edges are scanned in lexicographic or seeded-random order and
    each is kept when the hypergraph stays free of (k+1)-connected induced
    sub-hypergraphs. Only sets through the new edge need checking, since any
    other such set would already have existed. Passes repeat until nothing
    is added.
    """
    _check_k(k)
    if kappa_bar(h).value > k:
        raise ValueError(f"input already has kappa_bar > {k}")
    cand = list(missing_edges(h))
    if order == "random":
        rng = np.random.default_rng(0 if seed is None else seed)
        cand = [cand[i] for i in rng.permutation(len(cand))]
    elif order != "lex":
        raise ValueError(f"unknown order {order!r}")
    cur = h
    while True:
        added = []
        for e in cand:
            nxt = cur.add_edge(e)
            if find_t_connected(nxt, k + 1, must=e) is None:
                cur = nxt
                added.append(e)
        if kappa_bar(cur).value > k:
            raise AssertionError("incremental check admitted an edge that raised kappa_bar")
        if not added:
            return cur
        done = set(added)
        cand = [e for e in cand if e not in done]


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    values: dict = field(default_factory=dict)
    reason: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "values": self.values, "reason": self.reason}


def verify_lemma_2_1(h: Hypergraph, k: int, report: MaximalityReport | None = None) -> LemmaCheck:
    """For a vertex-k-maximal h with n >= k + r - 1, check kappa = kappa_bar = k."""
    _check_k(k)
    rep = report or is_vertex_k_maximal(h, k)
    vals = {"n": h.n, "k": k, "r": h.r, "kappa": rep.kappa, "kappa_bar": rep.kappa_bar}
    if not rep.is_maximal:
        return LemmaCheck("lemma2.1", False, vals, f"precondition: verdict is {rep.verdict}")
    if h.n < k + h.r - 1:
        return LemmaCheck("lemma2.1", False, vals, "precondition: n < k + r - 1")
    return LemmaCheck("lemma2.1", rep.kappa == k and rep.kappa_bar == k, vals)


def separation_formula(n: int, n1: int, n2: int, k: int, r: int) -> int:
    """Number of r-sets meeting side1, S and side2 when every such set is an edge."""
    return (
        binom(n, r)
        - binom(n1, r)
        - binom(n2, r)
        + binom(k, r)
        - binom(n - k, r)
        + binom(n1 - k, r)
        + binom(n2 - k, r)
    )


def verify_lemma_2_3(h: Hypergraph, k: int, report: MaximalityReport | None = None) -> LemmaCheck:
    """Check both parts of the separation-triple crossing statement.

    (i) no complement edge meets side1, S and side2 at once; (ii) the number
    of edges of h meeting all three equals :func:`separation_formula`. The
    record also carries the split of the missing edges inside S into those
    absorbable by H1 and those absorbable by H2, which must be disjoint.
    """
    _check_k(k)
    rep = report or is_vertex_k_maximal(h, k)
    vals: dict = {"n": h.n, "k": k, "r": h.r}
    if not rep.is_maximal:
        return LemmaCheck("lemma2.3", False, vals, f"precondition: verdict is {rep.verdict}")
    if h.n < k + h.r:
        return LemmaCheck("lemma2.3", False, vals, "precondition: n < k + r")
    tri = separation_triple(h)
    parts = [tri.side1, tri.s, tri.side2]
    bad = crossing_edges(complement(h), parts)
    count = len(crossing_edges(h, parts))
    formula = separation_formula(h.n, tri.n1, tri.n2, len(tri.s), h.r)

    s_mask = mask_of(tri.s)
    hs, s_labels = induced(h, s_mask)
    e1, e2 = [], []
    for em in complement(hs).masks:
        e = mask_of(s_labels[i] for i in members(em))
        for side, bucket in ((tri.side1, e1), (tri.side2, e2)):
            sub = mask_of(tri.s) | mask_of(side)
            hp = h.add_edge(e)
            if find_t_connected(induced(hp, sub)[0], k + 1) is None:
                bucket.append(members(e))
    overlap = sorted(set(e1) & set(e2))

    vals.update(
        {
            "s": sorted(tri.s),
            "side1": sorted(tri.side1),
            "side2": sorted(tri.side2),
            "n1": tri.n1,
            "n2": tri.n2,
            "complement_crossing": len(bad),
            "crossing": count,
            "formula": formula,
            "e1": len(e1),
            "e2": len(e2),
            "e1_e2_overlap": len(overlap),
        }
    )
    ok = not bad and count == formula and not overlap and len(tri.s) == k
    return LemmaCheck("lemma2.3", ok, vals)


def recheck_certificates(h: Hypergraph, report: MaximalityReport) -> bool:
    """Re-verify every certificate with a plain kappa computation."""
    for e, w in report.certificates:
        if kappa_of_set(h.add_edge(e), w) < report.k + 1:
            return False
    return True
