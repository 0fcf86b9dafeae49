"""Per-claim verification over (n, k, r) parameter grids.

Each claim id maps to a hypothesis range and a cell checker. A cell is
checked against a deterministic suite of hypergraphs: the two extremal
constructions where defined, lexicographic and seeded-random saturations of
the edgeless hypergraph, and (where the edge universe is small enough) every
vertex-k-maximal hypergraph found by exhaustive search.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from ..bounds import binom, conjectured_upper, lower_bound
from ..hypergraph import Hypergraph, empty, h_l, h_u
from ..io import dumps_hg, loads_hg
from ..maximality import is_vertex_k_maximal, saturate, verify_lemma_2_1, verify_lemma_2_3
from .search import BudgetExceeded, Limits, exhaustive_extremal, trial_seeds

__all__ = [
    "CLAIMS",
    "Claim",
    "CellResult",
    "ClaimReport",
    "Settings",
    "verify_claim",
    "check_cell",
    "default_grid",
    "write_run",
    "instance_suite",
]

Cell = tuple[int, int, int]


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    samples: int = 3
    exhaustive: bool = True
    limits: Limits = Limits(max_edges=15)


@dataclass(frozen=True)
class CellResult:
    n: int
    k: int
    r: int
    status: str
    reason: str | None = None
    details: dict = field(default_factory=dict)
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "status": self.status,
            "reason": self.reason,
            "details": self.details,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    hypothesis: Callable[[int, int, int], str | None]
    check: Callable[[int, int, int, Settings], CellResult]
    asserted: bool = True


def _need(cond: bool, why: str) -> str | None:
    return None if cond else why


# -- instance suites -------------------------------------------------------


def instance_suite(n: int, k: int, r: int, settings: Settings) -> list[tuple[str, Hypergraph]]:
    """Constructions plus saturations of the edgeless hypergraph for one cell."""
    out: list[tuple[str, Hypergraph]] = []
    if n >= k + 1:
        out.append(("h_l", h_l(n, k, r)))
    if n >= 2 * k:
        out.append(("h_u", h_u(n, k, r)))
    out.append(("saturate-lex", saturate(empty(n, r), k)))
    for i, s in enumerate(trial_seeds(_cell_seed(settings.seed, n, k, r), settings.samples)):
        out.append((f"saturate-random-{i}", saturate(empty(n, r), k, order="random", seed=s)))
    return out


def _cell_seed(seed: int, n: int, k: int, r: int) -> int:
    return (seed * 1_000_003 + n * 10_007 + k * 101 + r) & 0xFFFFFFFF


def _exhaustive(n: int, k: int, r: int, settings: Settings):
    if not settings.exhaustive or binom(n, r) > settings.limits.max_edges:
        return None
    return exhaustive_extremal(n, k, r, settings.limits)


def _maximal_instances(n, k, r, settings) -> tuple[list[tuple[str, Hypergraph]], CellResult | None, dict]:
    """Suite members, each confirmed vertex-k-maximal; a violation short-circuits."""
    suite = instance_suite(n, k, r, settings)
    for name, h in suite:
        rep = is_vertex_k_maximal(h, k)
        if not rep.is_maximal:
            return suite, CellResult(n, k, r, "violated", f"{name} is {rep.verdict}", witness=dumps_hg(h)), {}
    extra: dict = {}
    ex = None
    try:
        ex = _exhaustive(n, k, r, settings)
    except BudgetExceeded:
        ex = None
    if ex is not None:
        extra = {
            "exhaustive_complete": ex.complete,
            "exhaustive_count": ex.count_maximal,
            "exhaustive_min": ex.min_size,
            "exhaustive_max": ex.max_size,
        }
        suite = suite + [(f"exhaustive-{i}", h) for i, h in enumerate(ex.maximal)]
        if not ex.complete:
            extra["exhaustive_note"] = "budget exhausted, partial"
    return suite, None, extra


def _size_claim(
    claim_id: str, n: int, k: int, r: int, settings: Settings, ok: Callable[[int], bool], target: str
) -> CellResult:
    suite, fail, extra = _maximal_instances(n, k, r, settings)
    if fail is not None:
        return fail
    sizes = sorted({h.m for _, h in suite})
    details = {"target": target, "sizes": sizes, "instances": len(suite), **extra}
    for name, h in suite:
        if not ok(h.m):
            return CellResult(n, k, r, "violated", f"{name} has {h.m} edges", details, dumps_hg(h))
    return CellResult(n, k, r, "verified", None, details)


# -- checkers ----------------------------------------------------------------


def _check_lemma21(n, k, r, settings):
    details = {"instances": 0}
    for name, h in instance_suite(n, k, r, settings):
        rep = is_vertex_k_maximal(h, k)
        res = verify_lemma_2_1(h, k, rep)
        details["instances"] += 1
        if not res.passed:
            return CellResult(n, k, r, "violated", f"{name}: {res.reason or res.values}", details, dumps_hg(h))
    return CellResult(n, k, r, "verified", None, details)


def _check_lemma23(n, k, r, settings):
    details = {"instances": 0, "crossing": []}
    for name, h in instance_suite(n, k, r, settings):
        rep = is_vertex_k_maximal(h, k)
        res = verify_lemma_2_3(h, k, rep)
        details["instances"] += 1
        details["crossing"].append(res.values.get("crossing"))
        if not res.passed:
            return CellResult(n, k, r, "violated", f"{name}: {res.reason or res.values}", details, dumps_hg(h))
    return CellResult(n, k, r, "verified", None, details)


def _check_lemma31(n, k, r, settings):
    h = h_l(n, k, r)
    rep = is_vertex_k_maximal(h, k)
    want = binom(n, r) - binom(n - k, r)
    details = {"size": h.m, "formula": want, "verdict": rep.verdict}
    if rep.is_maximal and h.m == want:
        return CellResult(n, k, r, "verified", None, details)
    return CellResult(n, k, r, "violated", "h_l not maximal or size mismatch", details, dumps_hg(h))


def _check_lemma41(n, k, r, settings):
    h = h_u(n, k, r)
    rep = is_vertex_k_maximal(h, k)
    cu = conjectured_upper(n, k, r)
    eq = Fraction(h.m) == cu
    details = {"size": h.m, "conj_upper": str(cu), "verdict": rep.verdict, "equal": eq}
    ok = rep.is_maximal and h.m <= cu and (eq or n % k != 0)
    if ok:
        return CellResult(n, k, r, "verified", None, details)
    return CellResult(n, k, r, "violated", "h_u not maximal or size relation fails", details, dumps_hg(h))


def _check_thm32(n, k, r, settings):
    lo = lower_bound(n, k, r)
    res = _size_claim("thm3.2", n, k, r, settings, lambda m: m >= lo, f">= {lo}")
    if res.status == "verified" and res.details.get("exhaustive_complete"):
        if res.details["exhaustive_min"] != lo:
            return CellResult(n, k, r, "violated", "exhaustive minimum differs from the bound", res.details)
    return res


def _check_cor33(n, k, r, settings):
    closed = (n - k) * k + k * (k - 1) // 2
    if lower_bound(n, k, 2) != closed:
        return CellResult(n, k, r, "violated", "closed form mismatch", {"closed": closed})
    return _size_claim("cor3.3", n, k, r, settings, lambda m: m >= closed, f">= {closed}")


def _check_thm42(n, k, r, settings):
    cu = conjectured_upper(n, k, r)
    return _size_claim("thm4.2", n, k, r, settings, lambda m: m <= cu, f"<= {cu}")


def _check_cor43(n, k, r, settings):
    lo = lower_bound(n, k, r)
    return _size_claim("cor4.3", n, k, r, settings, lambda m: m == lo, f"== {lo}")


def _check_conj2(n, k, r, settings):
    cu = conjectured_upper(n, k, r)
    res = _size_claim("conj2", n, k, r, settings, lambda m: m <= cu, f"<= {cu}")
    details = dict(res.details)
    details["observed_max"] = max(details.get("sizes", [0]) or [0])
    details["conj_upper"] = str(cu)
    return CellResult(res.n, res.k, res.r, res.status, res.reason, details, res.witness)


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim(
            "lemma2.1",
            "vertex-k-maximal with n >= k+r-1 implies kappa = kappa_bar = k",
            lambda n, k, r: _need(k >= 2 and r >= 2 and n >= k + r - 1, "needs n >= k+r-1"),
            _check_lemma21,
        ),
        Claim(
            "lemma2.3",
            "separation triple: no missing edge meets side1, S, side2; crossing count formula",
            lambda n, k, r: _need(k >= 2 and r >= 2 and n >= k + r, "needs n >= k+r"),
            _check_lemma23,
        ),
        Claim(
            "lemma3.1",
            "h_l(n;k,r) is vertex-k-maximal with C(n,r)-C(n-k,r) edges",
            lambda n, k, r: _need(k >= 2 and r >= 2 and n >= k + 1, "needs n >= k+1"),
            _check_lemma31,
        ),
        Claim(
            "thm3.2",
            "every vertex-k-maximal hypergraph has >= C(n,r)-C(n-k,r) edges (tight)",
            lambda n, k, r: _need(k >= 2 and r >= 2 and n >= k + 1, "needs n >= k+1"),
            _check_thm32,
        ),
        Claim(
            "cor3.3",
            "graph case: >= (n-k)k + k(k-1)/2 edges",
            lambda n, k, r: _need(r == 2 and n >= k + 1 >= 3, "needs r = 2 and n >= k+1 >= 3"),
            _check_cor33,
        ),
        Claim(
            "lemma4.1",
            "h_u(n;k,r) is vertex-k-maximal, size <= C(n,r)-C(n-k,r)+(n/k-2)C(k,r), equal when k | n",
            lambda n, k, r: _need(k >= 2 and r >= 2 and n >= 2 * k, "needs n >= 2k"),
            _check_lemma41,
        ),
        Claim(
            "thm4.2",
            "k < r: every vertex-k-maximal hypergraph has <= C(n,r)-C(n-k,r) edges",
            lambda n, k, r: _need(2 <= k < r and n >= 2 * k, "needs k < r and n >= 2k"),
            _check_thm42,
        ),
        Claim(
            "cor4.3",
            "k < r: every vertex-k-maximal hypergraph has exactly C(n,r)-C(n-k,r) edges",
            lambda n, k, r: _need(2 <= k < r and n >= 2 * k, "needs k < r and n >= 2k"),
            _check_cor43,
        ),
        Claim(
            "conj2",
            "conjectured upper bound C(n,r)-C(n-k,r)+(n/k-2)C(k,r); observed only, never asserted",
            lambda n, k, r: _need(k >= r >= 2 and n >= k + 1, "reported for k >= r, n >= k+1"),
            _check_conj2,
            asserted=False,
        ),
    ]
}


def default_grid(claim_id: str, n_max: int, ks: Iterable[int], rs: Iterable[int], n_min: int = 2) -> list[Cell]:
    return [(n, k, r) for k in ks for r in rs for n in range(n_min, n_max + 1)]


def check_cell(claim_id: str, cell: Cell, settings: Settings) -> CellResult:
    claim = CLAIMS[claim_id]
    n, k, r = cell
    why = claim.hypothesis(n, k, r)
    if why is not None:
        return CellResult(n, k, r, "skipped", f"outside hypothesis: {why}")
    try:
        return claim.check(n, k, r, settings)
    except BudgetExceeded as exc:
        return CellResult(n, k, r, "skipped", f"budget: {exc}")


def _cell_job(args: tuple[str, Cell, Settings]) -> CellResult:
    return check_cell(*args)


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    asserted: bool
    seed: int
    cells: tuple[CellResult, ...]

    @property
    def counts(self) -> dict[str, int]:
        out = {"verified": 0, "violated": 0, "skipped": 0}
        for c in self.cells:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return not self.asserted or self.counts["violated"] == 0

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "summary": CLAIMS[self.claim].summary,
            "asserted": self.asserted,
            "seed": self.seed,
            "counts": self.counts,
            "cells": [c.to_dict() for c in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "n", "k", "r", "status", "reason"])
        for c in self.cells:
            w.writerow([self.claim, c.n, c.k, c.r, c.status, c.reason or ""])
        return buf.getvalue()


def verify_claim(
    claim_id: str, grid: Iterable[Cell], settings: Settings = Settings(), workers: int = 1
) -> ClaimReport:
    """Run one claim's checker over every grid cell, in grid order."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; choose from {sorted(CLAIMS)}")
    cells = list(grid)
    jobs = [(claim_id, c, settings) for c in cells]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = tuple(pool.map(_cell_job, jobs))
    else:
        results = tuple(_cell_job(j) for j in jobs)
    return ClaimReport(claim_id, CLAIMS[claim_id].asserted, settings.seed, results)


def recheck_witness(claim_id: str, cell: CellResult) -> bool:
    """True when the serialized witness of a violated cell fails the claim again on its own."""
    if cell.witness is None:
        return False
    h = loads_hg(cell.witness)
    n, k, r = cell.n, cell.k, cell.r
    rep = is_vertex_k_maximal(h, k)
    if not rep.is_maximal:
        return True
    if claim_id == "lemma2.1":
        return not verify_lemma_2_1(h, k, rep).passed
    if claim_id == "lemma2.3":
        return not verify_lemma_2_3(h, k, rep).passed
    lo = lower_bound(n, k, r)
    cu = conjectured_upper(n, k, r)
    if claim_id in ("thm3.2", "cor3.3", "lemma3.1"):
        return h.m < lo or (claim_id == "lemma3.1" and h.m != lo)
    if claim_id == "cor4.3":
        return h.m != lo
    return h.m > cu


def write_run(report: ClaimReport, out_dir: str | Path, stamp: str | None = None) -> Path:
    """Write report.json, report.csv and witness .hg files into a fresh run directory."""
    stamp = stamp or datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
    run = Path(out_dir) / f"{report.claim}_{stamp}_{report.seed}"
    run.mkdir(parents=True, exist_ok=False)
    (run / "report.json").write_text(report.to_json())
    (run / "report.csv").write_text(report.to_csv())
    for c in report.cells:
        if c.witness is not None:
            (run / f"witness_n{c.n}_k{c.k}_r{c.r}.hg").write_text(c.witness)
    return run
