"""Closed-form size bounds for vertex-k-maximal r-uniform hypergraphs.

Everything here is exact: integers are Python ints and the two quantities
that are not integral in general are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "binom",
    "lower_bound",
    "conjectured_upper",
    "hl_size",
    "hu_size",
    "hu_decomposition",
    "gnk_bound",
    "BoundsRecord",
    "bounds_record",
    "bounds_grid",
    "bounds_csv",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever k > n or an argument is negative."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def lower_bound(n: int, k: int, r: int) -> int:
    """Minimum size of a vertex-k-maximal r-uniform hypergraph on n vertices."""
    _check(k >= 2 and r >= 2, f"need k, r >= 2 (got k={k}, r={r})")
    _check(n >= k + 1, f"need n >= k + 1 (got n={n}, k={k})")
    return binom(n, r) - binom(n - k, r)


def conjectured_upper(n: int, k: int, r: int) -> Fraction:
    """``C(n,r) - C(n-k,r) + (n/k - 2) C(k,r)`` with n/k kept exact."""
    _check(k >= 2 and r >= 2, f"need k, r >= 2 (got k={k}, r={r})")
    _check(n >= 0, "n must be non-negative")
    return Fraction(binom(n, r) - binom(n - k, r)) + (Fraction(n, k) - 2) * binom(k, r)


def hl_size(n: int, k: int, r: int) -> int:
    """Edge count of the lower-bound family ``h_l(n; k, r)``."""
    return lower_bound(n, k, r)


def hu_decomposition(n: int, k: int) -> tuple[int, int]:
    """Return ``(p, q)`` with ``n = p*k + q`` and ``1 <= q <= k``."""
    _check(k >= 1, "k must be positive")
    p, q = divmod(n, k)
    if q == 0:
        p, q = p - 1, k
    return p, q


def hu_size(n: int, k: int, r: int) -> int:
    """Edge count of the upper-bound family ``h_u(n; k, r)``.

    The hub of k vertices is edgeless; the rest is p-1 copies of K_k^r plus
    one K_q^r, and every r-set meeting both the hub and the rest is present.
    """
    _check(k >= 2 and r >= 2, f"need k, r >= 2 (got k={k}, r={r})")
    _check(n >= 2 * k, f"need n >= 2k (got n={n}, k={k})")
    p, q = hu_decomposition(n, k)
    return binom(n, r) - binom(n - k, r) + (p - 2) * binom(k, r) + binom(q, r)


def gnk_bound(n: int, k: int) -> Fraction:
    """Graph-case size formula ``(3/2)(k - 1/3)(n - k)``."""
    return Fraction(3, 2) * (k - Fraction(1, 3)) * (n - k)


@dataclass(frozen=True)
class BoundsRecord:
    n: int
    k: int
    r: int
    lower: int
    hl_size: int
    hu_size: int | None
    conj_upper: Fraction
    gnk_bound: Fraction | None

    @property
    def divides(self) -> bool:
        return self.n % self.k == 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "lower": self.lower,
            "hl": self.hl_size,
            "hu": self.hu_size,
            "conj_upper": str(self.conj_upper),
            "divides": self.divides,
        }

    def as_row(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "k": str(self.k),
            "r": str(self.r),
            "lower": str(self.lower),
            "hl": str(self.hl_size),
            "hu": "" if self.hu_size is None else str(self.hu_size),
            "conj_upper": str(self.conj_upper),
            "divides": "1" if self.divides else "0",
        }


def bounds_record(n: int, k: int, r: int) -> BoundsRecord:
    lo = lower_bound(n, k, r)
    return BoundsRecord(
        n=n,
        k=k,
        r=r,
        lower=lo,
        hl_size=hl_size(n, k, r),
        hu_size=hu_size(n, k, r) if n >= 2 * k else None,
        conj_upper=conjectured_upper(n, k, r),
        gnk_bound=gnk_bound(n, k) if r == 2 else None,
    )


def bounds_grid(ns: Iterable[int], k: int, r: int) -> list[BoundsRecord]:
    return [bounds_record(n, k, r) for n in ns if n >= k + 1]


CSV_COLUMNS = ["n", "k", "r", "lower", "hl", "hu", "conj_upper", "divides"]


def bounds_csv(records: Iterable[BoundsRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.as_row())
    return buf.getvalue()
