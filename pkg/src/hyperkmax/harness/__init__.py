"""Experiments: extremal searches and per-claim verification grids."""

from .claims import CLAIMS, CellResult, ClaimReport, Settings, check_cell, default_grid, verify_claim, write_run
from .search import BudgetExceeded, Limits, SearchResult, exhaustive_extremal, sample_saturations

__all__ = [
    "CLAIMS",
    "CellResult",
    "ClaimReport",
    "Settings",
    "check_cell",
    "default_grid",
    "verify_claim",
    "write_run",
    "BudgetExceeded",
    "Limits",
    "SearchResult",
    "exhaustive_extremal",
    "sample_saturations",
]
