"""Exhaustive theorem checks over finite rings."""

from .checks import CHECK_ORDER, CHECKS, HarnessConfig, make_context, replay, run_all, run_check
from .context import CachedContext, Context
from .report import BranchReport, PropertyReport, dumps_record, summary_table

__all__ = [
    "CHECK_ORDER",
    "CHECKS",
    "BranchReport",
    "CachedContext",
    "Context",
    "HarnessConfig",
    "PropertyReport",
    "dumps_record",
    "make_context",
    "replay",
    "run_all",
    "run_check",
    "summary_table",
]
