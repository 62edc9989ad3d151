"""Longest string that is a subsequence of X, a substring of Y and has P as a
subsequence, with a brute-force oracle and test harness."""

from .core import (
    NONE,
    CellValue,
    DpTable,
    MatchResult,
    ProblemInstance,
    bump,
    cell_order,
    is_subsequence,
    is_substring_at,
)
from .oracle import brute_force_solve, brute_force_table, validate
from .solver import SliceBuffer, cell_recurrence, extract_solution, k0_cell, lcs_seq_sstr, solve, solve_full

__all__ = [
    "NONE",
    "CellValue",
    "DpTable",
    "MatchResult",
    "ProblemInstance",
    "SliceBuffer",
    "brute_force_solve",
    "brute_force_table",
    "bump",
    "cell_order",
    "cell_recurrence",
    "extract_solution",
    "is_subsequence",
    "is_substring_at",
    "k0_cell",
    "lcs_seq_sstr",
    "solve",
    "solve_full",
    "validate",
]
