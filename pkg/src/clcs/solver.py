"""Dynamic program for the longest string that is a subsequence of X, a
substring of Y and contains P as a subsequence.

``M[i][j][k]`` is the length of the longest string that is a subsequence of
``X[:i]``, a suffix of ``Y[:j]`` and contains ``P[:k]`` as a subsequence, or
NONE when no such string exists.  Row ``i`` depends only on row ``i - 1``, so
``solve`` keeps two ``(n+1) x (r+1)`` planes while ``solve_full`` keeps
everything.

Recurrence for ``i, j, k >= 1``::

    x_i == y_j == p_k   ->  bump(M[i-1][j-1][k-1])
    x_i == y_j != p_k   ->  bump(M[i-1][j-1][k])
    x_i != y_j          ->  M[i-1][j][k]

The last line covers ``x_i == p_k`` too: a suffix of ``Y[:j]`` ends in
``y_j``, which cannot be matched to ``x_i``, so the whole string already
embeds in ``X[:i-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import (
    NONE_CODE,
    CellValue,
    DpTable,
    MatchResult,
    ProblemInstance,
    bump,
    cell_order,
)

__all__ = [
    "SliceBuffer",
    "k0_cell",
    "cell_recurrence",
    "solve_full",
    "solve",
    "extract_solution",
    "lcs_seq_sstr",
]


def k0_cell(xi_eq_yj: bool, diag: CellValue, up: CellValue) -> CellValue:
    """Cell of the unconstrained (k = 0) layer."""
    if diag is None or up is None:
        raise ValueError("the k = 0 layer never holds NONE")
    return bump(diag) if xi_eq_yj else up


def cell_recurrence(xi, yj, pk, diag_km1: CellValue, diag_k: CellValue, up_k: CellValue) -> CellValue:
    """One interior cell with ``k >= 1`` from its three predecessors."""
    if xi != yj:
        return up_k
    if yj == pk:
        return bump(diag_km1)
    return bump(diag_k)


@dataclass
class SliceBuffer:
    """Two i-slices of the table, each indexed ``[k][j]``.

    ``prev`` holds the last completed row.
    """

    prev: np.ndarray
    cur: np.ndarray

    @classmethod
    def allocate(cls, n: int, r: int) -> "SliceBuffer":
        return cls(
            np.empty((r + 1, n + 1), dtype=np.int32),
            np.empty((r + 1, n + 1), dtype=np.int32),
        )

    @property
    def cells(self) -> int:
        return self.prev.size + self.cur.size


def _units(s: bytes) -> np.ndarray:
    return np.frombuffer(s, dtype=np.uint8)


@njit(cache=True, inline="always")
def _inc(v):
    return v + 1 if v >= 0 else v


@njit(cache=True)
def _fill_full(x, y, p, t):
    m, n, r = x.shape[0], y.shape[0], p.shape[0]
    for i in range(m + 1):
        t[i, 0, 0] = 0
        for k in range(1, r + 1):
            t[i, 0, k] = -1
    for j in range(n + 1):
        t[0, j, 0] = 0
        for k in range(1, r + 1):
            t[0, j, k] = -1
    for i in range(1, m + 1):
        xi = x[i - 1]
        for j in range(1, n + 1):
            yj = y[j - 1]
            if xi == yj:
                t[i, j, 0] = t[i - 1, j - 1, 0] + 1
                for k in range(1, r + 1):
                    if yj == p[k - 1]:
                        t[i, j, k] = _inc(t[i - 1, j - 1, k - 1])
                    else:
                        t[i, j, k] = _inc(t[i - 1, j - 1, k])
            else:
                for k in range(r + 1):
                    t[i, j, k] = t[i - 1, j, k]


@njit(cache=True)
def _fill_rolling(x, y, p, prev, cur):
    # Planes are k-major, (r+1) x (n+1): the j loop is long and branch-free.
    m, n, r = x.shape[0], y.shape[0], p.shape[0]
    for k in range(r + 1):
        fill = 0 if k == 0 else -1
        for j in range(n + 1):
            prev[k, j] = fill
        cur[k, 0] = fill
    for i in range(1, m + 1):
        xi = x[i - 1]
        for j in range(1, n + 1):
            cur[0, j] = prev[0, j - 1] + 1 if xi == y[j - 1] else prev[0, j]
        for k in range(1, r + 1):
            pk = p[k - 1]
            for j in range(1, n + 1):
                yj = y[j - 1]
                if xi != yj:
                    cur[k, j] = prev[k, j]
                else:
                    src = prev[k - 1, j - 1] if yj == pk else prev[k, j - 1]
                    cur[k, j] = _inc(src)
        prev, cur = cur, prev
    # Number of swaps tells the caller which array holds row m.
    return m % 2


def extract_solution(final_row, y: bytes) -> MatchResult:
    """Pick the answer from ``M[m][j][r]``, smallest ``j`` on ties."""
    best: CellValue = None
    best_j = -1
    for j, v in enumerate(final_row):
        if v is not None and v < 0:
            v = None
        if cell_order(v, best) > 0:
            best, best_j = v, j
    if best is None:
        return MatchResult.not_found()
    return MatchResult.from_span(y, best_j, int(best))


def _extract_codes(row: np.ndarray, y: bytes) -> MatchResult:
    j = int(np.argmax(row))  # first maximum
    v = int(row[j])
    if v == NONE_CODE:
        return MatchResult.not_found()
    return MatchResult.from_span(y, j, v)


def solve_full(inst: ProblemInstance) -> tuple[DpTable, MatchResult]:
    """Fill the whole table and extract the answer from its last row."""
    t = np.empty((inst.m + 1, inst.n + 1, inst.r + 1), dtype=np.int32)
    _fill_full(_units(inst.x), _units(inst.y), _units(inst.p), t)
    return DpTable(t), _extract_codes(t[-1, :, -1], inst.y)


def solve(inst: ProblemInstance, buffer: SliceBuffer | None = None) -> MatchResult:
    """Same answer as :func:`solve_full` in ``O((n+1)(r+1))`` table space.

    A caller-supplied ``buffer`` is reused (and left holding row m in
    ``prev``), which lets benchmarks inspect its footprint.
    """
    if buffer is None:
        buffer = SliceBuffer.allocate(inst.n, inst.r)
    elif buffer.prev.shape != (inst.r + 1, inst.n + 1):
        raise ValueError(f"buffer shape {buffer.prev.shape} does not fit n={inst.n}, r={inst.r}")
    if _fill_rolling(_units(inst.x), _units(inst.y), _units(inst.p), buffer.prev, buffer.cur):
        buffer.prev, buffer.cur = buffer.cur, buffer.prev
    return _extract_codes(buffer.prev[-1], inst.y)


def lcs_seq_sstr(x: bytes, y: bytes) -> MatchResult:
    """Longest substring of ``y`` that is a subsequence of ``x``."""
    return solve(ProblemInstance(x, y, b""))
