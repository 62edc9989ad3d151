"""Shared domain types and elementary string predicates.

Sequences are plain ``bytes``: every symbol is one 8-bit code unit.  A DP
cell holds either ``NONE`` (no feasible string) or a non-negative length.
``NONE`` is spelled ``None`` on the Python side and ``-1`` inside integer
tables; the two encodings never mix in arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

CellValue = Optional[int]
NONE: CellValue = None

# Integer encoding of NONE inside numpy tables.
NONE_CODE = -1

BytesLike = Union[bytes, bytearray, memoryview, str]

__all__ = [
    "CellValue",
    "NONE",
    "NONE_CODE",
    "ProblemInstance",
    "DpTable",
    "MatchResult",
    "as_bytes",
    "bump",
    "cell_order",
    "cell_max",
    "is_subsequence",
    "is_substring_at",
]


def as_bytes(s: BytesLike) -> bytes:
    """Coerce ``s`` to bytes; text is encoded as UTF-8."""
    if isinstance(s, str):
        return s.encode("utf-8")
    return bytes(s)


def bump(v: CellValue) -> CellValue:
    """Saturating successor: ``NONE`` stays ``NONE``."""
    return None if v is None else v + 1


def cell_order(left: CellValue, right: CellValue) -> int:
    """Three-way compare with ``NONE`` below every length.

    Returns -1, 0 or 1 like a classic ``cmp``.
    """
    a = -1 if left is None else left
    b = -1 if right is None else right
    return (a > b) - (a < b)


def cell_max(*values: CellValue) -> CellValue:
    best: CellValue = None
    for v in values:
        if cell_order(v, best) > 0:
            best = v
    return best


def is_subsequence(a: bytes, b: bytes) -> bool:
    """True iff ``a`` can be obtained from ``b`` by deleting units."""
    if len(a) > len(b):
        return False
    pos = 0
    for unit in b:
        if pos == len(a):
            break
        if a[pos] == unit:
            pos += 1
    return pos == len(a)


def is_substring_at(needle: bytes, hay: bytes, start: int) -> bool:
    if start < 0 or start > len(hay):
        raise ValueError(f"start {start} outside [0, {len(hay)}]")
    end = start + len(needle)
    return end <= len(hay) and hay[start:end] == needle


@dataclass(frozen=True)
class ProblemInstance:
    """The triple (X, Y, P).  Text arguments are stored as their UTF-8 bytes."""

    x: bytes
    y: bytes
    p: bytes = b""

    def __post_init__(self) -> None:
        for name in ("x", "y", "p"):
            object.__setattr__(self, name, as_bytes(getattr(self, name)))

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.y)

    @property
    def r(self) -> int:
        return len(self.p)

    @property
    def cells(self) -> int:
        return (self.m + 1) * (self.n + 1) * (self.r + 1)


@dataclass(frozen=True)
class MatchResult:
    """Answer to one instance.

    ``start``/``end`` are a 0-based half-open span into Y.  All fields other
    than ``found`` are ``None`` when no feasible string exists.
    """

    found: bool
    length: Optional[int] = None
    start: Optional[int] = None
    end: Optional[int] = None
    match: Optional[bytes] = None

    @classmethod
    def not_found(cls) -> "MatchResult":
        return cls(False)

    @classmethod
    def from_span(cls, y: bytes, end: int, length: int) -> "MatchResult":
        start = end - length
        return cls(True, length, start, end, bytes(y[start:end]))

    def key(self) -> tuple:
        """Fields compared between solvers."""
        return (self.found, self.length, self.start, self.end)

    def to_json(self) -> dict:
        if not self.found:
            return {"found": False}
        out = {"found": True, "length": self.length, "start": self.start, "end": self.end}
        try:
            out["match"] = self.match.decode("utf-8")
        except UnicodeDecodeError:
            pass
        out["match_hex"] = self.match.hex()
        return out


@dataclass(frozen=True, eq=False)
class DpTable:
    """Read-only (m+1) x (n+1) x (r+1) table of cell values.

    ``codes`` holds the integer encoding (``NONE_CODE`` for NONE); indexing
    the table itself yields ``CellValue``.
    """

    codes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.codes, dtype=np.int32, copy=True)
        if arr.ndim != 3:
            raise ValueError("DpTable needs a 3-d array")
        arr.setflags(write=False)
        object.__setattr__(self, "codes", arr)

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(self.codes.shape)

    def __getitem__(self, idx: tuple[int, int, int]) -> CellValue:
        v = int(self.codes[idx])
        return None if v < 0 else v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DpTable):
            return NotImplemented
        return self.dims == other.dims and bool(np.array_equal(self.codes, other.codes))

    __hash__ = None

    def final_row(self) -> list[CellValue]:
        """``M[m][j][r]`` for every j."""
        return [None if v < 0 else int(v) for v in self.codes[-1, :, -1]]

    def layers(self) -> list:
        """Nested lists indexed ``[k][i][j]`` with NONE as ``None``."""
        m1, n1, r1 = self.dims
        return [
            [[self[i, j, k] for j in range(n1)] for i in range(m1)]
            for k in range(r1)
        ]

    def diff(self, other: "DpTable") -> list[tuple[int, int, int]]:
        """Indices where the two tables disagree."""
        if self.dims != other.dims:
            raise ValueError(f"shape mismatch {self.dims} vs {other.dims}")
        return [tuple(int(t) for t in ix) for ix in np.argwhere(self.codes != other.codes)]
