"""Brute-force reference answers for differential testing.

Everything here works straight from the definitions by enumerating
substrings/suffixes of Y.  Nothing is shared with :mod:`clcs.solver`
except the predicates in :mod:`clcs.core`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    NONE_CODE,
    DpTable,
    MatchResult,
    ProblemInstance,
    is_subsequence,
    is_substring_at,
)

__all__ = ["brute_force_solve", "brute_force_table", "validate", "ValidationReport", "MAXIMALITY_LIMIT"]

# Largest n for which validate() also runs the brute-force maximality check.
MAXIMALITY_LIMIT = 64


def brute_force_solve(inst: ProblemInstance) -> MatchResult:
    """Longest feasible substring of Y; smallest end index wins ties.

    Costs O(n^2 (m + n)); keep n small.
    """
    x, y, p = inst.x, inst.y, inst.p
    best = None
    for end in range(inst.n + 1):
        for start in range(end + 1):
            length = end - start
            if best is not None and length <= best[1]:
                continue
            cand = y[start:end]
            if is_subsequence(cand, x) and is_subsequence(p, cand):
                best = (end, length)
    if best is None:
        return MatchResult.not_found()
    return MatchResult.from_span(y, *best)


def brute_force_table(inst: ProblemInstance) -> DpTable:
    """Every cell computed from its definition.

    Cell ``[i][j][k]`` is the longest suffix of ``Y[:j]`` that is a
    subsequence of ``X[:i]`` and contains ``P[:k]`` as a subsequence.
    """
    x, y, p = inst.x, inst.y, inst.p
    t = np.full((inst.m + 1, inst.n + 1, inst.r + 1), NONE_CODE, dtype=np.int32)
    for i in range(inst.m + 1):
        xi = x[:i]
        for j in range(inst.n + 1):
            for k in range(inst.r + 1):
                pk = p[:k]
                # Longest suffix first, so the first hit is the answer.
                for length in range(j, -1, -1):
                    s = y[j - length:j]
                    if is_subsequence(s, xi) and is_subsequence(pk, s):
                        t[i, j, k] = length
                        break
    return DpTable(t)


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def validate(inst: ProblemInstance, res: MatchResult) -> ValidationReport:
    """Check a claimed answer against the instance.

    A not-found result makes no claims, so only maximality can fail for it.
    Maximality is checked by brute force when ``n <= MAXIMALITY_LIMIT``.
    """
    rep = ValidationReport()
    if res.found:
        length, start, end = res.length, res.start, res.end
        span_ok = (
            None not in (length, start, end)
            and 0 <= start <= end <= inst.n
            and end - start == length
        )
        rep.checks["span"] = span_ok
        match = res.match if res.match is not None else (inst.y[start:end] if span_ok else b"")
        rep.checks["substring"] = span_ok and is_substring_at(match, inst.y, start)
        rep.checks["subsequence_of_x"] = is_subsequence(match, inst.x)
        rep.checks["contains_p"] = is_subsequence(inst.p, match)
    if inst.n <= MAXIMALITY_LIMIT:
        ref = brute_force_solve(inst)
        rep.checks["maximal"] = ref.found == res.found and ref.length == res.length
    return rep
