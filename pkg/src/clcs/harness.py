"""Seeded instance generation, differential campaigns and timing runs."""

from __future__ import annotations

import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from .core import MatchResult, ProblemInstance
from .oracle import brute_force_solve, brute_force_table
from .solver import SliceBuffer, solve, solve_full

__all__ = [
    "PRNG",
    "MODES",
    "GenSpec",
    "Mismatch",
    "DiffReport",
    "BenchRow",
    "CASE5_INSTANCE",
    "gen_instance",
    "campaign_specs",
    "run_differential",
    "run_bench",
]

PRNG = "numpy.PCG64/SeedSequence"
MODES = ("uniform", "planted")
U64 = (1 << 64) - 1

# Table-level comparison is only affordable on tiny instances.
TABLE_CHECK_LIMIT = 8

# x_i != y_j with x_i == p_k at (i, j, k) = (3, 2, 1), yet Z = "ba" exists.
CASE5_INSTANCE = ProblemInstance(b"bab", b"ba", b"b")


@dataclass(frozen=True)
class GenSpec:
    seed: int
    m: int
    n: int
    r: int
    alphabet_size: int = 2
    mode: str = "uniform"

    def __post_init__(self) -> None:
        if min(self.m, self.n, self.r) < 0:
            raise ValueError(f"negative size in {self}")
        if not 1 <= self.alphabet_size <= 26:
            raise ValueError(f"alphabet_size must be in 1..26, got {self.alphabet_size}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "planted" and self.r > min(self.m, self.n):
            raise ValueError(f"cannot plant r={self.r} into m={self.m}, n={self.n}")

    @property
    def alphabet(self) -> bytes:
        return bytes(range(ord("a"), ord("a") + self.alphabet_size))

    def rng(self) -> np.random.Generator:
        entropy = [self.seed & U64, self.m, self.n, self.r, self.alphabet_size, MODES.index(self.mode)]
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))

    def to_json(self) -> dict:
        return asdict(self)


def gen_instance(spec: GenSpec) -> ProblemInstance:
    """Deterministic instance for ``spec``.

    ``planted`` embeds a witness containing P as a contiguous block of Y and
    as a scattered subsequence of X, so the instance is always feasible.
    """
    rng = spec.rng()
    alpha = np.frombuffer(spec.alphabet, dtype=np.uint8)

    def draw(size: int) -> np.ndarray:
        return alpha[rng.integers(0, len(alpha), size=size)]

    if spec.mode == "uniform":
        return ProblemInstance(draw(spec.m).tobytes(), draw(spec.n).tobytes(), draw(spec.r).tobytes())

    p = draw(spec.r)
    width = int(rng.integers(spec.r, min(spec.m, spec.n) + 1))
    # Witness: P with extra units at random positions.
    keep = np.zeros(width, dtype=bool)
    keep[rng.choice(width, size=spec.r, replace=False)] = True
    witness = draw(width)
    witness[keep] = p

    y = draw(spec.n)
    offset = int(rng.integers(0, spec.n - width + 1))
    y[offset:offset + width] = witness

    x = draw(spec.m)
    x[np.sort(rng.choice(spec.m, size=width, replace=False))] = witness
    return ProblemInstance(x.tobytes(), y.tobytes(), p.tobytes())


@dataclass
class Mismatch:
    index: int
    kind: str
    spec: Optional[GenSpec]
    instance: ProblemInstance
    solver: Optional[MatchResult] = None
    oracle: Optional[MatchResult] = None
    cells: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "kind": self.kind,
            "spec": self.spec.to_json() if self.spec else None,
            "x_hex": self.instance.x.hex(),
            "y_hex": self.instance.y.hex(),
            "p_hex": self.instance.p.hex(),
            "solver": self.solver.to_json() if self.solver else None,
            "oracle": self.oracle.to_json() if self.oracle else None,
            "cells": self.cells[:20],
        }


@dataclass
class DiffReport:
    total: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    elapsed: float = 0.0
    tables_checked: int = 0
    prng: str = PRNG

    @property
    def passed(self) -> bool:
        return not self.mismatches


def campaign_specs(count: int, max_m: int, max_n: int, max_r: int, max_alphabet: int, seed: int) -> list[GenSpec]:
    """Instance specs for a campaign, alternating uniform and planted."""
    if min(count, max_m, max_n, max_r) < 0:
        raise ValueError("count and size bounds must be non-negative")
    if not 1 <= max_alphabet <= 26:
        raise ValueError("alphabet size must be in 1..26")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & U64, 0xD1FF])))
    lo_alpha = min(2, max_alphabet)
    specs = []
    for idx in range(count):
        m = int(rng.integers(0, max_m + 1))
        n = int(rng.integers(0, max_n + 1))
        r = int(rng.integers(0, max_r + 1))
        a = int(rng.integers(lo_alpha, max_alphabet + 1))
        mode = MODES[idx % 2]
        if mode == "planted":
            r = min(r, m, n)
        specs.append(GenSpec(int(rng.integers(0, 1 << 63)), m, n, r, a, mode))
    return specs


def check_instance(index: int, spec: Optional[GenSpec], inst: ProblemInstance) -> tuple[list[Mismatch], bool]:
    """Compare the solvers with the oracles on one instance."""
    out = []
    rolled = solve(inst)
    table, full = solve_full(inst)
    ref = brute_force_solve(inst)
    if rolled.key() != ref.key():
        out.append(Mismatch(index, "solution", spec, inst, rolled, ref))
    if rolled != full:
        out.append(Mismatch(index, "rolling_vs_full", spec, inst, rolled, full))
    tabled = inst.m <= TABLE_CHECK_LIMIT and inst.n <= TABLE_CHECK_LIMIT
    if tabled:
        cells = table.diff(brute_force_table(inst))
        if cells:
            out.append(Mismatch(index, "table", spec, inst, cells=cells))
    return out, tabled


def run_differential(
    count: int,
    size_bounds: tuple[int, int, int] = (12, 12, 3),
    seed: int = 0,
    max_alphabet: int = 4,
    regressions: Iterable[ProblemInstance] = (),
) -> DiffReport:
    """Solver vs oracle on ``count`` generated instances.

    ``regressions`` run first and count towards ``total``.
    """
    t0 = time.perf_counter()
    report = DiffReport()
    jobs = [(None, inst) for inst in regressions]
    jobs += [(s, None) for s in campaign_specs(count, *size_bounds, max_alphabet, seed)]
    for index, (spec, inst) in enumerate(jobs):
        if inst is None:
            inst = gen_instance(spec)
        found, tabled = check_instance(index, spec, inst)
        report.mismatches.extend(found)
        report.tables_checked += tabled
        report.total += 1
    report.elapsed = time.perf_counter() - t0
    return report


@dataclass
class BenchRow:
    m: int
    n: int
    r: int
    repetitions: int
    samples: list[float]
    median_s: float
    buffer_cells: int
    table_cells: int
    found: bool
    length: Optional[int]
    seed: int
    prng: str = PRNG

    @property
    def ns_per_cell(self) -> float:
        return 1e9 * self.median_s / max(self.table_cells, 1)

    def to_json(self) -> dict:
        d = asdict(self)
        d["ns_per_cell"] = self.ns_per_cell
        return d


def run_bench(size_grid: Iterable[tuple[int, int, int]], repetitions: int = 3, seed: int = 0, alphabet_size: int = 4) -> list[BenchRow]:
    """Median wall time of :func:`solve` on one planted instance per grid point.

    Samples are taken round-robin over the grid so that slow drift in machine
    load spreads evenly across points instead of biasing their ratios.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    solve(CASE5_INSTANCE)  # JIT compile
    points = []
    for m, n, r in size_grid:
        inst = gen_instance(GenSpec(seed, m, n, r, alphabet_size, "planted"))
        buf = SliceBuffer.allocate(n, r)
        res = solve(inst, buf)  # untimed: faults in pages and caches
        points.append((inst, buf, res, []))
    for _ in range(repetitions):
        for inst, buf, _res, samples in points:
            t0 = time.perf_counter()
            solve(inst, buf)
            samples.append(time.perf_counter() - t0)
    return [
        BenchRow(
            inst.m, inst.n, inst.r, repetitions, samples, statistics.median(samples),
            buf.cells, inst.cells, res.found, res.length, seed,
        )
        for inst, buf, res, samples in points
    ]
