"""Command-line front end.

Exit codes: 0 when a result was computed (found or not), 1 when a
differential campaign finds a mismatch, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .core import ProblemInstance
from .oracle import brute_force_solve
from .solver import solve, solve_full

ORACLE_MAX_N = 4096
DUMP_MAX_CELLS = 10**7


class UsageError(Exception):
    pass


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def add_sequence_args(parser: argparse.ArgumentParser) -> None:
    for name in ("x", "y", "p"):
        grp = parser.add_mutually_exclusive_group()
        grp.add_argument(f"--{name}", metavar="TEXT", help=f"{name.upper()} as UTF-8 text")
        grp.add_argument(f"--{name}-file", metavar="PATH", help=f"read {name.upper()} as raw bytes")
        grp.add_argument(f"--{name}-hex", metavar="HEX", help=f"{name.upper()} as hex")
    parser.add_argument(
        "--keep-trailing-newline", action="store_true",
        help="do not strip one trailing LF from --*-file inputs",
    )


def read_sequence(args, name: str, required: bool) -> bytes:
    text = getattr(args, name)
    path = getattr(args, f"{name}_file")
    hexed = getattr(args, f"{name}_hex")
    if text is not None:
        return text.encode("utf-8", "surrogateescape")
    if hexed is not None:
        try:
            return bytes.fromhex(hexed)
        except ValueError as exc:
            raise UsageError(f"--{name}-hex: {exc}") from None
    if path is not None:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"--{name}-file: {exc}") from None
        if not args.keep_trailing_newline and data.endswith(b"\n"):
            data = data[:-1]
        return data
    if required:
        raise UsageError(f"one of --{name}, --{name}-file, --{name}-hex is required")
    return b""


def read_instance(args) -> ProblemInstance:
    return ProblemInstance(
        read_sequence(args, "x", True),
        read_sequence(args, "y", True),
        read_sequence(args, "p", False),
    )


def print_result(res, plain: bool) -> None:
    if plain:
        if res.found:
            sys.stdout.buffer.write(res.match)
            sys.stdout.flush()
        else:
            print("no feasible string", file=sys.stderr)
        return
    emit(res.to_json())


def cmd_solve(args) -> int:
    print_result(solve(read_instance(args)), args.plain)
    return 0


def cmd_oracle(args) -> int:
    inst = read_instance(args)
    if inst.n > ORACLE_MAX_N:
        raise UsageError(f"oracle refuses n={inst.n} > {ORACLE_MAX_N}")
    print_result(brute_force_solve(inst), args.plain)
    return 0


def cmd_dump(args) -> int:
    inst = read_instance(args)
    if inst.cells > DUMP_MAX_CELLS:
        raise UsageError(f"table would have {inst.cells} cells (limit {DUMP_MAX_CELLS})")
    table, _ = solve_full(inst)
    emit({"m": inst.m, "n": inst.n, "r": inst.r, "layers": table.layers()})
    return 0


def cmd_diff(args) -> int:
    report = harness.run_differential(
        args.count, (args.max_m, args.max_n, args.max_r), args.seed, args.alphabet,
    )
    for mm in report.mismatches:
        emit(mm.to_json())
    print(
        f"{report.total} instances, {len(report.mismatches)} mismatches, "
        f"{report.tables_checked} tables checked, {report.elapsed:.2f}s "
        f"(seed {args.seed}, {report.prng})",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


def cmd_gen(args) -> int:
    try:
        spec = harness.GenSpec(args.seed, args.m, args.n, args.r, args.alphabet, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    inst = harness.gen_instance(spec)
    emit({
        "x_hex": inst.x.hex(), "y_hex": inst.y.hex(), "p_hex": inst.p.hex(),
        "spec": spec.to_json(), "prng": harness.PRNG,
    })
    return 0


def parse_grid(items: list[str]) -> list[tuple[int, int, int]]:
    grid = []
    for item in items:
        for point in item.split(","):
            try:
                m, n, r = (int(v) for v in point.lower().split("x"))
            except ValueError:
                raise UsageError(f"bad grid point {point!r}, expected MxNxR") from None
            if min(m, n, r) < 0 or r > min(m, n):
                raise UsageError(f"grid point {point!r} needs 0 <= r <= min(m, n)")
            grid.append((m, n, r))
    return grid


def cmd_bench(args) -> int:
    grid = parse_grid(args.grid)
    rows = harness.run_bench(grid, args.reps, args.seed, args.alphabet)
    for row in rows:
        emit(row.to_json())
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    return 0


def non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def alphabet_size(text: str) -> int:
    v = int(text)
    if not 1 <= v <= 26:
        raise argparse.ArgumentTypeError(f"must be in 1..26, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="clcs",
        description="Longest subsequence of X that is a substring of Y and contains P.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("solve", cmd_solve, "run the dynamic program"),
        ("oracle", cmd_oracle, "run the brute-force reference"),
    ):
        sp = sub.add_parser(name, help=help_)
        add_sequence_args(sp)
        sp.add_argument("--plain", action="store_true", help="print only the match bytes")
        sp.set_defaults(func=func)

    sp = sub.add_parser("dump", help="print the full DP table as JSON")
    add_sequence_args(sp)
    sp.set_defaults(func=cmd_dump)

    sp = sub.add_parser("diff", help="differential campaign against the oracle")
    sp.add_argument("--count", type=non_negative, default=1000)
    sp.add_argument("--max-m", type=non_negative, default=10)
    sp.add_argument("--max-n", type=non_negative, default=10)
    sp.add_argument("--max-r", type=non_negative, default=3)
    sp.add_argument("--alphabet", type=alphabet_size, default=4, help="largest alphabet size")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_diff)

    sp = sub.add_parser("gen", help="generate one instance")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--m", type=non_negative, required=True)
    sp.add_argument("--n", type=non_negative, required=True)
    sp.add_argument("--r", type=non_negative, default=0)
    sp.add_argument("--alphabet", type=alphabet_size, default=2)
    sp.add_argument("--mode", choices=harness.MODES, default="uniform")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time solve over a size grid")
    sp.add_argument("--grid", action="append", required=True, metavar="MxNxR[,MxNxR...]")
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--alphabet", type=alphabet_size, default=4)
    sp.add_argument("--plot", metavar="PATH", help="also render a scaling figure")
    sp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "reps", 1) < 1:
        parser.error("--reps must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"clcs {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
