"""Command-line interface.

Subcommands:

* ``table``  -- count tables for one board or a range of board lengths
* ``square`` -- count tables for square boards up to a given size
* ``gf``     -- closed-form generating function for fixed board height
* ``verify`` -- run the identity and conjecture cross-checks
* ``cas``    -- emit the transfer system as a solve-and-print script

Exit codes: 0 on success, 1 when a verification check fails, 2 for usage
errors and for boards that exceed a configured cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .engine import DEFAULT_STATE_CAP, StateCapExceeded, enumerate_states
from .gfun import (
    DEFAULT_DIM_CAP,
    DimensionCapExceeded,
    build_matrix,
    emit_cas_script,
    generating_function,
    parse_cas_script,
)
from .identities import run_verification
from .oracle import DEFAULT_CELL_CAP, BoardTooLarge
from .series import count_table, paper_line, square_table, table_record, tables_to_csv


@dataclass(frozen=True)
class RunConfig:
    """Caps shared by the subcommands, filled from the parsed arguments."""

    state_cap: int = DEFAULT_STATE_CAP
    dim_cap: int = DEFAULT_DIM_CAP
    cell_cap: int = DEFAULT_CELL_CAP

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            state_cap=getattr(args, "state_cap", DEFAULT_STATE_CAP),
            dim_cap=getattr(args, "gf_cap", DEFAULT_DIM_CAP),
            cell_cap=getattr(args, "oracle_cap", DEFAULT_CELL_CAP),
        )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render_tables(tables, fmt: str) -> str:
    if fmt == "paper":
        return "\n".join(paper_line(t) for t in tables) + "\n"
    if fmt == "csv":
        return tables_to_csv(tables)
    return json.dumps([table_record(t) for t in tables], indent=2) + "\n"


def cmd_table(args) -> int:
    cfg = RunConfig.from_args(args)
    if (args.m is None) == (args.m_max is None):
        raise UsageError("exactly one of --m or --m-max is required")
    if args.m is not None:
        tables = [count_table(args.s, args.n, args.m, cfg.state_cap)]
    else:
        tables = [
            count_table(args.s, args.n, m, cfg.state_cap)
            for m in range(args.m_max + 1)
        ]
    _emit(_render_tables(tables, args.format), args.out)
    return 0


def cmd_square(args) -> int:
    cfg = RunConfig.from_args(args)
    tables = square_table(args.s, args.size_max, cfg.state_cap)
    _emit(_render_tables(tables, args.format), args.out)
    return 0


def cmd_gf(args) -> int:
    cfg = RunConfig.from_args(args)
    graph = enumerate_states(args.s, args.n, cfg.state_cap)
    ratio = generating_function(build_matrix(graph), cfg.dim_cap)
    lines = [ratio.render()]
    if args.row_sums:
        lines.append(ratio.substitute_t(1).render())
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig.from_args(args)
    reports = run_verification(
        s_max=args.s_max,
        n_max=args.n_max,
        m_max=args.m_max,
        state_cap=cfg.state_cap,
        oracle_cell_cap=args.oracle_cap if args.oracle_cap > 0 else None,
    )
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "passed": ok,
            "reports": [r.to_json_dict() for r in reports],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [r.render_text() for r in reports]
        total = sum(sum(1 for c in r.checks if not c.informational) for r in reports)
        verdict = "all passed" if ok else "FAILURES above"
        lines.append(f"{total} enforced checks: {verdict}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_cas(args) -> int:
    cfg = RunConfig.from_args(args)
    graph = enumerate_states(args.s, args.n, cfg.state_cap)
    mat = build_matrix(graph)
    script = emit_cas_script(mat)
    _emit(script, args.out)
    if args.check:
        reparsed = parse_cas_script(script)
        same_system = reparsed.dim == mat.dim and reparsed.entries == mat.entries
        same_gf = generating_function(reparsed, cfg.dim_cap) == generating_function(
            mat, cfg.dim_cap
        )
        if not (same_system and same_gf):
            print("cas round-trip mismatch", file=sys.stderr)
            return 1
        print("cas round-trip ok", file=sys.stderr)
    return 0


class UsageError(Exception):
    pass


def _add_cap_args(sub, *, state=True, gf=False, oracle=False):
    if state:
        sub.add_argument(
            "--state-cap", type=int, default=DEFAULT_STATE_CAP, metavar="N",
            help="abort if the transfer graph needs more states than this",
        )
    if gf:
        sub.add_argument(
            "--gf-cap", type=int, default=DEFAULT_DIM_CAP, metavar="N",
            help="abort if the linear system is larger than this",
        )
    if oracle:
        sub.add_argument(
            "--oracle-cap", type=int, default=DEFAULT_CELL_CAP, metavar="CELLS",
            help="largest board, in cells, recounted by the exhaustive "
            "oracle (0 disables the oracle cross-checks)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqtilings",
        description="Exact counts of s x s square plus monomer tilings of "
        "n x m boards, as tables and as generating functions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("table", help="count tables for one board height")
    p.add_argument("--s", type=int, required=True, help="square side length")
    p.add_argument("--n", type=int, required=True, help="board height")
    p.add_argument("--m", type=int, help="board length")
    p.add_argument("--m-max", type=int, help="emit all lengths 0..M", metavar="M")
    p.add_argument("--format", choices=["paper", "csv", "json"], default="paper")
    p.add_argument("--out", help="write to this file instead of stdout")
    _add_cap_args(p)
    p.set_defaults(func=cmd_table)

    p = subs.add_parser("square", help="count tables for square boards")
    p.add_argument("--s", type=int, required=True, help="square side length")
    p.add_argument("--size-max", type=int, required=True, metavar="N",
                   help="largest board size, runs 1x1 up to NxN")
    p.add_argument("--format", choices=["paper", "csv", "json"], default="paper")
    p.add_argument("--out", help="write to this file instead of stdout")
    _add_cap_args(p)
    p.set_defaults(func=cmd_square)

    p = subs.add_parser("gf", help="closed-form generating function")
    p.add_argument("--s", type=int, required=True, help="square side length")
    p.add_argument("--n", type=int, required=True, help="board height")
    p.add_argument("--row-sums", action="store_true",
                   help="also print the t=1 specialization")
    p.add_argument("--out", help="write to this file instead of stdout")
    _add_cap_args(p, gf=True)
    p.set_defaults(func=cmd_gf)

    p = subs.add_parser("verify", help="run identity and conjecture checks")
    p.add_argument("--s-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write to this file instead of stdout")
    _add_cap_args(p, oracle=True)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("cas", help="emit the transfer system as a script")
    p.add_argument("--s", type=int, required=True, help="square side length")
    p.add_argument("--n", type=int, required=True, help="board height")
    p.add_argument("--check", action="store_true",
                   help="parse the emitted script back and re-solve it")
    p.add_argument("--out", help="write to this file instead of stdout")
    _add_cap_args(p, gf=True)
    p.set_defaults(func=cmd_cas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StateCapExceeded, BoardTooLarge, DimensionCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
