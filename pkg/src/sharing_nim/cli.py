"""Command line front end.

One subcommand per job: position queries, table export, sequence dumps,
verification drivers, a figure-rendering report, and the HTTP server.
Server flags can also come from SHARING_NIM_* environment variables;
an explicit flag wins over the environment, which wins over the default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import (
    CHECKS,
    InsufficientPrefix,
    distribution_report,
    export_table,
    f_sequence,
    period_scan,
    verify_theorem,
)
from .core import (
    DomainError,
    Position,
    normalize,
    odd_part,
    outcome,
    two_adic_valuation,
    winning_moves,
)
from .oracle import OutOfRange, ResourceLimit, build_table, row_sequence

ENV_PREFIX = "SHARING_NIM_"

DEFAULT_PORT = 8000
DEFAULT_REPORT_MAX_B = 200


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _env_int(name: str, fallback: int) -> int:
    raw = _env(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(table_max_b=args.table_max_b, snapshot_path=args.snapshot)
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return 0


def cmd_status(args: argparse.Namespace) -> int:
    p = Position(args.a, args.b, args.c)
    out = outcome(p)
    A, B = normalize(p)
    payload = {
        "outcome": out.label,
        "terminal": out.terminal,
        "normalized": {"A": A, "B": B},
        "valuation": two_adic_valuation(B) if B >= 1 else None,
        "odd_part": odd_part(B) if B >= 1 else None,
        "winning_moves": [list(m) for m in winning_moves(p)],
    }
    print(json.dumps(payload))
    return 0


def cmd_grundy(args: argparse.Namespace) -> int:
    table = build_table(args.b)
    print(table.value(args.a, args.b))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    table = build_table(args.max_b)
    if args.out == "-":
        export_table(table, args.format, sys.stdout)
    else:
        export_table(table, args.format, args.out)
    return 0


def cmd_row(args: argparse.Namespace) -> int:
    table = build_table(args.a + args.count - 1)
    print(",".join(str(v) for v in row_sequence(args.a, args.a + args.count - 1, table)))
    return 0


def cmd_f_seq(args: argparse.Namespace) -> int:
    print(",".join(str(v) for v in f_sequence(args.max_n)))
    return 0


def cmd_period_scan(args: argparse.Namespace) -> int:
    seq = f_sequence(args.prefix_len - 1)
    result = period_scan(seq, args.max_pre, args.max_p)
    print(json.dumps(result.to_dict()))
    return 0


def cmd_distribution(args: argparse.Namespace) -> int:
    table = build_table(args.max_b)
    print(json.dumps(distribution_report(args.g, args.max_b, table).to_dict()))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = verify_theorem(args.check, args.bound)
    if report.passed:
        print(f"PASS {report.check} bound={report.bound}")
        return 0
    print(f"FAIL {report.check} bound={report.bound} counterexample={report.counterexample}")
    return 1


def _render_figures(out_dir: Path, table, fs: list[int]) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    written = []
    max_b = table.max_b

    grid = np.full((max_b + 1, max_b + 1), np.nan)
    for b in range(max_b + 1):
        grid[: b + 1, b] = table.row(b)
    fig, ax = plt.subplots(figsize=(7.5, 6))
    im = ax.imshow(grid, origin="lower", interpolation="nearest", cmap="viridis")
    fig.colorbar(im, ax=ax, label="nim-value")
    ax.set_xlabel("b")
    ax.set_ylabel("a")
    ax.set_title(f"Nim-values of reduced positions (0, a, b), b <= {max_b}")
    fig.tight_layout()
    path = out_dir / "heatmap.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(8, 3))
    ax.step(range(len(fs)), fs, where="mid", lw=0.8)
    ax.set_xlabel("n")
    ax.set_ylabel("f(n)")
    ax.set_yticks([0, 1])
    ax.set_title("Indicator of N-positions on the diagonal (0, n, 2n)")
    fig.tight_layout()
    path = out_dir / "f_sequence.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(8, 4))
    for a in (2, 6):
        if a <= max_b:
            count = max_b - a + 1
            vals = row_sequence(a, max_b, table)
            ax.plot(range(a, a + count), vals, lw=0.8, label=f"a={a}, max={max(vals)}")
    ax.set_xlabel("b")
    ax.set_ylabel("nim-value")
    ax.legend()
    ax.set_title("Row values stay bounded")
    fig.tight_layout()
    path = out_dir / "row_values.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    gs = list(range(2, 7))
    observed = [distribution_report(g, max_b, table).max_a_observed for g in gs]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(gs, observed, color="tab:blue", label="max a observed")
    ax.plot(gs, [2 * g - 1 for g in gs], "k--", marker="o", label="2g-1 bound")
    ax.set_xlabel("g")
    ax.set_ylabel("a")
    ax.set_xticks(gs)
    ax.legend()
    ax.set_title(f"Where value-g positions live (b <= {max_b})")
    fig.tight_layout()
    path = out_dir / "distribution.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    return written


def cmd_report(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    table = build_table(args.max_b)
    fs = f_sequence(args.max_b)

    written = []
    for fmt in ("csv", "json"):
        path = out_dir / f"table.{fmt}"
        export_table(table, fmt, path)
        written.append(path)

    path = out_dir / "f_sequence.csv"
    with open(path, "w", newline="") as fh:
        fh.write("n,f\r\n")
        for n, v in enumerate(fs):
            fh.write(f"{n},{v}\r\n")
    written.append(path)

    path = out_dir / "distribution.csv"
    with open(path, "w", newline="") as fh:
        fh.write("g,max_a_observed,bound_2g_minus_1_holds\r\n")
        for g in range(2, 7):
            rep = distribution_report(g, args.max_b, table)
            fh.write(f"{g},{rep.max_a_observed},{str(rep.bound_2g_minus_1_holds).lower()}\r\n")
    written.append(path)

    written.extend(_render_figures(out_dir, table, fs))
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharing-nim",
        description="Analysis toolkit and play server for 3-pile Sharing Nim.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=_env_int("PORT", DEFAULT_PORT))
    p.add_argument(
        "--table-max-b", type=int, default=_env_int("TABLE_MAX_B", 600), dest="table_max_b"
    )
    p.add_argument("--snapshot", default=_env("SNAPSHOT"), metavar="PATH")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("status", help="classify a position and list its winning moves")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("grundy", help="nim-value of the reduced position (0, a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_grundy)

    p = sub.add_parser("table", help="export the nim-value triangle")
    p.add_argument("--max-b", type=int, default=16, dest="max_b")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("row", help="values G(0, a, b) for b = a .. a+count-1")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_row)

    p = sub.add_parser("f-seq", help="indicator sequence f(0..max_n)")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(func=cmd_f_seq)

    p = sub.add_parser("period-scan", help="search f for an ultimate period within bounds")
    p.add_argument("--max-pre", type=int, required=True, dest="max_pre")
    p.add_argument("--max-p", type=int, required=True, dest="max_p")
    p.add_argument("--len", type=int, default=490, dest="prefix_len")
    p.set_defaults(func=cmd_period_scan)

    p = sub.add_parser("distribution", help="where the value-g positions sit")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--max-b", type=int, required=True, dest="max_b")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("verify", help="run one verification check against the oracle")
    p.add_argument("--check", choices=CHECKS, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write CSV tables and figures to a directory")
    p.add_argument("--out-dir", required=True, dest="out_dir")
    p.add_argument("--max-b", type=int, default=DEFAULT_REPORT_MAX_B, dest="max_b")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, OutOfRange, ResourceLimit, InsufficientPrefix, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
