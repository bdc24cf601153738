"""Command-line front end: sweeps, figure presets, and the verification suite.

Exit codes: 0 on success, 1 on configuration or usage errors, 2 when the
verification suite reports a failed check.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, NoReturn

from .figures import figure_preset, preset_table
from .sweep import RunConfig, run_sweep
from .verify import format_report, verify

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1, not 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="micromaser",
        description=(
            "Entanglement between two atoms crossing a Kerr cavity in "
            "sequence: time sweeps, figure presets, and self-verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run one sweep over the scaled time")
    sweep.add_argument("--config", help="JSON file with flat RunConfig keys; flags override")
    sweep.add_argument("--field", help="initial field, fock:<m> or thermal:<nbar>")
    sweep.add_argument("--atoms", choices=("eg", "ee"), help="second atom entry state")
    sweep.add_argument("--chi", type=float, help="Kerr strength over coupling")
    sweep.add_argument("--r", type=float, help="level-shift asymmetry ratio")
    sweep.add_argument("--stark", choices=("on", "off"), help="level-shift terms")
    sweep.add_argument("--t-start", type=float, help="first scaled time (default 0)")
    sweep.add_argument("--t-end", type=float, help="last scaled time (default 10)")
    sweep.add_argument("--steps", type=int, help="grid points (default 1000)")
    _output_flags(sweep)

    figure = sub.add_parser("figure", help="run a named figure preset")
    figure.add_argument("--id", required=True, help="preset id, e.g. 1a (see list-figures)")
    figure.add_argument("--t-start", type=float, help="override first scaled time")
    figure.add_argument("--t-end", type=float, help="override last scaled time")
    figure.add_argument("--steps", type=int, help="override grid points")
    _output_flags(figure)

    check = sub.add_parser("verify", help="run the self-verification suite")
    check.add_argument("--depth", choices=("quick", "full"), default="quick")

    sub.add_parser("list-figures", help="list the available figure presets")
    return parser


def _output_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--csv", help="write the sweep table to this path")
    cmd.add_argument("--plot", help="write a vector plot to this path")
    cmd.add_argument(
        "--dump-matrix",
        action="store_const",
        const=True,
        help="append the density-matrix columns to the CSV",
    )


def _emit(config: RunConfig) -> None:
    result = run_sweep(config)
    if config.csv_path is None and config.plot_path is None:
        sys.stdout.write(result.to_csv_text())
        return
    peak, at = result.max_concurrence()
    print(f"{config.describe()}: max concurrence {peak:.6f} at scaled time {at:.4f}")
    if config.csv_path:
        print(f"wrote {config.csv_path}")
    if config.plot_path:
        print(f"wrote {config.plot_path}")


def _run_sweep_command(args: argparse.Namespace) -> int:
    flags: dict[str, Any] = {
        "field": args.field,
        "atoms": args.atoms,
        "chi_over_kappa": args.chi,
        "r": args.r,
        "stark": args.stark,
        "t_start": args.t_start,
        "t_end": args.t_end,
        "steps": args.steps,
        "csv_path": args.csv,
        "plot_path": args.plot,
        "dump_matrix": args.dump_matrix,
    }
    if args.config:
        config = RunConfig.from_json(args.config, overrides=flags)
    else:
        config = RunConfig.from_mapping({k: v for k, v in flags.items() if v is not None})
    _emit(config)
    return 0


def _run_figure_command(args: argparse.Namespace) -> int:
    overrides: dict[str, Any] = {
        "csv_path": args.csv,
        "plot_path": args.plot,
        "dump_matrix": args.dump_matrix,
        "t_start": args.t_start,
        "t_end": args.t_end,
        "steps": args.steps,
    }
    config = figure_preset(args.id, **{k: v for k, v in overrides.items() if v is not None})
    _emit(config)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            return _run_sweep_command(args)
        if args.command == "figure":
            return _run_figure_command(args)
        if args.command == "verify":
            report = verify(args.depth)
            print(format_report(report))
            return 0 if report["passed"] else 2
        if args.command == "list-figures":
            for key, description in preset_table():
                print(f"{key:4s} {description}")
            return 0
    except (ValueError, OSError) as exc:
        print(f"micromaser: error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
