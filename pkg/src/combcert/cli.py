"""Command-line front end.

    combcert bounds     --n-max 100 --format json
    combcert circles    --n-max 10 --format csv
    combcert series     --n-max 10
    combcert diff       --n-max 12
    combcert bfile      --sequence B --n-max 12
    combcert verify-all --n-max 40 --out report.json --format json

Exit status: 0 when every check passes, 1 when any check fails or stays
inconclusive at the precision cap, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import suites
from .circles import FOREST_ORACLE_MAX
from .report import Report, emit_bfile, render_csv, render_json, render_text
from .wallis import DEFAULT_BITS_CAP

COMMANDS = ("bounds", "circles", "series", "diff", "bfile", "verify-all")
FORMATS = ("json", "csv", "bfile", "text")
DEFAULT_N_MAX = {"bounds": 100, "circles": 10, "series": 10, "diff": 12, "bfile": 20, "verify-all": 40}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_max: int
    bits: int = 256
    bits_cap: int = DEFAULT_BITS_CAP
    format: str = "text"
    out_path: str | None = None
    sequence: str = "B"

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.n_max < 0:
            raise UsageError("--n-max must be >= 0")
        if self.bits < 8:
            raise UsageError("--bits must be >= 8")
        if self.bits_cap < self.bits:
            raise UsageError("--bits-cap must be >= --bits")
        if self.format == "bfile" and self.command != "bfile":
            raise UsageError("--format bfile is only available for the bfile command")
        if self.command == "bfile":
            if self.sequence not in suites.SEQUENCES:
                raise UsageError(f"--sequence must be one of {', '.join(suites.SEQUENCES)}")
            if self.sequence == "forests" and self.n_max > FOREST_ORACLE_MAX:
                raise UsageError(f"forest counts are exhaustive and limited to n <= {FOREST_ORACLE_MAX}")
        if self.command in ("bounds", "circles", "verify-all") and self.n_max < 1:
            raise UsageError(f"{self.command} needs --n-max >= 1")


def build_report(config: RunConfig) -> Report:
    params = {"n_max": str(config.n_max), "bits": str(config.bits), "bits_cap": str(config.bits_cap)}
    if config.command == "bfile":
        params["sequence"] = config.sequence
    report = Report(config.command, params)
    n = config.n_max
    cmd = config.command
    if cmd == "bounds":
        suites.bounds_suite(report, n, config.bits, config.bits_cap)
    elif cmd == "circles":
        suites.circles_suite(report, n, config.bits, config.bits_cap, oracle_max=min(n, FOREST_ORACLE_MAX))
    elif cmd == "series":
        suites.series_suite(report, n)
    elif cmd == "diff":
        suites.diff_suite(report, n)
    elif cmd == "bfile":
        values = suites.sequence_values(config.sequence, n)
        for i, v in enumerate(values):
            report.add(suites.Row(f"bfile.{config.sequence}", {"n": str(i)}, {"value": str(v)}, "pass"))
    elif cmd == "verify-all":
        suites.core_suite(report, n, config.bits)
        suites.wallis_exact_suite(report, n, config.bits)
        suites.bounds_suite(report, n, config.bits, config.bits_cap)
        suites.circles_suite(report, n, config.bits, config.bits_cap)
        suites.triangle_suite(report, n)
        suites.discrepancy_suite(report, min(n, suites.ORACLE_CAP))
        suites.series_suite(report, n)
        suites.diff_suite(report, n)
    return report


def render(report: Report, config: RunConfig) -> str:
    if config.format == "bfile":
        values = [int(r.output["value"]) for r in report.results]
        return emit_bfile(config.sequence, values)
    if config.format == "json":
        return render_json(report)
    if config.format == "csv":
        return render_csv(report)
    return render_text(report)


def run(config: RunConfig) -> int:
    config.validate()
    report = build_report(config)
    text = render(report, config)
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=None, help="largest index to check")
    common.add_argument("--bits", type=int, default=256, help="starting precision of the pi enclosure")
    common.add_argument("--bits-cap", type=int, default=DEFAULT_BITS_CAP, help="precision cap for escalation")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="combcert", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "bfile":
            p.add_argument("--sequence", choices=suites.SEQUENCES, default="B")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = args.format or ("bfile" if args.command == "bfile" else "text")
    n_max = args.n_max if args.n_max is not None else DEFAULT_N_MAX[args.command]
    return RunConfig(
        command=args.command,
        n_max=n_max,
        bits=args.bits,
        bits_cap=args.bits_cap,
        format=fmt,
        out_path=args.out,
        sequence=getattr(args, "sequence", "B"),
    )


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    config = config_from_args(args)
    try:
        return run(config)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
