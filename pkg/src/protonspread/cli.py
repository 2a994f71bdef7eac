"""Command-line frontend.

Subcommands::

    protonspread eval SCENARIO
    protonspread sweep SCENARIO --param R --min 1e-8 --max 10 --n 2 --spacing log
    protonspread survival --desk-scale --tmin 0 --tmax 5 --n 11
    protonspread survival SCENARIO --tmin 0 --tmax 1e-40 --n 11
    protonspread paper-report

Global ``--output PATH`` and ``--format {csv,json}`` may appear before or
after the subcommand.  Exit status: 0 success, 1 report row out of
tolerance, 2 invalid input, 3 numerical failure, 4 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .bounds import SWEEP_PARAMETERS, evaluate, sweep
from .errors import ConfigurationError, DimensionError, DomainError, NumericalFailure
from .report import paper_report, report_passes
from .scenario_file import OutputSpec, load_scenario
from .spectral import TruncatedBreitWigner, make_tbw, sample_survival
from .spread_models import Localization
from .units import CONSTANTS, UNITS, PhysQuantity, width_from_lifetime

EXIT_OK = 0
EXIT_REPORT_FAIL = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_USAGE = 4

# grid values on the command line are read in these units unless --unit is given
SWEEP_DEFAULT_UNITS = {"tau": "years", "R": "cm", "v": "c", "M": "GeV"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def to_csv(records: Sequence[dict], columns: Optional[Sequence[str]] = None) -> str:
    columns = list(columns or (records[0].keys() if records else []))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        writer.writerow([_fmt(rec.get(c)) for c in columns])
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _emit(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _resolve_output(args, spec: OutputSpec, default_format: str):
    fmt = args.format or spec.format or default_format
    path = Path(args.output) if args.output else spec.path
    return fmt, path


def _cmd_eval(args) -> int:
    scenario, spec = load_scenario(args.scenario)
    rec = evaluate(scenario).record()
    fmt, path = _resolve_output(args, spec, "json")
    _emit(to_json(rec) if fmt == "json" else to_csv([rec]), path)
    return EXIT_OK


def _sweep_grid(lo: float, hi: float, n: int, spacing: str) -> list[float]:
    if n < 1:
        raise ConfigurationError(f"must be >= 1, got {n}", "--n")
    if not lo > 0 or not hi > 0:
        raise ConfigurationError("grid bounds must be positive", "--min/--max")
    if lo > hi:
        raise ConfigurationError(f"min {lo!r} exceeds max {hi!r}", "--min/--max")
    if n == 1:
        return [lo]
    grid = np.geomspace(lo, hi, n) if spacing == "log" else np.linspace(lo, hi, n)
    return [float(x) for x in grid]


def _cmd_sweep(args) -> int:
    scenario, spec = load_scenario(args.scenario)
    unit = args.unit or SWEEP_DEFAULT_UNITS[args.param]
    dim, _ = SWEEP_PARAMETERS[args.param]
    if UNITS.get(unit, (None,))[0] != dim:
        raise ConfigurationError(f"{unit!r} is not a {dim.tag} unit", "--unit")
    values = _sweep_grid(args.min, args.max, args.n, args.spacing)
    reports = sweep(scenario, args.param, [PhysQuantity(v, dim, unit) for v in values])
    records = []
    for v, r in zip(values, reports):
        rec = {"swept_parameter": args.param, "swept_value": v, "swept_unit": unit}
        rec.update(r.record())
        records.append(rec)
    fmt, path = _resolve_output(args, spec, "csv")
    _emit(to_json(records) if fmt == "json" else to_csv(records), path)
    return EXIT_OK


def _cmd_survival(args) -> int:
    spec = OutputSpec()
    if args.desk_scale:
        if args.scenario:
            raise UsageError("survival: give either --desk-scale or a scenario file, not both")
        try:
            d = TruncatedBreitWigner.desk_scale(args.width, args.half_support)
        except DomainError as exc:
            raise ConfigurationError(str(exc), "--width/--half-support") from exc
        tcol = "t_dimensionless"
    else:
        if not args.scenario:
            raise UsageError("survival: a scenario file or --desk-scale is required")
        scenario, spec = load_scenario(args.scenario)
        if not isinstance(scenario.model, Localization):
            raise ConfigurationError("survival needs a localization model", "model.kind")
        gamma = width_from_lifetime(scenario.lifetime)
        d = make_tbw(CONSTANTS.m_p, gamma, scenario.model.v, scenario.model.R)
        tcol = "t_seconds"
    if args.tmax < args.tmin:
        raise ConfigurationError(f"tmax {args.tmax!r} is below tmin {args.tmin!r}", "--tmax")
    try:
        curve = sample_survival(d, args.tmin, args.tmax, args.n, args.spacing)
    except DomainError as exc:
        raise ConfigurationError(str(exc), "--tmin/--tmax/--n/--spacing") from exc
    records = [{tcol: t, "survival_probability": p} for t, p in curve.samples]
    fmt, path = _resolve_output(args, spec, "csv")
    _emit(to_json(records) if fmt == "json" else to_csv(records, [tcol, "survival_probability"]), path)
    return EXIT_OK


def _cmd_paper_report(args) -> int:
    rows = paper_report()
    records = [r.record() for r in rows]
    fmt = args.format or "csv"
    _emit(to_json(records) if fmt == "json" else to_csv(records),
          Path(args.output) if args.output else None)
    for r in rows:
        if r.status != "PASS":
            print(f"{r.status}: {r.row}: {r.note}", file=sys.stderr)
    return EXIT_OK if report_passes(rows) else EXIT_REPORT_FAIL


def _global_flags(p, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--output", default=default, help="write to this path instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=default,
                   help="output format (default: json for eval, csv otherwise)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="protonspread",
                     description="Energy spread and measurement-time bounds for proton decay.")
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate one scenario file")
    p.add_argument("scenario")
    _global_flags(p, suppress=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="sweep one scenario parameter over a grid")
    p.add_argument("scenario")
    p.add_argument("--param", required=True, choices=sorted(SWEEP_PARAMETERS))
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    p.add_argument("--unit", help="unit of the grid values "
                   "(default: years for tau, cm for R, c for v, GeV for M)")
    _global_flags(p, suppress=True)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("survival", help="survival probability of the truncated Breit-Wigner state")
    p.add_argument("scenario", nargs="?")
    p.add_argument("--desk-scale", action="store_true",
                   help="dimensionless distribution with hbar = 1")
    p.add_argument("--width", type=float, default=1.0, help="desk-scale width (default 1)")
    p.add_argument("--half-support", type=float, default=50.0,
                   help="desk-scale support half-width (default 50)")
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    _global_flags(p, suppress=True)
    p.set_defaults(func=_cmd_survival)

    p = sub.add_parser("paper-report", help="recompute the published figures and compare")
    _global_flags(p, suppress=True)
    p.set_defaults(func=_cmd_paper_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("protonspread: a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, DomainError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
