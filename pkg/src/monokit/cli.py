"""Command-line surface: construct, check, expand, and report.

Subcommands:
  basis    list one degree block of the orthogonal system as JSON polynomials
  check    run the Gram identity and/or the inequality sweeps
  taylor   exact Taylor coefficients of one basis element
  fourier  expand a polynomial (JSON wire format) in the orthonormal system
  bohr     the two series thresholds and margin values
  report   the full verification document; optionally (re)write golden tables

Machine-readable output goes to stdout (or --output); PASS/FAIL summary
lines go to stderr.  Identical (command, flags, seed) produce identical
output bytes regardless of MONOKIT_THREADS.  Exit status: 0 all invoked
checks pass, 1 a check failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bohr as bohr_mod
from . import report as report_mod
from .basis import BasisIndex, basis_for_degree
from .fueter import taylor_coefficients
from .mpoly import MPoly
from .quadrature import QuadratureRule, fourier_expand
from .quaternion import frac_str

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2


class ConfigError(Exception):
    pass


# -- output formatting -----------------------------------------------------------


def _flatten(obj, prefix: str, rows: list):
    if isinstance(obj, dict):
        for key, value in obj.items():
            _flatten(value, f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(obj, (list, tuple)):
        for i, value in enumerate(obj):
            _flatten(value, f"{prefix}.{i}", rows)
    else:
        rows.append((prefix, obj))


def _to_markdown(obj, lines: list, depth: int = 0):
    indent = "  " * depth
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{indent}- **{key}**:")
                _to_markdown(value, lines, depth + 1)
            else:
                lines.append(f"{indent}- {key}: {value}")
    elif isinstance(obj, list):
        for i, value in enumerate(obj):
            if isinstance(value, (dict, list)):
                lines.append(f"{indent}- [{i}]:")
                _to_markdown(value, lines, depth + 1)
            else:
                lines.append(f"{indent}- {value}")


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "md":
        lines = [f"# {doc.get('command', 'report')}", ""]
        _to_markdown(doc, lines)
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        rows: list = []
        _flatten(doc, "", rows)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    raise ConfigError(f"unknown format {fmt!r}")


def emit(doc: dict, args) -> None:
    text = render(doc, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def status_line(ok: bool, name: str, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}", file=sys.stderr)


# -- subcommands -----------------------------------------------------------------


def cmd_basis(args) -> int:
    if args.degree < 0:
        raise ConfigError("--degree must be >= 0")
    elements = []
    for e in basis_for_degree(args.degree):
        elements.append({
            "index": e.index.label,
            "n": e.index.n,
            "m": e.index.m,
            "kind": e.index.kind,
            "norm_sq_sphere_over_pi": frac_str(e.norm_sq_S),
            "poly": e.poly.to_json_dict(),
        })
    emit({"schema": report_mod.SCHEMA, "command": "basis",
          "degree": args.degree, "count": len(elements), "elements": elements}, args)
    return EXIT_OK


def cmd_check(args) -> int:
    if args.max_degree < 0:
        raise ConfigError("--max-degree must be >= 0")
    if args.tolerance <= 0:
        raise ConfigError("--tolerance must be > 0")
    run_gram = args.gram or not args.bounds
    bounds = args.bounds or (["corollary", "pointwise", "sc", "constants"]
                             if not args.gram else [])
    doc = {"schema": report_mod.SCHEMA, "command": "check",
           "config": {"max_degree": args.max_degree, "tolerance": args.tolerance,
                      "seed": args.seed}}
    ok = True
    if run_gram:
        gram = report_mod.check_gram(args.max_degree, args.tolerance)
        doc["gram"] = gram
        ok &= gram["passed"]
        status_line(gram["passed"], "gram",
                    f"max deviation {gram['max_deviation']:.3e} vs {args.tolerance:.0e}")
    if bounds:
        sweeps = {}
        if {"pointwise", "sc", "constants"} & set(bounds):
            sweeps = bohr_mod.verify_pointwise_bounds(args.max_degree, seed=args.seed)
        reports = {}
        for name in bounds:
            if name == "corollary":
                rep = bohr_mod.verify_corollary_bounds(args.max_degree)
            else:
                rep = sweeps[{"pointwise": "polynomial", "sc": "scalar-part",
                              "constants": "constants-e1"}[name]]
            reports[name] = rep.to_json_dict()
            ok &= rep.passed
            status_line(rep.passed, f"bounds.{name}", f"max ratio {rep.max_ratio:.12f}")
        doc["bounds"] = reports
    doc["passed"] = ok
    emit(doc, args)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_taylor(args) -> int:
    if args.degree < 0:
        raise ConfigError("--degree must be >= 0")
    try:
        index = BasisIndex.parse(args.degree, args.index)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    element = next(e for e in basis_for_degree(args.degree) if e.index == index)
    tc = taylor_coefficients(element.poly)
    coeffs = [{"gamma": list(gamma), "value": value.to_strings()}
              for gamma, value in tc.items()]
    emit({"schema": report_mod.SCHEMA, "command": "taylor", "degree": args.degree,
          "index": index.label, "coefficients": coeffs}, args)
    return EXIT_OK


def cmd_fourier(args) -> int:
    path = Path(args.input)
    if not path.is_file():
        raise ConfigError(f"input file not found: {path}")
    try:
        poly = MPoly.from_json(path.read_text())
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot parse polynomial: {exc}") from exc
    degree = max(poly.degree(), 0)
    max_degree = args.max_degree if args.max_degree is not None else degree
    if max_degree < 0:
        raise ConfigError("--max-degree must be >= 0")
    rule = QuadratureRule.for_degree(degree + max_degree + 2)
    coeffs = fourier_expand(poly, max_degree, rule)
    emit({"schema": report_mod.SCHEMA, "command": "fourier",
          "input_degree": degree, "input_monogenic": poly.dirac().is_zero(),
          **coeffs.to_json_dict()}, args)
    return EXIT_OK


def cmd_bohr(args) -> int:
    for r in args.at:
        if not 0.0 <= r < 0.5:
            raise ConfigError(f"--at must be in [0, 0.5), got {r}")
    report = bohr_mod.bohr_radius(extra_radii=args.at)
    residual_1 = abs(bohr_mod.series_s1(report.r1) - 1.0)
    residual_2 = abs(bohr_mod.series_s2(report.r2) - 1.0)
    ok = max(residual_1, residual_2) < args.tolerance
    doc = {"schema": report_mod.SCHEMA, "command": "bohr",
           "config": {"tolerance": args.tolerance},
           **report.to_json_dict(),
           "residuals": {"S1_at_r1": residual_1, "S2_at_r2": residual_2},
           "passed": ok}
    status_line(ok, "bohr",
                f"r1={report.r1:.6f} r2={report.r2:.6f} radius={report.radius:.6f}")
    emit(doc, args)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_report(args) -> int:
    if args.max_degree < 0:
        raise ConfigError("--max-degree must be >= 0")
    if args.tolerance <= 0:
        raise ConfigError("--tolerance must be > 0")
    if args.golden_dir:
        golden = Path(args.golden_dir)
        golden.mkdir(parents=True, exist_ok=True)
        for name, table in (("axial_closed_forms.json",
                             report_mod.axial_agreement(args.max_degree)),
                            ("taylor_closed_forms.json",
                             report_mod.taylor_agreement(args.max_degree))):
            (golden / name).write_text(json.dumps(table, sort_keys=True, indent=2) + "\n")
        emit({"schema": report_mod.SCHEMA, "command": "report",
              "golden_dir": str(golden), "max_degree": args.max_degree,
              "files": ["axial_closed_forms.json", "taylor_closed_forms.json"]}, args)
        return EXIT_OK
    doc = report_mod.build_report(max_degree=args.max_degree, tolerance=args.tolerance,
                                  seed=args.seed, bound_samples=args.samples,
                                  bohr_functions=args.functions)
    doc["command"] = "report"
    for name in ("monogenicity", "gram", "ball_sphere_relation", "norms", "taylor"):
        status_line(doc[name]["passed"], name, "ok" if doc[name]["passed"] else "see report")
    for name, sub in doc["bounds"].items():
        status_line(sub["passed"], f"bounds.{name}", f"max ratio {sub['max_ratio']:.12f}")
    status_line(doc["bohr"]["empirical"]["passed"], "bohr.empirical",
                f"max block sum {doc['bohr']['empirical']['max_ratio']:.6f}")
    emit(doc, args)
    return EXIT_OK if doc["passed"] else EXIT_CHECK_FAILED


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monokit",
        description="exact monogenic polynomial bases on the unit ball of R^3,"
                    " their inequalities, and the associated Bohr-type radius")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=1e-10,
                        help="numeric acceptance tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=0,
                        help="PRNG seed for sampling checks (default 0)")
    common.add_argument("--format", choices=("json", "md", "csv"), default="json",
                        help="output format (default json)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write the document here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common],
                       help="one degree block of the orthogonal system")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("check", parents=[common],
                       help="Gram identity and/or inequality sweeps")
    p.add_argument("--gram", action="store_true", help="check the ball Gram matrix")
    p.add_argument("--bounds", action="append", default=[],
                   choices=("corollary", "pointwise", "sc", "constants"),
                   help="inequality family to sweep (repeatable)")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("taylor", parents=[common],
                       help="exact Taylor coefficients of a basis element")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--index", required=True, metavar="X:l|Y:m",
                   help='element label, e.g. "X:0" or "Y:2"')
    p.set_defaults(fn=cmd_taylor)

    p = sub.add_parser("fourier", parents=[common],
                       help="expand a JSON polynomial in the orthonormal system")
    p.add_argument("--input", required=True, metavar="poly.json")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(fn=cmd_fourier)

    p = sub.add_parser("bohr", parents=[common],
                       help="series thresholds and margins")
    p.add_argument("--at", type=float, action="append", default=[],
                   metavar="R", help="extra radius to tabulate (repeatable)")
    p.set_defaults(fn=cmd_bohr)

    p = sub.add_parser("report", parents=[common],
                       help="full verification document")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--samples", type=int, default=10_000,
                   help="pointwise sweep sample count (default 10000)")
    p.add_argument("--functions", type=int, default=100,
                   help="empirical radius-test function count (default 100)")
    p.add_argument("--golden-dir", metavar="DIR", default=None,
                   help="write only the closed-form agreement tables into DIR")
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
