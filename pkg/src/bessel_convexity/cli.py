"""Command-line front end.

Exit codes: 0 when everything passes, 1 on any FAIL or solver failure,
2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .disk import convexity_certificate
from .errors import BesselConvexityError, DomainError
from .expansions import ExpansionConfig
from .normalized_maps import MapKind, first_pole
from .radius import radius_convexity
from .thresholds import (
    auxiliary_bound_function,
    conjecture_evidence,
    critical_order,
    special_constants,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PRINTED_TOL = 5e-5
EXACT_TOL = 1e-8

# published reference values: 4-decimal constants and exact rationals
REFERENCE = {
    "nu_star": (0.3901, PRINTED_TOL),
    "nu_two": (0.1246, PRINTED_TOL),
    "nu0_f": (1.0, EXACT_TOL),
    "nu0_g": (1.0, EXACT_TOL),
    "nu0_h": (-0.1438, PRINTED_TOL),
    "nu34_h": (1.25, EXACT_TOL),
    "nu0_phi": (-1.5623, PRINTED_TOL),
    "nu_star_phi": (-1.7744, PRINTED_TOL),
    "aux_f0": (0.0151, 5e-4),
}


@dataclass(frozen=True)
class ReportRow:
    quantity: str
    computed: float
    paper_value: float | None
    abs_diff: float | None
    tolerance: float | None
    status: str

    def as_dict(self):
        return dict(self.__dict__)


def report_row(quantity, computed, reference=None):
    if reference is None:
        return ReportRow(quantity, computed, None, None, None, "NO_REF")
    ref, tol = reference
    diff = abs(computed - ref)
    return ReportRow(quantity, computed, ref, diff, tol, "PASS" if diff <= tol else "FAIL")


def reproduce_rows():
    consts = special_constants()
    computed = {
        "nu_star": consts["nu_star"].value,
        "nu_two": consts["nu_two"].value,
        "nu0_f": critical_order(MapKind.F, 0.0).nu_critical,
        "nu0_g": critical_order(MapKind.G, 0.0).nu_critical,
        "nu0_h": critical_order(MapKind.H, 0.0).nu_critical,
        "nu34_h": critical_order(MapKind.H, 0.75).nu_critical,
        "nu0_phi": critical_order(MapKind.PHI, 0.0).nu_critical,
        "nu_star_phi": consts["nu_star_phi"].value,
        "aux_f0": auxiliary_bound_function(0.0),
    }
    return [report_row(name, value, REFERENCE.get(name)) for name, value in computed.items()]


# ---- formatting -----------------------------------------------------------

def _clean(v):
    # JSON has no inf/nan; floats otherwise go through repr, which round-trips exactly
    if isinstance(v, float):
        return float(v) if math.isfinite(v) else None
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    if isinstance(v, dict):
        return {k: _clean(x) for k, x in v.items()}
    return v


def _fmt(v):
    if isinstance(v, float):
        return repr(float(v))
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(x) for x in v)
    if v is None:
        return ""
    return str(v)


def emit(records, fmt, out, columns=None):
    """Write a list of flat dicts as json, csv or text."""
    if fmt == "json":
        payload = [_clean(r) for r in records]
        out.write(json.dumps(payload[0] if len(payload) == 1 and columns is None else payload, indent=2))
        out.write("\n")
        return
    cols = columns or (list(records[0]) if records else [])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in records:
            w.writerow([_fmt(r.get(c)) for c in cols])
        out.write(buf.getvalue())
        return
    for i, r in enumerate(records):
        if i:
            out.write("\n")
        width = max(len(c) for c in cols)
        for c in cols:
            out.write(f"{c:<{width}}  {_fmt(r.get(c))}\n")


# ---- ranges ----------------------------------------------------------------

def parse_range(text):
    """``lo:hi:step`` (inclusive) or a comma-separated list of values."""
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ValueError
            lo, hi, step = parts
            if not step > 0 or not all(map(math.isfinite, parts)):
                raise ValueError
            if hi < lo:
                return []
            n = int(math.floor((hi - lo) / step + 1e-9)) + 1
            return [lo + k * step for k in range(n)]
        if not text.strip():
            return []
        return [float(p) for p in text.split(",")]
    except ValueError:
        raise DomainError(f"invalid range {text!r}; use lo:hi:step with step > 0 or a list a,b,c") from None


# ---- commands ---------------------------------------------------------------

def _cfg(args):
    return ExpansionConfig(args.terms)


def cmd_radius(args, out):
    res = radius_convexity(args.kind, args.nu, args.alpha, _cfg(args))
    if res.residual > args.tol:
        raise BesselConvexityError(f"residual {res.residual:.3g} above --tol {args.tol}")
    emit([res.as_dict()], args.format, out)
    return EXIT_OK


def cmd_threshold(args, out):
    res = critical_order(args.kind, args.alpha)
    if res.equation_residual > args.tol:
        raise BesselConvexityError(f"residual {res.equation_residual:.3g} above --tol {args.tol}")
    emit([res.as_dict()], args.format, out)
    return EXIT_OK


def cmd_reproduce(args, out):
    rows = reproduce_rows()
    emit([r.as_dict() for r in rows], args.format, out, columns=list(rows[0].as_dict()))
    return EXIT_FAIL if any(r.status == "FAIL" for r in rows) else EXIT_OK


def cmd_conjecture(args, out):
    ev = conjecture_evidence(args.nu)
    rec = ev.as_dict()
    rec["conjectured_threshold"] = -1.875
    rec["conjecture_predicts"] = "CONVEX" if ev.nu >= -1.875 else "NOT_CONVEX"
    emit([rec], args.format, out)
    return EXIT_OK


TABLE_COLUMNS = ["kind", "nu", "alpha", "radius", "residual", "margin_inside", "status"]


def table_rows(kind, nus, alphas, cfg=None, n_samples=360):
    kind = MapKind.parse(kind)
    cfg = cfg or ExpansionConfig()
    rows = []
    for nu in sorted(nus):
        for alpha in sorted(alphas):
            row = {"kind": kind.value, "nu": nu, "alpha": alpha, "radius": None,
                   "residual": None, "margin_inside": None}
            try:
                res = radius_convexity(kind, nu, alpha, cfg)
            except DomainError:
                row["status"] = "DOMAIN_ERROR"
                rows.append(row)
                continue
            except BesselConvexityError:
                row["status"] = "SOLVER_ERROR"
                rows.append(row)
                continue
            inside = convexity_certificate(kind, nu, 0.999 * res.radius, alpha, n_samples)
            outside_r = 1.001 * res.radius
            sharp = outside_r >= first_pole(kind, nu) or not convexity_certificate(
                kind, nu, outside_r, alpha, n_samples).certified
            row.update(radius=res.radius, residual=res.residual, margin_inside=inside.margin)
            row["status"] = "CERTIFIED" if inside.certified and sharp else "FAIL"
            rows.append(row)
    return rows


def cmd_table(args, out):
    nus = parse_range(args.nu_range)
    alphas = parse_range(args.alpha_range)
    rows = table_rows(args.kind, nus, alphas, _cfg(args))
    fmt = args.format
    if fmt == "json":
        out.write(json.dumps([_clean(r) for r in rows], indent=2) + "\n")
    else:
        emit(rows, fmt, out, columns=TABLE_COLUMNS)
    return EXIT_FAIL if any(r["status"] in ("FAIL", "SOLVER_ERROR") for r in rows) else EXIT_OK


def cmd_verify(args, out):
    from .verification import run_all

    checks = run_all(args.terms)
    rows = [dict(c.as_dict(), status="PASS" if c.passed else "FAIL") for c in checks]
    emit(rows, args.format, out, columns=["name", "worst", "bound", "status"])
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


# ---- parser ----------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="output format (default: csv for table, text otherwise)")
    common.add_argument("--terms", type=int, default=200, help="zeros kept in expansions (>= 10)")
    common.add_argument("--tol", type=float, default=1e-10, help="largest accepted residual")

    p = argparse.ArgumentParser(prog="bessel-convexity",
                                description="Radii of convexity of normalized Bessel maps.")
    sub = p.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in MapKind]

    s = sub.add_parser("radius", parents=[common], help="radius of convexity of order alpha")
    s.add_argument("--kind", choices=kinds, required=True)
    s.add_argument("--nu", type=float, required=True)
    s.add_argument("--alpha", type=float, default=0.0)
    s.set_defaults(func=cmd_radius)

    s = sub.add_parser("threshold", parents=[common], help="critical order for convexity of order alpha")
    s.add_argument("--kind", choices=kinds, required=True)
    s.add_argument("--alpha", type=float, default=0.0)
    s.set_defaults(func=cmd_threshold)

    s = sub.add_parser("reproduce", parents=[common], help="named constants against published values")
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("conjecture", parents=[common], help="convexity of phi_nu in the unit disk")
    s.add_argument("--nu", type=float, default=-1.6)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("table", parents=[common], help="grid of radii over (nu, alpha)")
    s.add_argument("--kind", choices=kinds, required=True)
    s.add_argument("--nu-range", required=True, help="lo:hi:step or a,b,c")
    s.add_argument("--alpha-range", default="0", help="lo:hi:step or a,b,c")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", parents=[common], help="run the built-in self-checks")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.func is cmd_table else "text"
    try:
        if args.terms < 10:
            raise DomainError("--terms must be >= 10")
        return args.func(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BesselConvexityError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ArithmeticError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
