"""Command-line front end: ``polyconst <command> [options]``.

Every command produces a small table of rows and prints it as aligned text,
CSV (header row, comma separated) or JSON (an array of row objects).

Exit codes: 0 success, 1 a ``verify`` run found violations, 2 usage or
domain errors, 3 numerical failures (non-finite objective, no convergence).

Examples:
    polyconst K --q 1 --p inf
    polyconst hl --p 3 --format json
    polyconst table --name remark-p4inf --format csv
    polyconst figure --name f-curves --p 3 --from 0 --to 1 --points 500
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from .constants import (baseline_bound, big_K, estimate_little_k, hl_constant,
                        little_k, phi_psi, power_lower_bound, power_ratio_same_sign,
                        showcase_degree5)
from .optimize import DEFAULT_SCAN, ConvergenceError, NonFiniteObjective, ScanConfig
from .oracle import sandwich_check
from .poly import parse_exponent
from .tables import TABLES, build_table, figure_f_curves, figure_phi_psi_diff

MISSING = "—"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # report usage problems through the same exit path as domain errors
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _exponent(text: str) -> float:
    try:
        return parse_exponent(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _number(text: str) -> float:
    try:
        return float(parse_exponent(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _fmt_float(v: float, full: bool) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.17g}" if full else f"{v:.6g}"


def _cell(v, full: bool) -> str:
    if v is None:
        return MISSING
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return _fmt_float(v, full)
    return str(v)


def _json_cell(v, full: bool):
    if isinstance(v, float):
        if not math.isfinite(v):
            return _fmt_float(v, full)
        return v if full else float(f"{v:.6g}")
    return v


def render(columns: Sequence[str], rows: list[dict], fmt: str, full: bool) -> str:
    if fmt == "json":
        data = [{c: _json_cell(r.get(c), full) for c in columns} for r in rows]
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    cells = [[_cell(r.get(c), full) for c in columns] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _cmd_K(a):
    cfg = ScanConfig(scan_points=a.scan if a.scan is not None else DEFAULT_SCAN.scan_points,
                     refine_tol=a.tol if a.tol is not None else DEFAULT_SCAN.refine_tol)
    r = big_K(a.q, a.p, cfg)
    return (["q", "p", "K", "parameter", "extremal", "method"],
            [{"q": a.q, "p": a.p, "K": float(r.value),
              "parameter": r.attaining_parameter, "extremal": str(r.attaining_polynomial),
              "method": r.method}])


def _cmd_k(a):
    r = little_k(a.q, a.p)
    return (["q", "p", "k", "extremal", "method"],
            [{"q": a.q, "p": a.p, "k": float(r.value),
              "extremal": str(r.attaining_polynomial), "method": r.method}])


def _cmd_k_est(a):
    r = estimate_little_k(a.q, a.p, a.grid)
    return (["q", "p", "grid", "k_upper", "extremal", "method"],
            [{"q": a.q, "p": a.p, "grid": a.grid,
              "k_upper": float(r.value), "extremal": str(r.attaining_polynomial),
              "method": r.method}])


def _cmd_hl(a):
    r = hl_constant(a.p)
    return (["p", "q", "regime", "value", "attainment", "mirror", "extremal", "method"],
            [{"p": a.p, "q": r.extra["q"], "regime": r.extra["regime"],
              "value": float(r.value), "attainment": r.attaining_parameter,
              "mirror": r.extra.get("mirror_parameter"),
              "extremal": str(r.attaining_polynomial), "method": r.method}])


def _cmd_phi_psi(a):
    phi, psi = phi_psi(a.p)
    return (["p", "phi", "psi", "difference"],
            [{"p": a.p, "phi": phi, "psi": psi, "difference": psi - phi}])


def _cmd_baseline(a):
    return (["m", "p", "bound"], [{"m": a.m, "p": a.p, "bound": baseline_bound(a.m, a.p)}])


def _cmd_power_bound(a):
    r = (power_ratio_same_sign if a.same_sign else power_lower_bound)(a.m)
    return (["m", "degree", "per_degree_ratio", "log_value", "alpha", "method"],
            [{"m": a.m, "degree": r.value.degree, "per_degree_ratio": r.value.per_degree_ratio,
              "log_value": r.value.log_magnitude, "alpha": r.attaining_parameter,
              "method": r.method}])


def _cmd_degree5(a):
    rows = [{"polynomial": r.notes, "l2": r.extra["l2"], "sup_norm_10": r.extra["sup_norm"],
             "ratio": float(r.value)} for r in showcase_degree5()]
    return ["polynomial", "l2", "sup_norm_10", "ratio"], rows


def _cmd_table(a):
    spec, rows = build_table(a.name)
    return list(spec.columns), rows


def _cmd_figure(a):
    if a.name == "phi-psi-diff":
        lo = 4.0 if a.lo is None else a.lo
        hi = 250.0 if a.hi is None else a.hi
        return ["p", "difference"], figure_phi_psi_diff(lo, hi, a.points)
    if a.p is None:
        raise ValueError("f-curves needs --p")
    lo = 0.0 if a.lo is None else a.lo
    hi = 1.0 if a.hi is None else a.hi
    return ["alpha", "value"], figure_f_curves(a.p, lo, hi, a.points)


def _cmd_verify(a):
    rep = sandwich_check(a.q, a.p, samples=a.samples, seed=a.seed)
    row = {"q": a.q, "p": a.p, "samples": rep.checked, "seed": a.seed,
           "k": rep.extra["k"], "k_exact": rep.extra["k_exact"], "K": rep.extra["K"],
           "empirical_min": rep.extra["empirical_min"],
           "empirical_max": rep.extra["empirical_max"],
           "max_violation": rep.max_violation, "passed": rep.passed}
    return list(row), [row], (0 if rep.passed else 1)


def _output_flags(top_level: bool) -> argparse.ArgumentParser:
    # accepted both before and after the subcommand; only the top level holds
    # real defaults so a flag given early is not reset by the subparser
    default = None if top_level else argparse.SUPPRESS
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--format", choices=("text", "csv", "json"),
                       default="text" if top_level else default,
                       help="output format (default text)")
    flags.add_argument("--full", action="store_true",
                       default=False if top_level else default,
                       help="17 significant digits instead of 6")
    return flags


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyconst", parents=[_output_flags(True)],
                     description="Equivalence and Hardy-Littlewood constants of "
                                 "homogeneous polynomials on l_p^2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _output_flags(False)

    def cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = cmd("K", _cmd_K, "best constant K_{2,q,p}")
    sp.add_argument("--q", type=_exponent, required=True)
    sp.add_argument("--p", type=_exponent, required=True)
    sp.add_argument("--scan", type=int, help="scan points of the optimizer")
    sp.add_argument("--tol", type=float, help="golden-section bracket width")

    sp = cmd("k", _cmd_k, "best constant k_{2,q,p} for q in {1, inf}")
    sp.add_argument("--q", type=_exponent, required=True)
    sp.add_argument("--p", type=_exponent, required=True)

    sp = cmd("k-est", _cmd_k_est, "grid upper estimate of k_{2,q,p} for 1 < q < inf")
    sp.add_argument("--q", type=_exponent, required=True)
    sp.add_argument("--p", type=_exponent, required=True)
    sp.add_argument("--grid", type=int, default=256)

    sp = cmd("hl", _cmd_hl, "Hardy-Littlewood constant for degree 2 on l_p^2, p > 2")
    sp.add_argument("--p", type=_exponent, required=True)

    sp = cmd("phi-psi", _cmd_phi_psi, "diagonal and family-ii maxima at finite p >= 4")
    sp.add_argument("--p", type=_exponent, required=True)

    sp = cmd("baseline", _cmd_baseline, "closed-form lower bound for D_{R,m,p}")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=_number, required=True)

    sp = cmd("power-bound", _cmd_power_bound, "lower bound for D_{R,2m,4m}(2) from powers")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--same-sign", action="store_true",
                    help="use A(x^2 + y^2) + Bxy (not a valid bound)")

    cmd("degree5", _cmd_degree5, "|P|_2 / ||P||_10 for the two fixed quintics")

    sp = cmd("table", _cmd_table, "compute a named table")
    sp.add_argument("--name", choices=tuple(TABLES), required=True)

    sp = cmd("figure", _cmd_figure, "data series for plotting")
    sp.add_argument("--name", choices=("phi-psi-diff", "f-curves"), required=True)
    sp.add_argument("--from", dest="lo", type=_number)
    sp.add_argument("--to", dest="hi", type=_number)
    sp.add_argument("--points", type=int, default=200)
    sp.add_argument("--p", type=_exponent, help="exponent for f-curves")

    sp = cmd("verify", _cmd_verify, "sandwich check on seeded random unit polynomials")
    sp.add_argument("--q", type=_exponent, required=True)
    sp.add_argument("--p", type=_exponent, required=True)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (ConvergenceError, NonFiniteObjective, FloatingPointError) as exc:
        sys.stderr.write(f"polyconst: numerical failure: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"polyconst: {exc}\n")
        return 2
    columns, rows, code = out if len(out) == 3 else (*out, 0)
    sys.stdout.write(render(columns, rows, args.format, args.full))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
