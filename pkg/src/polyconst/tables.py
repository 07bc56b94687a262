"""Named tables of constants, computed row by row.

Each table has fixed row parameters and, where a published value exists, a
``reference`` column holding that value as printed. Rows may be computed on a
thread pool (``POLYCONST_THREADS``, default 1); results keep row order, so the
output does not depend on the thread count.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal
from typing import Callable

import numpy as np

from . import objectives as obj
from .constants import (big_K, hl_constant, little_k, phi_psi, power_lower_bound,
                        power_ratio_same_sign, showcase_degree5)
from .optimize import maximize
from .poly import INF

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class TableSpec:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    compute: Callable[..., dict]
    title: str = ""


def _fmt_exp(v: float) -> str:
    return "inf" if v == INF else f"{v:g}"


def _k_row(q, p, ref):
    r = little_k(q, p)
    return {"q": _fmt_exp(q), "p": _fmt_exp(p), "k": float(r.value),
            "extremal": str(r.attaining_polynomial), "reference": ref}


def _K_row(q, p, ref):
    r = big_K(q, p)
    return {"q": _fmt_exp(q), "p": _fmt_exp(p), "K": float(r.value),
            "parameter": r.attaining_parameter, "extremal": str(r.attaining_polynomial),
            "reference": ref}


def _q12_row(q, ref1, arg1, refinf, arginf):
    one = maximize(lambda t: obj.f_q1(q, t), 2.0, 4.0, vectorized=True)
    inf = maximize(lambda t: obj.f_qinf(q, t), 0.5, 1.0, vectorized=True)
    return {"q": q, "max_f_q1": one.value, "argmax_f_q1": one.argmax,
            "max_f_qinf": inf.value, "argmax_f_qinf": inf.argmax,
            "reference_f_q1": ref1, "reference_argmax_f_q1": arg1,
            "reference_f_qinf": refinf, "reference_argmax_f_qinf": arginf}


def _p24_row(p, ref):
    r = hl_constant(p)
    return {"p": p, "q": r.extra["q"], "maximum": float(r.value),
            "attainment": r.attaining_parameter, "reference": ref}


def _p4inf_row(p, ref, ref_arg):
    r = hl_constant(p)
    # at p = 4 the family-ii objective is constant, so there is no attainment point
    ridge = "mirror_parameter" in r.extra and p != 4
    return {"p": p, "maximum": float(r.value),
            "attainment": r.attaining_parameter if ridge else None,
            "mirror": r.extra["mirror_parameter"] if ridge else None,
            "reference": ref, "reference_attainment": ref_arg}


def _powers_row(m, ref):
    valid = power_lower_bound(m)
    same = power_ratio_same_sign(m)
    return {"m": m, "degree": 2 * m, "ratio": valid.value.per_degree_ratio,
            "alpha": valid.attaining_parameter,
            "same_sign_ratio": same.value.per_degree_ratio,
            "same_sign_sup_norm": same.extra["sup_norm"], "reference": ref}


def _phi_psi_row(p):
    phi, psi = phi_psi(p)
    return {"p": p, "phi": phi, "psi": psi, "difference": psi - phi}


def _degree5_row(label, ref):
    asym, sym = showcase_degree5()
    r = asym if label == "asymmetric" else sym
    return {"polynomial": label, "l2": r.extra["l2"], "sup_norm_10": r.extra["sup_norm"],
            "ratio": float(r.value), "reference": ref}


TABLES: dict[str, TableSpec] = {
    t.name: t for t in [
        TableSpec("k-table", ("q", "p", "k", "extremal", "reference"),
                  ((1.0, 1.0, 1.0), (1.0, INF, 1.0), (INF, 1.0, 1.0), (INF, INF, 1.0 / 3.0)),
                  _k_row, "best lower constants k_{2,q,p}"),
        TableSpec("K-table", ("q", "p", "K", "parameter", "extremal", "reference"),
                  ((1.0, 1.0, 2.0 + 2.0 * SQRT2), (1.0, INF, 1.0 + SQRT2),
                   (INF, 1.0, 4.0), (INF, INF, 1.0)),
                  _K_row, "best upper constants K_{2,q,p}"),
        TableSpec("remark-q12",
                  ("q", "max_f_q1", "argmax_f_q1", "max_f_qinf", "argmax_f_qinf",
                   "reference_f_q1", "reference_argmax_f_q1", "reference_f_qinf",
                   "reference_argmax_f_qinf"),
                  ((1.0, 2.0 + 2.0 * SQRT2, None, 1.0 + SQRT2, None),
                   (4.0 / 3.0, "4.11346", "3.79842", "1.83737", "0.86783"),
                   (1.5, "4.02012", None, "1.67869", None),
                   (1.75, "4.00003", None, "1.51651", None),
                   (2.0, 4.0, None, SQRT2, None)),
                  _q12_row, "maxima of f_{q,1} on [2,4] and f_{q,inf} on [1/2,1]"),
        TableSpec("remark-p24", ("p", "q", "maximum", "attainment", "reference"),
                  ((2.2, "1.87786"), (2.4, "1.78179"), (2.6, "1.70436"), (2.8, "1.64067"),
                   (3.0, "1.58740"), (3.2, "1.54221"), (3.4, "1.50340"), (3.6, "1.46973"),
                   (3.8, "1.44024")),
                  _p24_row, "C_{R,2,p}(2) for 2 < p < 4"),
        TableSpec("remark-p4inf",
                  ("p", "maximum", "attainment", "mirror", "reference", "reference_attainment"),
                  ((4.0, SQRT2, None), (5.0, "1.48488", "0.99930"), (6.0, "1.53632", "0.99974"),
                   (7.0, "1.57512", "0.34940"), (8.0, "1.60526", "0.35688"),
                   (9.0, "1.62927", "0.36223"), (12.0, "1.67869", "0.37151"),
                   (25.0, "1.75927", "0.38261"), (50.0, "1.79786", "0.38667"),
                   (150.0, "1.82410", "0.38911"), (250.0, "1.82939", "0.38957")),
                  _p4inf_row, "D_{R,2,p}(2) for p >= 4"),
        TableSpec("hl-powers",
                  ("m", "degree", "ratio", "alpha", "same_sign_ratio", "same_sign_sup_norm",
                   "reference"),
                  ((2, "1.2937"), (4, "1.3880"), (10, "1.4687"), (50, "1.5303"),
                   (200, "1.5465"), (300, "1.5487"), (400, "1.5498")),
                  _powers_row, "per-degree ratios of lower bounds for D_{R,2m,4m}(2)"),
        TableSpec("phi-psi", ("p", "phi", "psi", "difference"),
                  tuple((p,) for p in (4.0, 5.0, 6.0, 8.0, 12.0, 25.0, 50.0, 100.0, 250.0)),
                  _phi_psi_row, "diagonal (phi) and family-ii (psi) maxima"),
        TableSpec("degree5", ("polynomial", "l2", "sup_norm_10", "ratio", "reference"),
                  (("asymmetric", "6.236014"), ("symmetric", "6.191704")),
                  _degree5_row, "|P|_2 / ||P||_10 for two quintics"),
    ]
}


def thread_count() -> int:
    raw = os.environ.get("POLYCONST_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"POLYCONST_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"POLYCONST_THREADS must be a positive integer, got {raw!r}")
    return n


def build_table(name: str, threads: int | None = None) -> tuple[TableSpec, list[dict]]:
    """Compute every row of table ``name``; rows come back in ``TableSpec.rows`` order."""
    if name not in TABLES:
        raise ValueError(f"unknown table {name!r}; choose from {', '.join(TABLES)}")
    spec = TABLES[name]
    n = threads or thread_count()
    if n == 1:
        rows = [spec.compute(*r) for r in spec.rows]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(lambda r: spec.compute(*r), spec.rows))
    return spec, rows


def round_like(value: float, printed: str, rounding: str = ROUND_HALF_EVEN) -> str:
    """``value`` rounded (half-to-even by default) to the decimal places of ``printed``."""
    places = Decimal(printed).as_tuple().exponent
    return str(Decimal(repr(float(value))).quantize(Decimal(1).scaleb(places),
                                                   rounding=rounding))


def matches_printed(value: float, printed: str) -> bool:
    """True when ``printed`` is ``value`` rounded or truncated to its digits.

    Published tables are not consistent about which of the two they use.
    """
    return printed in (round_like(value, printed), round_like(value, printed, ROUND_DOWN))


def figure_phi_psi_diff(lo: float, hi: float, points: int) -> list[dict]:
    """Rows ``(p, psi(p) - phi(p))`` on a uniform grid over [lo, hi], lo >= 4."""
    if not 4 <= lo <= hi < INF:
        raise ValueError(f"phi-psi-diff needs 4 <= from <= to < inf, got [{lo}, {hi}]")
    ps = _grid(lo, hi, points)
    out = []
    for p in ps:
        phi, psi = phi_psi(float(p))
        out.append({"p": float(p), "difference": psi - phi})
    return out


def figure_f_curves(p: float, lo: float, hi: float, points: int) -> list[dict]:
    """Rows ``(alpha, f_{p/(p-2),p}(alpha))`` on a uniform grid over [lo, hi] in [0, 1]."""
    if not 2 < p < INF:
        raise ValueError(f"f-curves needs finite p > 2, got {p}")
    if not 0 <= lo <= hi <= 1:
        raise ValueError(f"f-curves range must lie in [0, 1], got [{lo}, {hi}]")
    ts = _grid(lo, hi, points)
    vals = np.asarray(obj.f_qp(p / (p - 2.0), p, ts))
    return [{"alpha": float(t), "value": float(v)} for t, v in zip(ts, vals)]


def _grid(lo: float, hi: float, points: int) -> np.ndarray:
    if points < 1:
        raise ValueError(f"points must be >= 1, got {points}")
    if not lo <= hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if points == 1:
        return np.array([float(lo)])
    return np.linspace(lo, hi, points)
