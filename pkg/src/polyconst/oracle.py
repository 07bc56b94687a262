"""Brute-force checks of the analytic pipeline.

The sup-norm oracle shares only polynomial evaluation with :func:`sup_norm`:
it scans the four full charts ``(t, ±g(t))``, ``(±g(t), t)``, t in [-1, 1], on
a plain grid and never refines. Random polynomials come from numpy's PCG64
generator (``numpy.random.default_rng(seed)``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import objectives as obj
from .constants import big_K, estimate_little_k, little_k
from .extremal import ext_sup1, ext_supinf, ext_supp
from .optimize import ScanConfig
from .poly import (INF, HomogeneousPoly2, _horner, check_exponent, coeff_norm,
                   complement, sup_norm_many)

SANDWICH_TOL = 1e-8
CONSISTENCY_TOL = 1e-12
SANDWICH_SCAN = ScanConfig(scan_points=256)


@dataclass
class OracleReport:
    checked: int
    max_violation: float
    worst_case: str
    passed: bool
    resolution_bound: float = 0.0
    tolerance: float = 0.0
    notes: str = ""
    extra: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} checked={self.checked} max_violation={self.max_violation:.3e} "
                f"tol={self.tolerance:.1e} {self.notes}")


def _odd(n: int) -> int:
    return n if n % 2 else n + 1


def sup_norm_scan_many(coeffs: np.ndarray, p: float, nodes: int) -> np.ndarray:
    """Plain-grid sup-norm lower bounds for the rows of ``coeffs``."""
    p = check_exponent(p)
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=float))
    t = np.linspace(-1.0, 1.0, _odd(nodes))
    g = complement(t, p)
    xs = np.concatenate([t, t, g, -g])
    ys = np.concatenate([g, -g, t, t])
    out = np.empty(coeffs.shape[0])
    step = max(1, 2_000_000 // xs.size)
    for s in range(0, coeffs.shape[0], step):
        c = coeffs[s:s + step]
        cols = [c[:, k, None] for k in range(c.shape[1])]
        out[s:s + step] = np.abs(_horner(cols, xs[None], ys[None])).max(axis=1)
    return out


def sup_norm_oracle(P: HomogeneousPoly2, p: float, nodes: int = 10_000) -> float:
    """Max of ``|P|`` over a uniform grid on every chart; never above the true norm."""
    if nodes < 1000:
        raise ValueError(f"oracle needs at least 1000 nodes, got {nodes}")
    return float(sup_norm_scan_many(P.array, p, nodes)[0])


def _resolution_factor(p: float, nodes: int, degree: int) -> float:
    m = max(degree, 1)
    h = 2.0 / (_odd(nodes) - 1)
    curv = 4.0 * (p - 1.0) if 2 <= p < INF else 0.0
    factor = m * m * (3.0 + curv) * h * h / 8.0
    if 1 < p < 2:
        factor += 8.0 * m * h ** p
    return factor


def resolution_bound(P: HomogeneousPoly2, p: float, nodes: int) -> float:
    """Upper bound on ``sup_norm(P) - sup_norm_oracle(P, nodes)``.

    Every sphere point lies in the part ``|t| <= 2^(-1/p)`` of some chart, where
    ``|g'| <= 1`` and ``|g''| <= 4(p-1)`` for p >= 2. With node spacing h and a
    maximum at an interior point the scan loses at most ``max|f''| h^2 / 8``,
    ``|f''| <= m^2 |P|_1 (3 + |g''|)``. For 1 < p < 2, ``g'`` is only Hölder of
    order p-1 at t = 0, which adds ``8 m |P|_1 h^p``. Corners and kinks
    (p in {1, inf}) are grid nodes.
    """
    p = check_exponent(p)
    return coeff_norm(P, 1) * _resolution_factor(p, nodes, P.degree)


def best_scan(coeffs: np.ndarray, p: float, nodes: int, coarse: int = 129) -> tuple[int, float]:
    """Index and value of ``max_i sup_norm_scan(coeffs[i], nodes)``.

    A coarse scan first discards rows that cannot reach the best coarse value
    even after adding their resolution bound; the fine scan then runs on the
    survivors only. The result equals the fine scan over all rows.
    """
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=float))
    p = check_exponent(p)
    if nodes <= coarse:
        vals = sup_norm_scan_many(coeffs, p, nodes)
        i = int(np.argmax(vals))
        return i, float(vals[i])
    rough = sup_norm_scan_many(coeffs, p, coarse)
    slack = np.abs(coeffs).sum(axis=1) * _resolution_factor(p, coarse, coeffs.shape[1] - 1)
    keep = np.flatnonzero(rough + slack >= rough.max())
    vals = sup_norm_scan_many(coeffs[keep], p, nodes)
    j = int(np.argmax(vals))
    return int(keep[j]), float(vals[j])


def random_unit_polys(p: float, samples: int, seed: int, degree: int = 2,
                      cfg: ScanConfig | None = None) -> np.ndarray:
    """Seeded standard-normal coefficient rows scaled to unit l_p sup-norm."""
    rng = np.random.default_rng(seed)
    c = rng.standard_normal((samples, degree + 1))
    return c / sup_norm_many(c, p, cfg or SANDWICH_SCAN)[:, None]


def _lq_rows(c: np.ndarray, q: float) -> np.ndarray:
    a = np.abs(c)
    if q == INF:
        return a.max(axis=1)
    return np.sum(a ** q, axis=1) ** (1.0 / q)


def sandwich_check(q, p, samples: int = 100_000, seed: int = 0,
                   tol: float = SANDWICH_TOL, cfg: ScanConfig | None = None,
                   estimate_grid: int = 128) -> OracleReport:
    """Check ``k - tol <= |P|_q <= K + tol`` on seeded random unit-norm P.

    ``max_violation`` is the largest excess beyond k or K (before the
    tolerance); ``extra["violations"]`` counts samples outside the tolerance.

    The lower side is enforced only when k is exact (q in {1, inf}); otherwise
    the estimate (an upper bound on k) is reported but not enforced.
    """
    q, p = check_exponent(q), check_exponent(p)
    K = float(big_K(q, p).value)
    exact_k = q in (1.0, INF)
    k = float(little_k(q, p).value if exact_k else estimate_little_k(q, p, estimate_grid).value)
    c = random_unit_polys(p, samples, seed, cfg=cfg)
    lq = _lq_rows(c, q)
    upper = lq - K
    lower = k - lq if exact_k else np.zeros_like(lq)
    excess = np.maximum(upper, lower)
    viol = np.maximum(excess, 0.0)
    i = int(np.argmax(excess))
    worst = f"P={HomogeneousPoly2(tuple(c[i]))} |P|_q={lq[i]:.15g}"
    report = OracleReport(
        checked=samples,
        max_violation=float(viol.max()),
        worst_case=worst,
        passed=bool(viol.max() <= tol),
        tolerance=tol,
        notes=f"q={q:g} p={p:g} seed={seed} k={k:.12g}{'' if exact_k else ' (estimated)'} K={K:.12g}",
        extra={"k": k, "K": K, "k_exact": exact_k, "violations": int(np.sum(excess > tol)),
               "empirical_min": float(lq.min()),
               "empirical_max": float(lq.max()), "seed": seed},
    )
    return report


def _family_sweep(q: float, p: float, grid: int):
    """Parameters, formula values and generated members for the regime of p."""
    if p == 1:
        ts = np.linspace(2.0, 4.0, grid + 1)[1:]
        return ts, obj.f_q1(q, ts), [ext_sup1("b", float(t)) for t in ts]
    if p == INF:
        ts = np.linspace(0.5, 1.0, grid + 1)
        return ts, obj.f_qinf(q, ts), [ext_supinf("c", float(t), (1, 1)) for t in ts]
    ts = np.linspace(0.0, 1.0, grid + 1)
    return ts, obj.f_qp(q, p, ts), [ext_supp(p, float(t), "ii") for t in ts]


def family_consistency_check(q, p, grid: int = 10_000,
                             tol: float = CONSISTENCY_TOL) -> OracleReport:
    """Compare the closed-form objective with ``|member|_q`` along the family.

    For 1 < p < 2 the raw and normalized family-iii members are evaluated too;
    ``extra`` records whether either ever exceeds family ii.
    """
    q, p = check_exponent(q), check_exponent(p)
    if p == 2:
        raise ValueError("no family formula at p = 2")
    ts, f, members = _family_sweep(q, p, grid)
    direct = np.array([coeff_norm(P, q) for P in members])
    diff = np.abs(np.asarray(f) - direct)
    i = int(np.argmax(diff))
    extra = {"values_min": float(np.min(f)), "values_max": float(np.max(f))}
    notes = f"q={q:g} p={p:g}"
    if 1 < p < 2:
        raw, norm = [], []
        for t in ts:
            beta = complement(float(t), p)
            norm.append(coeff_norm(ext_supp(p, float(t), "iii"), q))
            if abs(float(t) - beta) > 1e-9:
                raw.append((coeff_norm(ext_supp(p, float(t), "iii", normalize=False), q),
                            coeff_norm(ext_supp(p, float(t), "ii"), q)))
        raw_excess = max(r - d for r, d in raw)
        norm_excess = float(np.max(np.array(norm) - direct))
        extra.update(raw_iii_excess=raw_excess, normalized_iii_excess=norm_excess,
                     iii_dominates=norm_excess > tol)
        notes += (f"; raw family iii exceeds ii by up to {raw_excess:.3g} but is not unit-norm;"
                  f" normalized iii excess {norm_excess:.2e}")
    return OracleReport(
        checked=len(ts),
        max_violation=float(diff[i]),
        worst_case=f"t={ts[i]:.17g} formula={f[i]:.17g} direct={direct[i]:.17g}",
        passed=bool(diff[i] <= tol),
        tolerance=tol,
        notes=notes,
        extra=extra,
    )


def unit_norm_defect(P: HomogeneousPoly2, p: float, cfg: ScanConfig | None = None) -> float:
    """``|sup_norm(P, p) - 1|``."""
    return abs(float(sup_norm_many(P.array[None, :], p, cfg)[0]) - 1.0)


__all__ = [
    "OracleReport", "sup_norm_scan_many", "sup_norm_oracle", "resolution_bound",
    "best_scan", "random_unit_polys", "sandwich_check", "family_consistency_check", "unit_norm_defect",
]
