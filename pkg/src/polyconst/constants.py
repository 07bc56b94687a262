"""Equivalence constants k_{2,q,p}, K_{2,q,p}, Hardy-Littlewood constants for
2-homogeneous polynomials on l_p^2, and lower bounds for higher degrees."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import objectives as obj
from .extremal import (diagonal_extremes, ext_coeff_ball, ext_sup1, ext_supinf,
                       ext_supp)
from .optimize import DEFAULT_SCAN, OptResult, ScanConfig, maximize
from .poly import (INF, HomogeneousPoly2, ScaledLogValue, check_exponent,
                   coeff_norm, complement, log_l2_of_powers, sup_norm, sup_norm_many)

METHODS = ("closed-form", "optimized", "enumerated", "estimated", "conjectural")


@dataclass(frozen=True)
class ConstantResult:
    value: float | ScaledLogValue
    attaining_parameter: float | None = None
    attaining_polynomial: HomogeneousPoly2 | None = None
    method: str = "optimized"
    notes: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def __float__(self) -> float:
        if isinstance(self.value, ScaledLogValue):
            return self.value.value
        return float(self.value)


@dataclass(frozen=True)
class _Candidate:
    value: float
    parameter: float | None
    polynomial: HomogeneousPoly2
    method: str
    label: str


def _best(cands: list[_Candidate]) -> _Candidate:
    # first of the maximal candidates wins, so listing order is the tie-break
    best = cands[0]
    for c in cands[1:]:
        if c.value > best.value:
            best = c
    return best


def _optimized(opt: OptResult, poly: HomogeneousPoly2, label: str) -> _Candidate:
    return _Candidate(opt.value, opt.argmax, poly, "optimized", label)


def _k_sup1(q: float, cfg: ScanConfig) -> list[_Candidate]:
    a = ext_sup1("a", signs=(1, 1, 1))
    cands = [_Candidate(coeff_norm(a, q), None, a, "enumerated", "CKK-a")]
    opt = maximize(lambda t: obj.f_q1(q, t), 2.0, 4.0, cfg, vectorized=True)
    # t = 2 is the sub-family a member x^2 + 2xy - y^2
    P = ext_sup1("b", opt.argmax) if opt.argmax > 2.0 else ext_sup1("a", signs=(1, 1, -1))
    cands.append(_optimized(opt, P, "CKK-b"))
    return cands


def _k_supinf(q: float, cfg: ScanConfig) -> list[_Candidate]:
    a = ext_supinf("a", signs=(1,))
    cands = [_Candidate(1.0, None, a, "enumerated", "CK-a/b")]
    opt = maximize(lambda t: obj.f_qinf(q, t), 0.5, 1.0, cfg, vectorized=True)
    cands.append(_optimized(opt, ext_supinf("c", opt.argmax), "CK-c"))
    return cands


def _k_supp(q: float, p: float, cfg: ScanConfig) -> list[_Candidate]:
    cands = []
    if p > 2:
        r = p / (p - 2.0)
        if q >= r:
            # (a^q + c^q)^(1/q) <= (a^r + c^r)^(1/r) = 1, attained at a = 1
            cands.append(_Candidate(1.0, 1.0, ext_supp(p, 1.0, "i"), "closed-form", "Grecu-i"))
        else:
            opt = maximize(lambda a: obj.diag(q, p, a), 0.0, 1.0, cfg, vectorized=True)
            cands.append(_optimized(opt, ext_supp(p, opt.argmax, "i"), "Grecu-i"))
    else:
        for P in diagonal_extremes(p):
            cands.append(_Candidate(coeff_norm(P, q), None, P, "enumerated", "Grecu-i"))
    opt = maximize(lambda t: obj.f_qp(q, p, t), 0.0, 1.0, cfg, vectorized=True)
    cands.append(_optimized(opt, ext_supp(p, opt.argmax, "ii"), "Grecu-ii"))
    return cands


def _k_sup2(q: float, cfg: ScanConfig) -> ConstantResult:
    # unit ball of the l_2 polynomial norm: symmetric 2x2 matrices of spectral
    # norm <= 1; its extreme points are +-I and the reflections
    # cos(th) (x^2 - y^2) + 2 sin(th) xy
    def refl(th):
        return obj._lq([(2, np.cos(th)), (1, 2.0 * np.sin(th))], q)

    opt = maximize(refl, 0.0, math.pi, cfg, vectorized=True)
    ident = float(obj._lq([(2, 1.0)], q))
    th = opt.argmax
    if ident >= opt.value:
        value, poly, par = ident, HomogeneousPoly2((1.0, 0.0, 1.0)), None
    else:
        value, par = opt.value, th
        poly = HomogeneousPoly2((math.cos(th), 2.0 * math.sin(th), -math.cos(th)))
    # the family-ii formula on either side of p = 2 converges to the same value
    eps = 1e-6
    side = [maximize(lambda t, pp=pp: obj.f_qp(q, pp, t), 0.0, 1.0, cfg, vectorized=True).value
            for pp in (2.0 - eps, 2.0 + eps)]
    limit = max(max(side), ident)
    return ConstantResult(value, par, poly, "estimated",
                          notes=f"p=2 via reflections; adjacent-regime limit {limit:.12g}",
                          extra={"adjacent_limit": limit})


def big_K(q, p, cfg: ScanConfig | None = None) -> ConstantResult:
    """Best K with ``|P|_q <= K ||P||_p`` for 2-homogeneous P on l_p^2.

    Maximizes ``|.|_q`` over the extreme points of the unit ball of
    ``||.||_p``. For 1 < p < 2 the result is tagged ``conjectural``; p = 2 is
    served by the reflection family and tagged ``estimated``.
    """
    cfg = cfg or DEFAULT_SCAN
    q, p = check_exponent(q), check_exponent(p)
    if p == 2:
        return _k_sup2(q, cfg)
    if p == 1:
        cands = _k_sup1(q, cfg)
    elif p == INF:
        cands = _k_supinf(q, cfg)
    else:
        cands = _k_supp(q, p, cfg)
    best = _best(cands)
    method = "conjectural" if 1 < p < 2 else best.method
    notes = best.label
    if 1 < p < 2:
        notes += "; family iii normalizes onto family ii"
    return ConstantResult(best.value, best.parameter, best.polynomial, method, notes,
                          extra={c.label: c.value for c in cands})


def little_k(q, p, cfg: ScanConfig | None = None) -> ConstantResult:
    """Best k with ``k ||P||_p <= |P|_q``, for q in {1, inf}: ``1 / max ||E||_p``
    over the finitely many extreme points E of the unit coefficient ball."""
    q, p = check_exponent(q), check_exponent(p)
    if q not in (1.0, INF):
        raise ValueError("little_k needs q in {1, inf}; use estimate_little_k")
    ext = ext_coeff_ball(q, 2)
    norms = sup_norm_many(np.array([E.coeffs for E in ext]), p, cfg)
    i = int(np.argmax(norms))
    return ConstantResult(1.0 / float(norms[i]), None, ext[i], "enumerated",
                          notes=f"k' = {norms[i]:.12g}")


def _sphere_grid(q: float, grid: int) -> np.ndarray:
    # directions on a half sphere (P and -P have equal norms); doubling the
    # grid keeps every previous node
    th = np.arange(grid + 1) * (math.pi / grid)
    ph = np.arange(grid) * (math.pi / grid)
    T, F = np.meshgrid(th, ph, indexing="ij")
    v = np.stack([np.sin(T) * np.cos(F), np.sin(T) * np.sin(F), np.cos(T)], axis=-1).reshape(-1, 3)
    v = v[np.abs(v).max(axis=1) > 0]
    if q == INF:
        n = np.abs(v).max(axis=1)
    else:
        n = np.sum(np.abs(v) ** q, axis=1) ** (1.0 / q)
    return v / n[:, None]


def estimate_little_k(q, p, grid: int = 256, scan_points: int = 2049) -> ConstantResult:
    """Upper estimate of k_{2,q,p} for 1 < q < inf.

    Every node of a (grid+1) x grid direction mesh is scaled onto the unit
    l_q coefficient sphere and its sup-norm is bounded from below by a plain
    scan; k is 1 over the largest value found. Both approximations only shrink
    k', so the result is never below the true k, and doubling ``grid`` never
    increases it.
    """
    q, p = check_exponent(q), check_exponent(p)
    if q in (1.0, INF):
        raise ValueError("use little_k for q in {1, inf}")
    if grid < 16:
        raise ValueError(f"grid must be >= 16, got {grid}")
    from .oracle import best_scan

    pts = _sphere_grid(q, grid)
    i, best_v = best_scan(pts, p, scan_points)
    P = HomogeneousPoly2(tuple(pts[i]))
    return ConstantResult(1.0 / best_v, None, P, "estimated",
                          notes=f"grid={grid}, {len(pts)} directions")


def hl_exponent(p: float) -> tuple[float, str]:
    """Hardy-Littlewood coefficient exponent q for degree 2 on l_p^2, and regime."""
    p = check_exponent(p)
    if not p > 2:
        raise ValueError(f"Hardy-Littlewood constants need p > 2, got {p!r}")
    if p == INF:
        return 4.0 / 3.0, "D"
    if p < 4:
        return p / (p - 2.0), "C"
    if p == 4:
        return 2.0, "C=D"
    return 4.0 * p / (3.0 * p - 4.0), "D"


def hl_constant(p, cfg: ScanConfig | None = None) -> ConstantResult:
    """C_{R,2,p}(2) for 2 < p <= 4, D_{R,2,p}(2) for p >= 4 (p = inf allowed)."""
    q, regime = hl_exponent(p)
    res = big_K(q, p, cfg)
    notes = f"regime {regime}, q={q:.12g}; {res.notes}"
    extra = {**res.extra, "q": q, "regime": regime}
    if res.notes.startswith("Grecu-ii") and res.attaining_parameter is not None:
        # swapping alpha and beta flips the sign of A and keeps B: same |.|_q
        extra["mirror_parameter"] = complement(res.attaining_parameter, p)
    return ConstantResult(res.value, res.attaining_parameter, res.attaining_polynomial,
                          res.method, notes, extra=extra)


def phi_psi(p, cfg: ScanConfig | None = None) -> tuple[float, float]:
    """Maxima of the diagonal-family objective (Phi) and of the family-ii
    objective (Psi) at q = 4p/(3p-4), for p >= 4."""
    p = check_exponent(p)
    if p < 4 or p == INF:
        raise ValueError(f"phi_psi needs finite p >= 4, got {p!r}")
    q = 4.0 * p / (3.0 * p - 4.0)
    phi = maximize(lambda a: obj.phi_diag(p, a), 0.0, 1.0, cfg, vectorized=True).value
    psi = maximize(lambda t: obj.f_qp(q, p, t), 0.0, 1.0, cfg, vectorized=True).value
    return phi, psi


def baseline_bound(m: int, p: float) -> float:
    """``2^((m^2 p + 10m - p - 6m^2 - 4)/(4mp))``, a known lower bound for
    D_{R,m,p}, m >= 2 and 2m <= p < inf."""
    if m < 2 or not 2 * m <= p < INF:
        raise ValueError(f"need m >= 2 and 2m <= p < inf, got m={m}, p={p}")
    return 2.0 ** ((m * m * p + 10 * m - p - 6 * m * m - 4) / (4.0 * m * p))


POWER_SCAN = ScanConfig(scan_points=512)


def _power_bound(m: int, cfg: ScanConfig, y2_sign: float) -> tuple[OptResult, HomogeneousPoly2]:
    p = 4.0 * m

    def coeffs(alpha):
        rows = []
        for a in np.atleast_1d(alpha):
            A, B, _ = ext_supp(p, float(a), "ii").coeffs
            rows.append((A, B, y2_sign * A))
        return np.array(rows)

    opt = maximize(lambda a: log_l2_of_powers(coeffs(a), m), 0.0, 1.0, cfg, vectorized=True)
    return opt, HomogeneousPoly2(tuple(coeffs(opt.argmax)[0]))


def power_lower_bound(m: int, alpha_cfg: ScanConfig | None = None) -> ConstantResult:
    """Lower bound ``max_alpha |P_alpha^m|_2`` for D_{R,2m,4m}(2) = C_{R,2m,4m}(2).

    ``P_alpha`` runs over family ii at p = 4m, so ``||P^m||_{4m} = 1``. The
    value is a :class:`ScaledLogValue` of degree 2m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    opt, P = _power_bound(m, alpha_cfg or POWER_SCAN, -1.0)
    return ConstantResult(ScaledLogValue(opt.value, 2 * m), opt.argmax, P, "optimized",
                          notes=f"p={4 * m}, degree {2 * m}")


def power_ratio_same_sign(m: int, alpha_cfg: ScanConfig | None = None) -> ConstantResult:
    """``max_alpha |Q_alpha^m|_2`` for ``Q = A (x^2 + y^2) + B xy``, where A, B
    are the family-ii coefficients at p = 4m.

    ``Q`` is not a unit vector of the l_{4m} polynomial norm (its norm is
    about 2), so this is not a lower bound for any constant; it exists only
    to regenerate tabulated values computed this way. The true sup-norm of the
    maximizer is recorded in ``extra["sup_norm"]``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    opt, Q = _power_bound(m, alpha_cfg or POWER_SCAN, 1.0)
    return ConstantResult(ScaledLogValue(opt.value, 2 * m), opt.argmax, Q, "estimated",
                          notes="same-sign variant; not a valid lower bound",
                          extra={"sup_norm": sup_norm(Q, 4.0 * m)})


DEGREE5_ASYMMETRIC = (0.000007233947, 0.607036736710, -0.000044725373,
                      -0.982210559287, 0.0000283144953, 0.1875854561207)
DEGREE5_SYMMETRIC_ABC = (0.19462, 0.66008, 0.97833)


def symmetric_quintic(a: float, b: float, c: float) -> HomogeneousPoly2:
    """``a x^5 - b x^4 y - c x^3 y^2 + c x^2 y^3 + b x y^4 - a y^5``."""
    return HomogeneousPoly2((a, -b, -c, c, b, -a))


def _ratio_result(P: HomogeneousPoly2, label: str, cfg: ScanConfig | None) -> ConstantResult:
    l2 = coeff_norm(P, 2)
    sn = sup_norm(P, 10.0, cfg)
    return ConstantResult(l2 / sn, None, P, "closed-form", notes=label,
                          extra={"l2": l2, "sup_norm": sn})


def showcase_degree5(cfg: ScanConfig | None = None) -> tuple[ConstantResult, ConstantResult]:
    """``|P|_2 / ||P||_10`` for the fixed asymmetric quintic and the symmetric
    quintic with (a, b, c) = (0.19462, 0.66008, 0.97833)."""
    asym = _ratio_result(HomogeneousPoly2(DEGREE5_ASYMMETRIC), "asymmetric", cfg)
    sym = _ratio_result(symmetric_quintic(*DEGREE5_SYMMETRIC_ABC), "symmetric", cfg)
    return asym, sym
