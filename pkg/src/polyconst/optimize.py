"""Deterministic 1-D global maximization: uniform scan, then golden-section refinement."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class ConvergenceError(RuntimeError):
    """Refinement failed to shrink a bracket to the requested width."""


class NonFiniteObjective(ValueError):
    """The objective returned NaN or inf at a scan node."""

    def __init__(self, index: int, t: float, value: float):
        super().__init__(f"objective is not finite at node {index} (t={t!r}): {value!r}")
        self.index = index
        self.t = t
        self.value = value


@dataclass(frozen=True)
class ScanConfig:
    scan_points: int = 4096
    refine_tol: float = 1e-12
    refine_iters_max: int = 200

    def __post_init__(self):
        if self.scan_points < 64:
            raise ValueError(f"scan_points must be >= 64, got {self.scan_points}")
        if not self.refine_tol > 0:
            raise ValueError(f"refine_tol must be positive, got {self.refine_tol}")
        if self.refine_iters_max < 1:
            raise ValueError("refine_iters_max must be positive")


DEFAULT_SCAN = ScanConfig()


@dataclass(frozen=True)
class OptResult:
    argmax: float
    value: float
    bracket_width: float
    evaluations: int
    method: str = "scan+golden"


def golden_max(f: Callable[[float], float], lo: float, hi: float,
               tol: float, max_iter: int) -> tuple[float, float, float, int]:
    """Golden-section search for a maximum of ``f`` on ``[lo, hi]``.

    Returns ``(x, f(x), final_width, evaluations)`` where ``x`` is the best
    interior probe seen.
    """
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    evals = 2
    it = 0
    while b - a > tol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        evals += 1
        it += 1
    if b - a > tol:
        raise ConvergenceError(f"bracket width {b - a:.3e} > {tol:.3e} after {it} iterations")
    if fc >= fd:
        return c, fc, b - a, evals
    return d, fd, b - a, evals


def golden_max_batch(f: Callable[[np.ndarray], np.ndarray], lo: np.ndarray, hi: np.ndarray,
                     tol: float, max_iter: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized golden-section search over many independent brackets.

    ``f`` maps an array of abscissae (same shape as ``lo``) to objective values.
    Every bracket is iterated the same number of times, enough for the widest
    one to reach ``tol``.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    width = float(np.max(b - a)) if a.size else 0.0
    n_iter = 0
    if width > tol:
        n_iter = int(math.ceil(math.log(tol / width) / math.log(INV_PHI)))
    if n_iter > max_iter:
        raise ConvergenceError(f"need {n_iter} golden steps, limit is {max_iter}")
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(n_iter):
        left = fc >= fd
        a_new = np.where(left, a, c)
        b_new = np.where(left, d, b)
        c_new = np.where(left, b_new - INV_PHI * (b_new - a_new), d)
        d_new = np.where(left, c, a_new + INV_PHI * (b_new - a_new))
        fp = f(np.where(left, c_new, d_new))
        fc, fd = np.where(left, fp, fd), np.where(left, fc, fp)
        a, b, c, d = a_new, b_new, c_new, d_new
    x = np.where(fc >= fd, c, d)
    return x, np.maximum(fc, fd)


def maximize(f: Callable, lo: float, hi: float, cfg: ScanConfig | None = None,
             *, vectorized: bool = False) -> OptResult:
    """Maximize a continuous ``f`` on ``[lo, hi]``.

    Scans ``cfg.scan_points + 1`` uniform nodes (both endpoints included),
    keeps the best node (ties go to the smaller abscissa) and refines the
    bracket formed by its two neighbours with golden-section search. The
    returned value is never below the best scanned value.

    With ``vectorized=True`` ``f`` is called once on the whole node array.
    """
    cfg = cfg or DEFAULT_SCAN
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    nodes = np.linspace(lo, hi, cfg.scan_points + 1)
    if vectorized:
        vals = np.asarray(f(nodes), dtype=float)
    else:
        vals = np.array([f(float(t)) for t in nodes], dtype=float)
    bad = np.flatnonzero(~np.isfinite(vals))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteObjective(i, float(nodes[i]), float(vals[i]))
    i = int(np.argmax(vals))
    best_t, best_v = float(nodes[i]), float(vals[i])
    a = float(nodes[max(i - 1, 0)])
    b = float(nodes[min(i + 1, cfg.scan_points)])
    scalar_f = (lambda t: float(f(np.array([t]))[0])) if vectorized else f
    t, v, width, evals = golden_max(scalar_f, a, b, cfg.refine_tol, cfg.refine_iters_max)
    evals += len(nodes)
    if math.isfinite(v) and v > best_v:
        best_t, best_v = t, v
    return OptResult(argmax=best_t, value=best_v, bracket_width=width, evaluations=evals)
