"""Homogeneous polynomials on R^2: evaluation, coefficient norms, sup-norms on
l_p spheres and overflow-safe powers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .optimize import DEFAULT_SCAN, ScanConfig, golden_max_batch

INF = math.inf

# Polynomials per chunk in batched sup-norm evaluation; bounds peak memory.
_CHUNK = 256


def parse_exponent(value) -> float:
    """Read an exponent in [1, inf]: numbers, ``"inf"`` or fractions like ``"4/3"``."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "∞", "+inf"):
            v = INF
        else:
            v = float(Fraction(text))
    else:
        v = float(value)
    if math.isnan(v) or v < 1:
        raise ValueError(f"exponent must lie in [1, inf], got {value!r}")
    return v


def check_exponent(p: float) -> float:
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ValueError(f"exponent must lie in [1, inf], got {p!r}")
    return p


@dataclass(frozen=True)
class HomogeneousPoly2:
    """``sum_k coeffs[k] * x**(m-k) * y**k`` with ``m = len(coeffs) - 1``."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if not c:
            raise ValueError("a polynomial needs at least one coefficient")
        if not all(math.isfinite(v) for v in c):
            raise ValueError(f"coefficients must be finite: {c}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def of(cls, *coeffs: float) -> "HomogeneousPoly2":
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=float)

    def __call__(self, x, y):
        return evaluate(self, x, y)

    def __add__(self, other: "HomogeneousPoly2") -> "HomogeneousPoly2":
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        return HomogeneousPoly2(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, s: float) -> "HomogeneousPoly2":
        return HomogeneousPoly2(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def __neg__(self) -> "HomogeneousPoly2":
        return self * -1.0

    def __truediv__(self, s: float) -> "HomogeneousPoly2":
        return HomogeneousPoly2(tuple(a / s for a in self.coeffs))

    def __str__(self) -> str:
        m = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "".join(
                f"{v}^{e}" if e > 1 else v for v, e in (("x", m - k), ("y", k)) if e > 0
            )
            terms.append(f"{c:+.6g}{'*' + mono if mono else ''}")
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ScaledLogValue:
    """A positive quantity of a degree-``degree`` object stored as its logarithm."""

    log_magnitude: float
    degree: int

    @property
    def per_degree_ratio(self) -> float:
        return math.exp(self.log_magnitude / self.degree)

    @property
    def value(self) -> float:
        """The plain float; ``inf`` when it does not fit in a double."""
        try:
            return math.exp(self.log_magnitude)
        except OverflowError:
            return INF


@dataclass(frozen=True)
class SpherePoint:
    x: float
    y: float
    t: float
    branch: int
    transposed: bool = False


def _horner(coeffs, x, y):
    # H_j = H_{j-1} * x + c_j * y**j; coefficients may be scalars or arrays
    # broadcasting against x and y.
    h = coeffs[0] * np.ones_like(x * y)
    ypow = np.ones_like(h)
    for c in coeffs[1:]:
        ypow = ypow * y
        h = h * x + c * ypow
    return h


def evaluate(P: HomogeneousPoly2, x, y):
    """Value of ``P`` at ``(x, y)``; works elementwise on arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = _horner(P.coeffs, x, y)
    return float(out) if out.ndim == 0 else out


def coeff_norm(P: HomogeneousPoly2 | Sequence[float], q: float) -> float:
    """l_q norm of the coefficient vector."""
    c = np.abs(np.asarray(P.coeffs if isinstance(P, HomogeneousPoly2) else P, dtype=float))
    q = check_exponent(q)
    if q == INF:
        return float(c.max())
    if q == 1:
        return float(c.sum())
    scale = c.max()
    if scale == 0:
        return 0.0
    return float(scale * np.sum((c / scale) ** q) ** (1.0 / q))


def complement(t, p: float):
    """``(1 - |t|**p)**(1/p)`` for ``|t| <= 1``, exact at ``t = 0`` and ``|t| = 1``.

    ``p = inf`` gives 1 everywhere (the flat edges of the square).
    """
    t = np.abs(np.asarray(t, dtype=float))
    if p == INF:
        out = np.ones_like(t)
    elif p == 1:
        out = 1.0 - t
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.exp(np.log1p(-np.exp(p * np.log(t))) / p)
        out = np.where(t >= 1.0, 0.0, out)
        out = np.where(t == 0.0, 1.0, out)
    return float(out) if out.ndim == 0 else out


def patch_limit(p: float) -> float:
    """Largest ``|t|`` in a chart patch: the diagonal point ``2**(-1/p)``."""
    return 1.0 if p == INF else 2.0 ** (-1.0 / p)


def sphere_point(p: float, t: float, branch: int = 1, transposed: bool = False) -> SpherePoint:
    """Point of the unit l_p sphere on the chart ``(t, branch * g(t))``.

    ``transposed=True`` gives ``(branch * g(t), t)``. For ``p = inf`` the four
    (branch, transposed) combinations are the four edges of the square.
    """
    p = check_exponent(p)
    if not -1.0 <= t <= 1.0:
        raise ValueError(f"chart parameter must lie in [-1, 1], got {t!r}")
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    g = branch * complement(t, p)
    x, y = (g, t) if transposed else (t, g)
    return SpherePoint(float(x), float(y), float(t), branch, transposed)


def _patches(p: float, t: np.ndarray):
    """Points of the four chart patches, stacked: shape (4, len(t)) for x and y."""
    g = complement(t, p)
    xs = np.stack([t, t, g, -g])
    ys = np.stack([g, -g, t, t])
    return xs, ys


def _local_maxima(v: np.ndarray, k: int) -> np.ndarray:
    """Indices of the ``k`` largest local maxima along the last axis (plateaus included)."""
    left = np.concatenate([np.full(v.shape[:-1] + (1,), -np.inf), v[..., :-1]], axis=-1)
    right = np.concatenate([v[..., 1:], np.full(v.shape[:-1] + (1,), -np.inf)], axis=-1)
    score = np.where((v >= left) & (v >= right), v, -np.inf)
    k = min(k, v.shape[-1])
    # stable sort keeps ties ordered by index
    return np.argsort(-score, axis=-1, kind="stable")[..., :k]


def sup_norm_many(coeffs: np.ndarray, p: float, cfg: ScanConfig | None = None,
                  n_refine: int = 3) -> np.ndarray:
    """Sup-norms on the unit l_p sphere of the rows of ``coeffs`` (shape (B, m+1)).

    The sphere is covered by four patches ``(t, ±g(t))`` and ``(±g(t), t)`` with
    ``|t| <= 2**(-1/p)``, on which the chart is well conditioned. Each patch is
    scanned on ``cfg.scan_points + 1`` nodes; the ``n_refine`` best local maxima
    per patch are refined by golden-section search to width ``cfg.refine_tol``.
    """
    cfg = cfg or DEFAULT_SCAN
    p = check_exponent(p)
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=float))
    tau = patch_limit(p)
    nodes = np.linspace(-tau, tau, cfg.scan_points + 1)
    h = nodes[1] - nodes[0]
    xs, ys = _patches(p, nodes)
    which = np.arange(4)
    out = np.empty(coeffs.shape[0])
    for start in range(0, coeffs.shape[0], _CHUNK):
        c = coeffs[start:start + _CHUNK]                       # (b, m+1)
        cols = [c[:, k, None, None] for k in range(c.shape[1])]
        vals = np.abs(_horner(cols, xs[None], ys[None]))       # (b, 4, N)
        best_scan = vals.max(axis=(1, 2))
        idx = _local_maxima(vals, n_refine)                    # (b, 4, K)
        t0 = nodes[idx]
        lo = np.maximum(t0 - h, -tau)
        hi = np.minimum(t0 + h, tau)
        pid = np.broadcast_to(which[None, :, None], idx.shape)

        def f(t, pid=pid, cols=cols):
            g = complement(t, p)
            x = np.where(pid < 2, t, np.where(pid == 2, g, -g))
            y = np.where(pid < 2, np.where(pid == 0, g, -g), t)
            return np.abs(_horner(cols, x, y))

        _, fv = golden_max_batch(f, lo, hi, cfg.refine_tol, cfg.refine_iters_max)
        out[start:start + _CHUNK] = np.maximum(best_scan, fv.max(axis=(1, 2)))
    return out


def sup_norm(P: HomogeneousPoly2, p: float, cfg: ScanConfig | None = None) -> float:
    """``max |P|`` over the unit l_p sphere (equal to the sup over the ball)."""
    return float(sup_norm_many(P.array[None, :], p, cfg)[0])


def log_l2_of_powers(coeffs: np.ndarray, k: int) -> np.ndarray:
    """``log |P**k|_2`` for each row ``P`` of ``coeffs``, by renormalized convolution.

    After every multiplication the coefficient rows are divided by their
    max-abs entry and the log of that factor is accumulated.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    c = np.atleast_2d(np.asarray(coeffs, dtype=float))
    acc, logscale = _power_rows(c, k)
    with np.errstate(divide="ignore"):
        return logscale + np.log(np.sqrt(np.sum(acc * acc, axis=1)))


def _power_rows(c: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    b, n = c.shape
    m = n - 1
    acc = np.zeros((b, k * m + 1))
    acc[:, 0] = 1.0
    logscale = np.zeros(b)
    length = 1
    for _ in range(k):
        new = np.zeros_like(acc)
        for j in range(n):
            new[:, j:j + length] += c[:, j, None] * acc[:, :length]
        length += m
        scale = np.abs(new[:, :length]).max(axis=1)
        safe = np.where(scale > 0, scale, 1.0)
        acc = new / safe[:, None]
        with np.errstate(divide="ignore"):
            logscale += np.log(scale)
    return acc, logscale


def power(P: HomogeneousPoly2, k: int) -> tuple[HomogeneousPoly2, ScaledLogValue]:
    """``P**k`` as (max-abs-normalized polynomial, log of the scale factor)."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    acc, logscale = _power_rows(P.array[None, :], k)
    return HomogeneousPoly2(tuple(acc[0])), ScaledLogValue(float(logscale[0]), k * P.degree)


def l2_of_power(P: HomogeneousPoly2, k: int) -> ScaledLogValue:
    """``|P**k|_2`` carried as a logarithm, with the per-degree ratio for reporting."""
    return ScaledLogValue(float(log_l2_of_powers(P.array, k)[0]), k * P.degree)


def as_polys(rows: Iterable[Sequence[float]]) -> list[HomogeneousPoly2]:
    return [HomogeneousPoly2(tuple(r)) for r in rows]
