"""Closed-form objectives whose maxima give the equivalence constants K_{2,q,p}.

Each function is the coefficient l_q norm of a one-parameter extreme family
written out explicitly, so it can be cross-checked against the generators in
:mod:`polyconst.extremal`. All accept scalars or numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .poly import INF, check_exponent, complement

DOMAINS = {
    "f_q1": (2.0, 4.0),
    "f_qinf": (0.5, 1.0),
    "f_qp": (0.0, 1.0),
    "phi_diag": (0.0, 1.0),
    "diag": (0.0, 1.0),
}


def _check_domain(t, lo: float, hi: float, name: str) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(~((arr >= lo) & (arr <= hi))):
        raise ValueError(f"{name}: parameter outside [{lo}, {hi}]: {t!r}")
    return arr


def _out(v: np.ndarray):
    return float(v) if np.ndim(v) == 0 else v


def _lq(parts, q: float):
    """l_q norm of a family of coefficient magnitudes given as (multiplicity, value) pairs."""
    if q == INF:
        return np.maximum.reduce([np.abs(v) for _, v in parts])
    total = sum(n * np.abs(v) ** q for n, v in parts)
    return total ** (1.0 / q)


def _powz(base, e: float):
    """``base**e`` with ``0**e = 0`` for e > 0, without relying on pow edge cases."""
    base = np.asarray(base, dtype=float)
    safe = np.where(base > 0, base, 1.0)
    return np.where(base > 0, safe ** e, 0.0)


def f_q1(q: float, t):
    """``(2^(1-q) (4t - t^2)^(q/2) + t^q)^(1/q)`` on [2, 4]."""
    q = check_exponent(q)
    t = _check_domain(t, *DOMAINS["f_q1"], "f_q1")
    root = np.sqrt(np.maximum(4.0 * t - t * t, 0.0))
    if q == INF:
        return _out(np.maximum(root / 2.0, t))
    val = (2.0 ** (1.0 - q) * _powz(root, q) + t ** q) ** (1.0 / q)
    # at t = 4 the first term vanishes and the value is t itself
    return _out(np.where(root == 0.0, t, val))


def f_qinf(q: float, t):
    """``(2 t^q + 2^q t^(q/2) (1-t)^(q/2))^(1/q)`` on [1/2, 1]."""
    q = check_exponent(q)
    t = _check_domain(t, *DOMAINS["f_qinf"], "f_qinf")
    if q == INF:
        return _out(np.maximum(t, 2.0 * np.sqrt(t * (1.0 - t))))
    val = (2.0 * t ** q + 2.0 ** q * _powz(t * (1.0 - t), q / 2.0)) ** (1.0 / q)
    return _out(val)


def f_qp(q: float, p: float, t):
    """Coefficient l_q norm along family ii on l_p^2, parameter t in [0, 1].

    ``[2 |(2t^p - 1)/D|^q + (2 t s (t^(p-2) + s^(p-2)) / D)^q]^(1/q)`` with
    ``s = (1 - t^p)^(1/p)`` and ``D = t^2 + s^2``. At t in {0, 1} the cross term
    is 0 and the value is ``2^(1/q)``. For 1 < p < 2 the value is still defined
    but the identification with K_{2,q,p} is only conjectural.
    """
    q = check_exponent(q)
    p = check_exponent(p)
    if p == INF or p <= 1 or p == 2:
        raise ValueError(f"f_qp needs finite p > 1, p != 2, got {p!r}")
    t = _check_domain(t, *DOMAINS["f_qp"], "f_qp")
    s = np.asarray(complement(t, p))
    den = t * t + s * s
    first = (2.0 * t ** p - 1.0) / den
    interior = (t > 0) & (t < 1)
    ti = np.where(interior, t, 0.5)
    si = np.where(interior, s, 0.5)
    cross = 2.0 * ti * si * (ti ** (p - 2.0) + si ** (p - 2.0)) / (ti * ti + si * si)
    cross = np.where(interior, cross, 0.0)
    return _out(_lq([(2, first), (1, cross)], q))


def phi_diag(p: float, a):
    """``[a^(4p/(3p-4)) + (1 - a^(p/(p-2)))^((4p-8)/(3p-4))]^((3p-4)/(4p))`` for p >= 4.

    This is the coefficient l_q norm, q = 4p/(3p-4), of the diagonal extreme
    point ``a x^2 + c y^2``. Exactly 1 at a = 0 and a = 1.
    """
    p = check_exponent(p)
    if p < 4:
        raise ValueError(f"phi_diag needs p >= 4, got {p!r}")
    a = _check_domain(a, *DOMAINS["phi_diag"], "phi_diag")
    if p == INF:
        e1, e2, e3, outer = 4.0 / 3.0, 1.0, 4.0 / 3.0, 0.75
    else:
        e1, e2, e3 = 4.0 * p / (3.0 * p - 4.0), p / (p - 2.0), (4.0 * p - 8.0) / (3.0 * p - 4.0)
        outer = (3.0 * p - 4.0) / (4.0 * p)
    val = (_powz(a, e1) + _powz(1.0 - _powz(a, e2), e3)) ** outer
    val = np.where((a == 0.0) | (a == 1.0), 1.0, val)
    return _out(val)


def diag(q: float, p: float, a):
    """Coefficient l_q norm of ``a x^2 + c y^2`` with ``a^r + c^r = 1``, r = p/(p-2), p > 2."""
    q = check_exponent(q)
    p = check_exponent(p)
    if not p > 2:
        raise ValueError(f"diagonal family needs p > 2, got {p!r}")
    a = _check_domain(a, *DOMAINS["diag"], "diag")
    r = 1.0 if p == INF else p / (p - 2.0)
    c = np.asarray(complement(a, r))
    return _out(_lq([(1, a), (1, c)], q))


@dataclass(frozen=True)
class Objective:
    """A named objective bound to its exponents; call it with the parameter."""

    kind: str
    q: float
    p: float = math.nan

    @property
    def domain(self) -> tuple[float, float]:
        return DOMAINS[self.kind]

    def __call__(self, t):
        if self.kind == "f_q1":
            return f_q1(self.q, t)
        if self.kind == "f_qinf":
            return f_qinf(self.q, t)
        if self.kind == "f_qp":
            return f_qp(self.q, self.p, t)
        if self.kind == "phi_diag":
            return phi_diag(self.p, t)
        if self.kind == "diag":
            return diag(self.q, self.p, t)
        raise ValueError(f"unknown objective {self.kind!r}")
