"""Extreme points of the unit balls of 2-homogeneous polynomials on l_p^2 and of
the coefficient balls for q in {1, inf}."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .poly import INF, HomogeneousPoly2, check_exponent, complement

SIGNS = (1, -1)


@dataclass(frozen=True)
class ExtremeFamily:
    """Description of one family of extreme points.

    ``ball`` is ``"sup"`` (polynomial norm with exponent ``exponent``) or
    ``"coeff"`` (coefficient norm). ``parameter_range`` is ``None`` for finite
    families.
    """

    ball: str
    exponent: float
    sub_family: str
    parameter_range: tuple[float, float] | None
    sign_choices: tuple[tuple[int, ...], ...]


def families(p: float) -> list[ExtremeFamily]:
    """Extreme families of the unit ball of the polynomial norm on l_p^2."""
    p = check_exponent(p)
    one, two = tuple((s,) for s in SIGNS), tuple(itertools.product(SIGNS, repeat=2))
    if p == 1:
        return [
            ExtremeFamily("sup", p, "CKK-a", None, tuple(itertools.product(SIGNS, repeat=3))),
            ExtremeFamily("sup", p, "CKK-b", (2.0, 4.0), one),
        ]
    if p == INF:
        return [
            ExtremeFamily("sup", p, "CK-a/b", None, one),
            ExtremeFamily("sup", p, "CK-c", (0.5, 1.0), two),
        ]
    if p == 2:
        raise ValueError("p = 2 has no tabulated extreme families")
    if p > 2:
        return [
            ExtremeFamily("sup", p, "Grecu-i", (0.0, 1.0), one),
            ExtremeFamily("sup", p, "Grecu-ii", (0.0, 1.0), one),
        ]
    return [
        ExtremeFamily("sup", p, "Grecu-i", None, one),
        ExtremeFamily("sup", p, "Grecu-ii", (0.0, 1.0), one),
        ExtremeFamily("sup", p, "Grecu-iii", (0.0, 1.0), one),
    ]


def _sign(s: int) -> int:
    if s not in SIGNS:
        raise ValueError(f"signs must be +1 or -1, got {s!r}")
    return s


def ext_sup1(sub_family: str, t: float | None = None, signs=(1, 1, 1)) -> HomogeneousPoly2:
    """Extreme points for p = 1.

    ``"a"``: ``s0 x^2 + 2 s1 xy + s2 y^2``.
    ``"b"``: ``s0 sqrt(4|t| - t^2)/2 (x^2 - y^2) + t xy`` with ``|t|`` in (2, 4].
    """
    if sub_family == "a":
        s0, s1, s2 = (_sign(s) for s in signs)
        return HomogeneousPoly2((s0, 2.0 * s1, s2))
    if sub_family == "b":
        if t is None or not 2.0 < abs(t) <= 4.0:
            raise ValueError(f"sub-family b needs |t| in (2, 4], got {t!r}")
        s0 = _sign(signs[0])
        a = s0 * math.sqrt(max(4.0 * abs(t) - t * t, 0.0)) / 2.0
        return HomogeneousPoly2((a, float(t), -a))
    raise ValueError(f"unknown sub-family {sub_family!r} for p = 1")


def ext_supinf(sub_family: str, t: float | None = None, signs=(1, 1)) -> HomogeneousPoly2:
    """Extreme points for p = inf: ``±x^2``, ``±y^2`` and
    ``s0 (t x^2 - t y^2 + 2 s1 sqrt(t(1-t)) xy)`` with t in [1/2, 1]."""
    s0 = _sign(signs[0])
    if sub_family == "a":
        return HomogeneousPoly2((s0, 0.0, 0.0))
    if sub_family == "b":
        return HomogeneousPoly2((0.0, 0.0, s0))
    if sub_family == "c":
        if t is None or not 0.5 <= t <= 1.0:
            raise ValueError(f"sub-family c needs t in [1/2, 1], got {t!r}")
        s1 = _sign(signs[1])
        cross = 2.0 * math.sqrt(t * (1.0 - t))
        return HomogeneousPoly2((s0 * t, s0 * s1 * cross, -s0 * t))
    raise ValueError(f"unknown sub-family {sub_family!r} for p = inf")


def _pow0(base: float, e: float) -> float:
    # 0**e for e > 0 taken as its limit 0
    return 0.0 if base == 0.0 else base ** e


def _grecu_ii(p: float, alpha: float) -> tuple[float, float]:
    """(x^2 - y^2) and xy coefficients of the family-(ii) member at alpha."""
    beta = complement(alpha, p)
    den = alpha * alpha + beta * beta
    a = (_pow0(alpha, p) - _pow0(beta, p)) / den
    # 2 alpha beta (alpha^(p-2) + beta^(p-2)), written without negative powers
    b = 2.0 * (_pow0(alpha, p - 1.0) * beta + alpha * _pow0(beta, p - 1.0)) / den
    return a, b


def ext_supp(p: float, alpha: float, family: str, sign: int = 1,
             normalize: bool = True) -> HomogeneousPoly2:
    """Extreme points for finite p > 1, p != 2, parameterized by alpha in [0, 1].

    ``"i"`` (p > 2): ``a x^2 + c y^2`` with ``a = alpha`` and
    ``c = (1 - a^(p/(p-2)))^((p-2)/p)``.
    ``"ii"``: ``A (x^2 - y^2) + B xy`` with ``beta = (1 - alpha^p)^(1/p)``.
    ``"iii"`` (1 < p < 2): the same coefficients over ``alpha^2 - beta^2``. That
    is a scalar multiple of family ii, of sup-norm
    ``(alpha^2 + beta^2)/|alpha^2 - beta^2|``; with ``normalize`` (default) the
    unit-norm member ``sign(alpha - beta) * (ii)`` is returned, which is also the
    limit at ``alpha = beta``. ``normalize=False`` gives the raw expression and
    rejects the pole.

    For 1 < p < 2 the diagonal extreme points are finite; see
    :func:`diagonal_extremes`.
    """
    p = check_exponent(p)
    if p == INF or p == 2 or p <= 1:
        raise ValueError(f"ext_supp needs finite p > 1, p != 2, got {p!r}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    s = _sign(sign)
    if family == "i":
        if p < 2:
            raise ValueError("family i for 1 < p < 2 is finite: use diagonal_extremes(p)")
        r = p / (p - 2.0)
        c = complement(alpha, r)
        return HomogeneousPoly2((s * alpha, 0.0, s * c))
    if family == "ii":
        a, b = _grecu_ii(p, alpha)
        return HomogeneousPoly2((s * a, s * b, -s * a))
    if family == "iii":
        if p > 2:
            raise ValueError("family iii exists only for 1 < p < 2")
        a, b = _grecu_ii(p, alpha)
        beta = complement(alpha, p)
        if normalize:
            flip = -1.0 if alpha < beta else 1.0
            return HomogeneousPoly2((flip * s * a, flip * s * b, -flip * s * a))
        d = alpha * alpha - beta * beta
        if d == 0.0:
            raise ValueError("family iii has a pole at alpha = beta")
        ratio = (alpha * alpha + beta * beta) / d
        return HomogeneousPoly2((s * a * ratio, s * b * ratio, -s * a * ratio))
    raise ValueError(f"unknown family {family!r}")


def diagonal_extremes(p: float) -> list[HomogeneousPoly2]:
    """Diagonal extreme points ``a x^2 + c y^2`` (ac >= 0) for 1 < p < 2, up to sign.

    Here ``||a x^2 + c y^2||_p = max(|a|, |c|)``, so the extreme ones are
    ``x^2``, ``y^2`` and ``x^2 + y^2``.
    """
    p = check_exponent(p)
    if not 1 < p < 2:
        raise ValueError("finite diagonal extreme set applies to 1 < p < 2")
    return [HomogeneousPoly2((1.0, 0.0, 0.0)), HomogeneousPoly2((0.0, 0.0, 1.0)),
            HomogeneousPoly2((1.0, 0.0, 1.0))]


def ext_coeff_ball(q: float, m: int) -> list[HomogeneousPoly2]:
    """Extreme points of the unit coefficient ball in degree ``m``: signed
    monomials for q = 1, all sign patterns for q = inf."""
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    q = check_exponent(q)
    if q == 1:
        out = []
        for k in range(m + 1):
            for s in SIGNS:
                c = [0.0] * (m + 1)
                c[k] = float(s)
                out.append(HomogeneousPoly2(tuple(c)))
        return out
    if q == INF:
        return [HomogeneousPoly2(tuple(float(s) for s in signs))
                for signs in itertools.product(SIGNS, repeat=m + 1)]
    raise ValueError(f"the extreme set is the whole sphere for 1 < q < inf (q={q})")
