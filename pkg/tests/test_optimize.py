import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyconst import objectives as obj
from polyconst.optimize import (DEFAULT_SCAN, ConvergenceError, NonFiniteObjective,
                                ScanConfig, golden_max, golden_max_batch, maximize)


def test_defaults():
    assert DEFAULT_SCAN == ScanConfig(4096, 1e-12, 200)


@pytest.mark.parametrize("kwargs", [dict(scan_points=63), dict(refine_tol=0.0), dict(refine_iters_max=0)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        ScanConfig(**kwargs)


def test_vertex():
    r = maximize(lambda t: -(t - 1.0) ** 2, 0.0, 2.0)
    assert r.argmax == pytest.approx(1.0, abs=1e-6)
    assert r.value == pytest.approx(0.0, abs=1e-12)
    assert r.bracket_width <= DEFAULT_SCAN.refine_tol
    assert r.method == "scan+golden"


def test_f_q1_example():
    r = maximize(lambda t: obj.f_q1(4 / 3, t), 2.0, 4.0, vectorized=True)
    assert r.value == pytest.approx(4.11346, abs=5e-6)
    assert r.argmax == pytest.approx(3.79842, abs=1e-5)


def test_f_qp_example():
    p = 8.0
    r = maximize(lambda t: obj.f_qp(4 * p / (3 * p - 4), p, t), 0.0, 1.0, vectorized=True)
    assert r.value == pytest.approx(1.60526, abs=5e-6)
    # 0.35689104875628 from a 40-digit root of the derivative; printed as 0.35688
    assert r.argmax == pytest.approx(0.35689104875628, abs=1e-7)
    assert r.argmax == pytest.approx(0.35688, abs=2e-5)


def test_scalar_and_vectorized_agree():
    f = lambda t: np.sin(3 * t) + 0.3 * np.cos(11 * t)
    a = maximize(f, -2.0, 2.0)
    b = maximize(f, -2.0, 2.0, vectorized=True)
    assert a.argmax == pytest.approx(b.argmax, abs=1e-9)
    assert a.value == pytest.approx(b.value, abs=1e-15)


def test_endpoint_maximum():
    r = maximize(lambda t: t, 0.0, 1.0)
    assert r.argmax == 1.0 and r.value == 1.0


def test_ties_go_to_smaller_t():
    r = maximize(lambda t: 1.0 if abs(t) > 0.5 else 0.0, -1.0, 1.0)
    assert r.argmax < 0


def test_rejects_bad_interval():
    with pytest.raises(ValueError):
        maximize(lambda t: t, 1.0, 1.0)


def test_non_finite_reports_node():
    with pytest.raises(NonFiniteObjective) as err:
        maximize(lambda t: math.inf if t == 0.5 else t, 0.0, 1.0, ScanConfig(64))
    assert err.value.t == pytest.approx(0.5)
    assert err.value.index == 32


def test_golden_convergence_error():
    with pytest.raises(ConvergenceError):
        golden_max(lambda t: -(t - 0.3) ** 2, 0.0, 1.0, tol=1e-12, max_iter=5)


def test_golden_batch_matches_scalar():
    centers = np.linspace(0.1, 0.9, 9)
    x, fx = golden_max_batch(lambda t: -(t - centers) ** 2, np.zeros(9), np.ones(9), 1e-12, 200)
    assert np.allclose(x, centers, atol=1e-6)
    for c, xb in zip(centers, x):
        xs, *_ = golden_max(lambda t: -(t - c) ** 2, 0.0, 1.0, 1e-12, 200)
        assert xs == pytest.approx(xb, abs=1e-9)


def test_deterministic():
    f = lambda t: np.sin(7 * t) * np.exp(-t)
    assert maximize(f, 0.0, 3.0, vectorized=True) == maximize(f, 0.0, 3.0, vectorized=True)


@given(st.floats(-5, 5), st.floats(0.1, 5), st.floats(-1, 1), st.integers(64, 2048))
def test_never_below_scan_incumbent(c, w, shift, n):
    f = lambda t: np.cos(w * (t - c)) + shift * t
    r = maximize(f, -3.0, 3.0, ScanConfig(n), vectorized=True)
    nodes = np.linspace(-3.0, 3.0, n + 1)
    assert r.value >= f(nodes).max()
    assert -3.0 <= r.argmax <= 3.0


@given(st.floats(-0.9, 0.9), st.floats(0.5, 4))
def test_unimodal_matches_dense_scan(c, s):
    f = lambda t: -np.abs(t - c) ** 1.5 * s + np.sqrt(s)
    r = maximize(f, -1.0, 1.0, vectorized=True)
    dense = f(np.linspace(-1.0, 1.0, 10_000_001)).max()
    assert abs(r.value - dense) <= 1e-9


@given(st.floats(0.5, 20), st.integers(64, 1024))
def test_doubling_scan_points(w, n):
    f = lambda t: np.sin(w * t) + 0.1 * t * t
    a = maximize(f, 0.0, 4.0, ScanConfig(n), vectorized=True)
    b = maximize(f, 0.0, 4.0, ScanConfig(2 * n), vectorized=True)
    assert b.value >= a.value - 1e-12
