import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyconst import objectives as obj
from polyconst.extremal import ext_sup1, ext_supinf, ext_supp
from polyconst.poly import INF, coeff_norm

SQRT2 = math.sqrt(2.0)
Q_VALUES = [1.0, 4 / 3, 1.5, 2.0, 3.0, INF]


def test_f_q1_examples():
    assert obj.f_q1(1, 2 + SQRT2) == pytest.approx(2 + 2 * SQRT2, abs=1e-14)
    for q in Q_VALUES:
        assert obj.f_q1(q, 4.0) == 4.0


def test_f_qinf_examples():
    assert obj.f_qinf(1, (2 + SQRT2) / 4) == pytest.approx(1 + SQRT2, abs=1e-14)
    assert obj.f_qinf(2, 1.0) == pytest.approx(SQRT2, abs=1e-15)
    for q in Q_VALUES:
        expected = 1.0 if q == INF else 2 ** (1 / q)
        assert abs(obj.f_qinf(q, 1.0) - expected) <= 1e-14


def test_f_qp_examples():
    for t in (0.0, 0.3, 2 ** -0.25, 0.9, 1.0):
        assert obj.f_qp(2, 4, t) == pytest.approx(SQRT2, abs=1e-12)
    for q in Q_VALUES:
        for p in (1.5, 3.0, 7.0, 250.0):
            expected = 1.0 if q == INF else 2 ** (1 / q)
            assert abs(obj.f_qp(q, p, 1.0) - expected) <= 1e-14
            assert abs(obj.f_qp(q, p, 0.0) - expected) <= 1e-14


def test_f_qp_p250_maximum():
    ts = np.linspace(0, 1, 200_001)
    assert np.max(obj.f_qp(4 * 250 / (3 * 250 - 4), 250, ts)) == pytest.approx(1.82939, abs=1e-5)


def test_phi_diag_examples():
    a = np.linspace(0, 1, 1001)
    assert np.allclose(obj.phi_diag(4, a), 1.0, atol=1e-14)
    for p in (4.0, 5.0, 12.0, 250.0, INF):
        assert obj.phi_diag(p, 0.0) == 1.0
        assert obj.phi_diag(p, 1.0) == 1.0


@pytest.mark.parametrize("call", [
    lambda: obj.f_q1(1, 1.9), lambda: obj.f_q1(1, 4.1), lambda: obj.f_qinf(1, 0.4),
    lambda: obj.f_qp(2, 4, 1.1), lambda: obj.f_qp(2, 2, 0.5), lambda: obj.f_qp(2, 1, 0.5),
    lambda: obj.phi_diag(3, 0.5), lambda: obj.phi_diag(5, -0.1), lambda: obj.diag(2, 1.5, 0.5),
    lambda: obj.f_q1(0.5, 3.0), lambda: obj.f_q1(1, np.array([3.0, np.nan])),
])
def test_domain_errors(call):
    with pytest.raises(ValueError):
        call()


def test_vectorized_matches_scalar():
    ts = np.linspace(2, 4, 17)
    vec = obj.f_q1(4 / 3, ts)
    assert np.array_equal(vec, [obj.f_q1(4 / 3, float(t)) for t in ts])


@pytest.mark.parametrize("q", Q_VALUES)
@pytest.mark.parametrize("p", [1.5, 3.0, 4.0, 8.0, 40.0])
def test_f_qp_is_family_ii_norm(q, p):
    ts = np.linspace(0, 1, 10_001)
    f = obj.f_qp(q, p, ts)
    direct = [coeff_norm(ext_supp(p, float(t), "ii"), q) for t in ts[::7]]
    assert np.max(np.abs(f[::7] - direct)) <= 1e-12


@pytest.mark.parametrize("q", Q_VALUES)
def test_f_q1_and_f_qinf_are_family_norms(q):
    ts = np.linspace(2, 4, 2001)[1:]
    assert max(abs(obj.f_q1(q, float(t)) - coeff_norm(ext_sup1("b", float(t)), q)) for t in ts) <= 1e-12
    ts = np.linspace(0.5, 1, 2001)
    assert max(abs(obj.f_qinf(q, float(t)) - coeff_norm(ext_supinf("c", float(t)), q)) for t in ts) <= 1e-12


@pytest.mark.parametrize("p", [3.0, 5.0, 12.0])
def test_diag_matches_coeff_norm(p):
    for a in np.linspace(0, 1, 101):
        P = ext_supp(p, float(a), "i")
        for q in (1.0, 2.0, INF):
            assert obj.diag(q, p, float(a)) == pytest.approx(coeff_norm(P, q), abs=1e-12)


def test_phi_diag_is_diag_at_hl_exponent():
    for p in (5.0, 9.0, 60.0):
        a = np.linspace(0, 1, 501)
        assert np.allclose(obj.phi_diag(p, a), obj.diag(4 * p / (3 * p - 4), p, a), atol=1e-12)


@given(st.floats(1, 10), st.floats(1, 10), st.floats(0, 1), st.sampled_from([3.0, 6.0, 1.5]))
def test_monotone_in_q(q1, q2, u, p):
    lo, hi = sorted((q1, q2))
    assert obj.f_q1(lo, 2 + 2 * u) >= obj.f_q1(hi, 2 + 2 * u) * (1 - 1e-14)
    assert obj.f_qinf(lo, 0.5 + u / 2) >= obj.f_qinf(hi, 0.5 + u / 2) * (1 - 1e-14)
    assert obj.f_qp(lo, p, u) >= obj.f_qp(hi, p, u) * (1 - 1e-14)


def test_constant_at_q2_p4():
    v = obj.f_qp(2, 4, np.linspace(0, 1, 10_000))
    assert v.max() - v.min() <= 1e-12


def test_objective_dataclass():
    o = obj.Objective("f_qp", 2.0, 4.0)
    assert o.domain == (0.0, 1.0)
    assert o(0.3) == pytest.approx(SQRT2, abs=1e-12)
    assert obj.Objective("f_q1", 1.0)(4.0) == 4.0
    with pytest.raises(ValueError):
        obj.Objective("nope", 1.0)(0.5)
