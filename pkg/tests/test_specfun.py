import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special

from paraboloid.specfun import (
    CesaroSpec,
    JacobiParams,
    beta_const,
    beta_const_prime,
    c_lambda,
    cesaro_weights,
    gegenbauer_Z,
    gegenbauer_Z_all,
    gegenbauer_Z_homogeneous_all,
    jacobi_all,
    jacobi_at_one,
    jacobi_deriv,
    jacobi_deriv2,
    jacobi_eval,
    jacobi_homogeneous_all,
    jacobi_norm,
    jacobi_norms,
    pochhammer,
)

params = st.floats(-0.95, 6.0)


@given(st.integers(0, 25), params, params, st.floats(-1, 1))
def test_jacobi_matches_scipy(n, a, b, t):
    ref = special.eval_jacobi(n, a, b, t)
    assert jacobi_eval(n, a, b, t) == pytest.approx(ref, rel=1e-10, abs=1e-10 * max(1, abs(jacobi_at_one(n, a))))


def test_jacobi_low_degrees():
    assert jacobi_eval(0, 0.3, 0.7, 0.2) == 1.0
    assert jacobi_eval(1, 2.0, 1.0, 0.5) == pytest.approx(0.5 * (2 - 1) + 0.5 * 5 * 0.5)


@given(st.integers(0, 15), params, params)
def test_value_at_one(n, a, b):
    assert jacobi_eval(n, a, b, 1.0) == pytest.approx(jacobi_at_one(n, a), rel=1e-12)
    assert jacobi_at_one(n, a) == pytest.approx(pochhammer(a + 1, n) / special.factorial(n), rel=1e-12)


@given(st.integers(0, 12), params, params)
def test_symmetry_at_minus_one(n, a, b):
    # P_n^{(a,b)}(-1) = (-1)^n (b+1)_n / n!
    ref = (-1) ** n * pochhammer(b + 1, n) / special.factorial(n)
    assert jacobi_eval(n, a, b, -1.0) == pytest.approx(ref, rel=1e-10, abs=1e-12)


@pytest.mark.parametrize("n,a,b", [(0, 0.5, 0.5), (1, 0.5, 0.0), (4, 1.5, -0.5), (7, 0.0, 2.0), (3, -0.5, -0.5)])
def test_norm_against_quad(n, a, b):
    f = lambda t: special.eval_jacobi(n, a, b, t) ** 2 * (1 - t) ** a * (1 + t) ** b
    val, _ = integrate.quad(f, -1, 1, limit=200)
    assert beta_const_prime(a, b) * val == pytest.approx(jacobi_norm(n, a, b), rel=1e-8)


def test_norm_closed_values():
    # h_1^{(1/2,0)} = (3/2 * 1 * 5/2) / (1 * 5/2 * 7/2) = 3/7
    assert jacobi_norm(1, 0.5, 0.0) == pytest.approx(3 / 7, rel=1e-14)
    assert jacobi_norm(0, -0.5, -0.5) == 1.0


def test_norms_vector_consistent():
    h = jacobi_norms(10, 1.2, 0.3)
    assert all(h[k] == jacobi_norm(k, 1.2, 0.3) for k in range(11))


def test_beta_constants():
    assert beta_const(0, 0) == pytest.approx(1.0)
    assert beta_const(1, 0) == pytest.approx(2.0)
    assert beta_const(0.5, 2.0) == pytest.approx(1 / special.beta(1.5, 3.0))
    assert c_lambda(0.5) == pytest.approx(0.5)  # 1 / int_{-1}^1 dt
    assert c_lambda(0.0) == pytest.approx(1 / np.pi)
    assert c_lambda(1.0) == pytest.approx(2 / np.pi)
    with pytest.raises(ValueError):
        c_lambda(-0.5)


@given(st.integers(1, 10), params, params, st.floats(-0.9, 0.9))
def test_derivatives(n, a, b, t):
    h = 1e-5
    fd = (jacobi_eval(n, a, b, t + h) - jacobi_eval(n, a, b, t - h)) / (2 * h)
    assert jacobi_deriv(n, a, b, t) == pytest.approx(fd, rel=1e-5, abs=1e-5)
    fd2 = (jacobi_deriv(n, a, b, t + h) - jacobi_deriv(n, a, b, t - h)) / (2 * h)
    assert jacobi_deriv2(n, a, b, t) == pytest.approx(fd2, rel=1e-5, abs=1e-4)


@given(st.integers(0, 12), params, params, st.floats(-2, 2), st.floats(0.05, 3))
def test_homogeneous_form(n, a, b, p, q):
    H = jacobi_homogeneous_all(n, a, b, p, q)[n]
    ref = q ** n * jacobi_eval(n, a, b, p / q)
    assert H == pytest.approx(ref, rel=1e-9, abs=1e-9 * max(1, q) ** n * max(1, abs(jacobi_at_one(n, a))) * (1 + abs(p / q)) ** n)


def test_homogeneous_symmetric_is_regular_at_zero():
    # symmetric case: q = 0 leaves the leading monomial only
    n, lam = 4, 0.7
    H = jacobi_homogeneous_all(n, lam, lam, 0.3, 0.0)[n]
    lead = special.poch(n + 2 * lam + 1, n) / (2 ** n * special.factorial(n))
    assert H == pytest.approx(lead * 0.3 ** n, rel=1e-12)


def test_jacobi_all_shape():
    t = np.linspace(-1, 1, 7).reshape(7, 1)
    assert jacobi_all(5, 0.1, 0.2, t).shape == (6, 7, 1)


def test_gegenbauer_values():
    assert gegenbauer_Z(2, 1.0, 1.0) == pytest.approx(9.0)  # (2+1)/1 * C_2^1(1) = 3 * 3
    # Z_n^{1/2} = (2n+1) P_n
    assert gegenbauer_Z(3, 0.5, 0.1) == pytest.approx(7 * special.eval_legendre(3, 0.1))
    # lambda = 0 is the Chebyshev limit 2 T_n
    assert gegenbauer_Z(5, 0.0, 0.3) == pytest.approx(2 * special.eval_chebyt(5, 0.3))
    assert gegenbauer_Z(0, 0.0, 0.3) == 1.0


@given(st.integers(0, 15), st.floats(0.01, 5), st.floats(-1, 1))
def test_gegenbauer_against_scipy(n, lam, t):
    ref = (n + lam) / lam * special.eval_gegenbauer(n, lam, t)
    assert gegenbauer_Z(n, lam, t) == pytest.approx(ref, rel=1e-9, abs=1e-9 * (1 + abs(ref)))


@given(st.integers(0, 10), st.floats(0, 4), st.floats(-1.5, 1.5), st.floats(0.1, 2))
def test_gegenbauer_homogeneous(n, lam, p, q):
    H = gegenbauer_Z_homogeneous_all(n, lam, p, q * q)[n]
    ref = q ** n * gegenbauer_Z_all(n, lam, p / q)[n]
    assert H == pytest.approx(ref, rel=1e-9, abs=1e-9 * (abs(p) + q) ** n * (n + 1) ** (2 * lam + 2))


def test_cesaro_weights_examples():
    np.testing.assert_allclose(cesaro_weights(CesaroSpec(3, 1), "proj"), [1, 0.75, 0.5, 0.25])
    np.testing.assert_allclose(cesaro_weights(CesaroSpec(2, 0), "K"), [0, 0, 1])
    np.testing.assert_allclose(cesaro_weights(CesaroSpec(0, 2.5), "proj"), [1.0])


@given(st.integers(0, 40), st.floats(-0.9, 8))
def test_cesaro_forms_agree(n, delta):
    # sum_m A_m K_m = sum_k lambda_k proj_k  <=>  lambda_k = sum_{m >= k} A_m
    spec = CesaroSpec(n, delta)
    A = cesaro_weights(spec, "K")
    lam = cesaro_weights(spec, "proj")
    np.testing.assert_allclose(np.cumsum(A[::-1])[::-1], lam, rtol=1e-10, atol=1e-12)
    assert lam[0] == pytest.approx(1.0)


def test_cesaro_large_order_finite():
    w = cesaro_weights(CesaroSpec(600, 7.5), "proj")
    assert np.all(np.isfinite(w)) and w[0] == pytest.approx(1.0)


@pytest.mark.parametrize("bad", [dict(n=-1, delta=1), dict(n=1.5, delta=1), dict(n=2, delta=-1)])
def test_cesaro_spec_validation(bad):
    with pytest.raises(ValueError):
        CesaroSpec(**bad)


def test_jacobi_params_validation():
    jp = JacobiParams(0.5, 1.0)
    assert jp.eval(2, 0.3) == jacobi_eval(2, 0.5, 1.0, 0.3)
    assert jp.norm(3) == jacobi_norm(3, 0.5, 1.0)
    assert jp.c_ab == beta_const(0.5, 1.0)
    with pytest.raises(ValueError):
        JacobiParams(-1.0, 0.0)
    with pytest.raises(ValueError):
        jacobi_eval(-1, 0, 0, 0.1)
