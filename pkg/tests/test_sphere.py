import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special

from paraboloid.quadrature import rule_sphere
from paraboloid.sphere import (
    HarmonicIndex,
    UnsupportedDimension,
    dim_harmonics,
    laplace_beltrami_fd,
    raise_index_Z,
    solid_harmonics,
    sph_basis,
    sph_eval,
    zonal_interval_average,
    zonal_kernel,
    zonal_sphere_average,
)


def unit(v):
    v = np.asarray(v, float)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def test_dimensions():
    assert dim_harmonics(3, 0) == 1
    assert dim_harmonics(3, 2) == 5
    assert dim_harmonics(2, 4) == 2
    assert dim_harmonics(4, 2) == 9
    with pytest.raises(ValueError):
        dim_harmonics(1, 2)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_basis_orthonormal(d, m):
    r = rule_sphere(d, 2 * m + 2)
    Y = sph_basis(d, m, r.points)
    assert Y.shape[0] == dim_harmonics(d, m)
    G = (Y * r.weights) @ Y.T
    np.testing.assert_allclose(G, np.eye(len(Y)), atol=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_degrees_orthogonal(d):
    r = rule_sphere(d, 10)
    A, B = sph_basis(d, 2, r.points), sph_basis(d, 4, r.points)
    np.testing.assert_allclose((A * r.weights) @ B.T, 0, atol=1e-13)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("m", [0, 1, 3, 6])
def test_addition_formula(d, m, rng):
    xi = unit(rng.normal(size=(20, d)))
    eta = unit(rng.normal(size=(20, d)))
    lhs = np.sum(sph_basis(d, m, xi) * sph_basis(d, m, eta), axis=0)
    rhs = zonal_kernel(d, m, np.sum(xi * eta, axis=1))
    np.testing.assert_allclose(lhs, rhs, atol=1e-11 * (1 + m * m))


def test_zonal_examples():
    assert zonal_kernel(3, 0, 0.3) == pytest.approx(1.0)
    assert zonal_kernel(3, 2, 1.0) == pytest.approx(5.0)
    g = 0.77
    assert zonal_kernel(2, 3, np.cos(g)) == pytest.approx(2 * np.cos(3 * g))


def test_solid_harmonics_homogeneous(rng):
    x = rng.normal(size=(5, 3))
    s = 1.7
    np.testing.assert_allclose(solid_harmonics(3, 4, s * x), s ** 4 * solid_harmonics(3, 4, x), rtol=1e-12)
    np.testing.assert_allclose(solid_harmonics(3, 3, np.zeros(3)), 0.0)
    np.testing.assert_allclose(solid_harmonics(2, 0, np.zeros(2)), [1.0])


def test_harmonic_is_harmonic(rng):
    # Euclidean Laplacian of a solid harmonic vanishes
    x, h = rng.normal(size=3), 1e-3
    for ell in range(7):
        f = lambda y: solid_harmonics(3, 3, y)[ell]
        lap = sum((f(x + h * e) - 2 * f(x) + f(x - h * e)) / h ** 2 for e in np.eye(3))
        assert abs(lap) < 1e-5


def test_laplace_beltrami_eigen():
    m = 3
    def f(theta, phi):
        xi = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
        return sph_basis(3, m, xi)[3]
    th, ph = 1.1, 0.4
    assert laplace_beltrami_fd(f, th, ph, h=1e-3) == pytest.approx(-m * (m + 1) * f(th, ph), abs=2e-5)


def test_sph_eval_and_index():
    xi = np.array([0.0, 0.0, 1.0])
    assert sph_eval(HarmonicIndex(3, 1, 1), xi) == pytest.approx(np.sqrt(3))
    with pytest.raises(ValueError):
        HarmonicIndex(3, 1, 4)
    with pytest.raises(UnsupportedDimension):
        sph_basis(4, 1, np.eye(4)[0])
    with pytest.raises(ValueError):
        sph_basis(3, 1, np.array([0.0, 0.0, 2.0]))
    np.testing.assert_allclose(sph_basis(3, 1, [0, 0, 2.0], renormalize=True), sph_basis(3, 1, xi))


@pytest.mark.parametrize("lam,sigma,m,t", [(0.5, 1.0, 2, 0.3), (1.0, 0.5, 4, -0.6), (0.0, 1.5, 5, 0.2), (2.0, 0.3, 7, 0.9)])
def test_raise_index(lam, sigma, m, t):
    ref = 2 * special.eval_chebyt(m, t) if lam == 0 else (m + lam) / lam * special.eval_gegenbauer(m, lam, t)
    assert raise_index_Z(lam, sigma, m, t) == pytest.approx(ref, rel=1e-11, abs=1e-12)


def test_raise_index_legendre():
    assert raise_index_Z(0.5, 1.0, 2, 0.3) == pytest.approx(5 * special.eval_legendre(2, 0.3))
    assert raise_index_Z(0.7, 1.0, 0, 0.3) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        raise_index_Z(0.5, 0.0, 2, 0.3)


@pytest.mark.parametrize("d", [2, 3])
def test_sphere_to_interval(d):
    eta = unit(np.arange(1, d + 1))
    h = lambda u: u ** 4 - 0.3 * u ** 3 + 2 * u
    a = zonal_sphere_average(h, d, eta, 8)
    assert a == pytest.approx(zonal_interval_average(h, d, 8), abs=1e-13)
    if d == 3:
        val, _ = integrate.quad(h, -1, 1)
        assert a == pytest.approx(val / 2, abs=1e-13)
    assert zonal_sphere_average(lambda u: np.ones_like(u), d, eta, 0) == pytest.approx(1.0)


@given(st.floats(-1, 1), st.integers(0, 8))
def test_zonal_bounded_by_dimension(c, m):
    assert abs(zonal_kernel(3, m, c)) <= dim_harmonics(3, m) * (1 + 1e-12)
