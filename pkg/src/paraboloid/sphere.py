"""Spherical harmonics: dimensions, explicit real bases for d = 2, 3, zonal kernels.

Harmonics are normalised for the probability surface measure,
``(1/omega_d) int Y^2 dsigma = 1``.  The explicit bases are produced as
*solid* harmonics ``|x|^m Y(x/|x|)``, i.e. homogeneous polynomials, which
the paraboloid modules use to stay regular at the apex.

Ordering of the index ``ell`` (1-based in :class:`HarmonicIndex`):

* ``d = 2``: ``m = 0`` -> ``[1]``; ``m >= 1`` -> ``[sqrt2 cos m theta, sqrt2 sin m theta]``.
* ``d = 3``: order 0 first, then ``cos k phi, sin k phi`` pairs for ``k = 1..m``.
"""
from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.special import gammaln

from .quadrature import gauss_jacobi, rule_sphere
from .specfun import gegenbauer_Z, gegenbauer_Z_all

__all__ = [
    "HarmonicIndex",
    "UnsupportedDimension",
    "dim_harmonics",
    "solid_harmonics",
    "sph_basis",
    "sph_eval",
    "zonal_kernel",
    "raise_index_Z",
    "laplace_beltrami_fd",
    "zonal_sphere_average",
    "zonal_interval_average",
]

UNIT_TOL = 1e-12


class UnsupportedDimension(ValueError):
    """Explicit harmonic bases are only provided for d in {2, 3}."""


def dim_harmonics(d, n):
    """``dim H_n^d = binom(n+d-1, n) - binom(n+d-3, n-2)``."""
    if d < 2 or n < 0:
        raise ValueError(f"need d >= 2 and n >= 0, got d={d!r}, n={n!r}")
    second = comb(n + d - 3, n - 2) if n >= 2 else 0
    return comb(n + d - 1, n) - second


@dataclass(frozen=True)
class HarmonicIndex:
    d: int
    m: int
    ell: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"harmonic degree must be >= 0, got {self.m!r}")
        if not 1 <= self.ell <= dim_harmonics(self.d, self.m):
            raise ValueError(
                f"ell={self.ell} outside 1..{dim_harmonics(self.d, self.m)} for d={self.d}, m={self.m}")


def _check_d(d):
    if d not in (2, 3):
        raise UnsupportedDimension(f"explicit spherical harmonics need d in {{2, 3}}, got d={d!r}")


def _solid_2d(m, x):
    re, im = np.ones(x.shape[:-1]), np.zeros(x.shape[:-1])
    for _ in range(m):
        re, im = re * x[..., 0] - im * x[..., 1], re * x[..., 1] + im * x[..., 0]
    if m == 0:
        return re[None]
    return np.sqrt(2.0) * np.stack([re, im])


def _solid_3d(m, x):
    x1, x2, z = x[..., 0], x[..., 1], x[..., 2]
    r2 = x1 * x1 + x2 * x2 + z * z
    out = np.empty((2 * m + 1,) + x.shape[:-1])
    re, im = np.ones_like(z), np.zeros_like(z)
    row = 0
    for k in range(m + 1):
        # Pi_l^k(z, r^2) = r^{l-k} d^k/ds^k P_l(s) at s = z/r, from l = k up to m
        pk = np.full_like(z, np.exp(gammaln(2 * k + 1) - gammaln(k + 1) - k * np.log(2.0)))
        if m > k:
            pprev, pk = pk, (2 * k + 1) * z * pk
            for l in range(k + 2, m + 1):
                pprev, pk = pk, ((2 * l - 1) * z * pk - (l + k - 1) * r2 * pprev) / (l - k)
        norm = np.exp(0.5 * (np.log(2 * m + 1) + gammaln(m - k + 1) - gammaln(m + k + 1)))
        if k == 0:
            out[row] = norm * pk
            row += 1
        else:
            out[row] = np.sqrt(2.0) * norm * pk * re
            out[row + 1] = np.sqrt(2.0) * norm * pk * im
            row += 2
        re, im = re * x1 - im * x2, re * x2 + im * x1
    return out


def solid_harmonics(d, m, x):
    """All degree-``m`` solid harmonics ``|x|^m Y_ell^m(x/|x|)`` at ``x``.

    ``x`` has shape ``(..., d)``; the result has shape ``(dim H_m^d, ...)``.
    Evaluated as homogeneous polynomials, so ``x = 0`` is fine.
    """
    _check_d(d)
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != d:
        raise ValueError(f"last axis of x must have length {d}, got shape {x.shape}")
    return _solid_2d(m, x) if d == 2 else _solid_3d(m, x)


def _unit(xi, renormalize):
    xi = np.asarray(xi, dtype=float)
    nrm = np.linalg.norm(xi, axis=-1)
    if renormalize:
        return xi / nrm[..., None]
    if np.any(np.abs(nrm - 1.0) > UNIT_TOL):
        raise ValueError("points must lie on the unit sphere (|xi| = 1 within 1e-12)")
    return xi


def sph_basis(d, m, xi, renormalize=False):
    """Orthonormal real basis of ``H_m^d`` evaluated at unit vectors ``xi``."""
    return solid_harmonics(d, m, _unit(xi, renormalize))


def sph_eval(idx, xi, renormalize=False):
    """Evaluate ``Y_ell^m(xi)`` for a :class:`HarmonicIndex`."""
    _check_d(idx.d)
    out = sph_basis(idx.d, idx.m, xi, renormalize)[idx.ell - 1]
    return out if out.ndim else float(out)


def zonal_kernel(d, m, c):
    """Reproducing kernel of ``H_m^d`` as a function of ``c = <xi, eta>``."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d!r}")
    return gegenbauer_Z(m, (d - 2) / 2.0, c)


def raise_index_Z(lam, sigma, m, t, n_points=None):
    r"""Evaluate ``Z_m^lambda(t)`` through ``Z_m^{lambda+sigma}``.

    Integrates ``Z_m^{lambda+sigma}((1-z1) t / 2 + (1+z1) z2 / 2)`` against the
    probability measure proportional to
    ``(1-z1)^lambda (1+z1)^{sigma-1} (1-z2^2)^{sigma-1/2}``.
    The result should equal ``Z_m^lambda(t)``; it is computed independently
    of the direct recurrence.
    """
    if lam < 0:
        raise ValueError(f"lambda must be >= 0, got {lam!r}")
    if not sigma > 0:
        raise ValueError(f"sigma must be > 0, got {sigma!r}")
    n = n_points or (m // 2 + 3)
    r1 = gauss_jacobi(n, lam, sigma - 1.0).normalized()
    r2 = gauss_jacobi(n, sigma - 0.5, sigma - 0.5).normalized()
    t = np.asarray(t, dtype=float)
    z1 = r1.nodes[:, None, None]
    z2 = r2.nodes[None, :, None]
    arg = 0.5 * (1 - z1) * t.reshape(1, 1, -1) + 0.5 * (1 + z1) * z2
    vals = gegenbauer_Z_all(m, lam + sigma, arg)[m]
    w = (r1.weights[:, None] * r2.weights[None, :])[..., None]
    out = np.sum(w * vals, axis=(0, 1)).reshape(t.shape)
    return out if out.ndim else float(out)


def laplace_beltrami_fd(f, theta, phi, h=1e-3):
    """Laplace-Beltrami of ``f(theta, phi)`` on S^2 by central differences.

    ``theta`` is the polar angle.  Accuracy is O(h^2); keep away from the poles.
    """
    s = np.sin(theta)
    d_th = (np.sin(theta + h / 2) * (f(theta + h, phi) - f(theta, phi))
            - np.sin(theta - h / 2) * (f(theta, phi) - f(theta - h, phi))) / (h * h * s)
    d_ph = (f(theta, phi + h) - 2 * f(theta, phi) + f(theta, phi - h)) / (h * h * s * s)
    return d_th + d_ph



def zonal_sphere_average(h, d, eta, degree):
    """``(1/omega_d) int_{S^{d-1}} h(<xi, eta>) dsigma(xi)`` by the product sphere rule."""
    r = rule_sphere(d, degree)
    return float(r.weights @ h(r.points @ np.asarray(eta, dtype=float)))


def zonal_interval_average(h, d, degree):
    """``c_{(d-2)/2} int_{-1}^1 h(u) (1-u^2)^{(d-3)/2} du``; equals :func:`zonal_sphere_average`."""
    lam = (d - 3) / 2
    r = gauss_jacobi(max(1, (degree + 2) // 2 + 1), lam, lam).normalized()
    return float(r.weights @ h(r.nodes))
