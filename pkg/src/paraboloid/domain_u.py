"""Orthogonal polynomials and Fourier series on the parabolic domain.

The domain is ``U = {(x1, x2): x1^2 <= x2 <= 1}`` with weight
``U_{a,b}(x) = (1-x2)^a (x2-x1^2)^{b-1/2}``, ``a > -1``, ``b > -1/2``,
normalised to a probability measure.

Points may be passed as :class:`UPoint`, a pair, or any array whose last
axis has length 2; every function broadcasts over the leading axes.
"""
from dataclasses import dataclass, field

import numpy as np

from .quadrature import default_points, gauss_jacobi, rule_u
from .specfun import (
    CesaroSpec,
    beta_const,
    c_lambda,
    cesaro_weights,
    gegenbauer_Z_homogeneous_all,
    jacobi_all,
    jacobi_at_one,
    jacobi_homogeneous_all,
    jacobi_norms,
)

__all__ = [
    "UPoint",
    "WeightU",
    "UExpansion",
    "basis_eval",
    "basis_all",
    "basis_index",
    "basis_norm",
    "basis_norms",
    "kernel_P",
    "kernel_P_boundary",
    "kernel_P_boundary_all",
    "kernel_K",
    "z_map",
    "kernel_K_at_one",
    "cesaro_kernel",
    "cesaro_kernel_at_one",
    "expand",
    "cesaro_mean",
    "cesaro_mean_kernel",
]

TOL = 1e-12


@dataclass(frozen=True)
class UPoint:
    x1: float
    x2: float

    def __post_init__(self):
        if not (self.x1 ** 2 <= self.x2 + TOL and self.x2 <= 1 + TOL):
            raise ValueError(f"({self.x1}, {self.x2}) is not in the parabolic domain")

    @property
    def on_parabola(self):
        return self.x2 - self.x1 ** 2 <= TOL

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x1, self.x2], dtype=dtype)


ONE = UPoint(1.0, 1.0)


@dataclass(frozen=True)
class WeightU:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > -1 and self.b > -0.5):
            raise ValueError(f"U weight needs a > -1 and b > -1/2, got a={self.a!r}, b={self.b!r}")

    @property
    def d_ab(self):
        """Normalisation constant making ``d_ab * int U_{a,b} = 1``."""
        return c_lambda(self.b) * beta_const(self.b, self.a)

    def __call__(self, x):
        x1, x2 = _coords(x)
        return (1 - x2) ** self.a * (x2 - x1 ** 2) ** (self.b - 0.5)


def _coords(x):
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 2:
        raise ValueError(f"U points need a trailing axis of length 2, got shape {x.shape}")
    return x[..., 0], x[..., 1]


def _pair(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    shape = np.broadcast_shapes(x.shape, y.shape)
    return np.broadcast_to(x, shape), np.broadcast_to(y, shape)


def _scalar(a):
    return a if np.ndim(a) else float(a)


def basis_index(N):
    """``[(n, k) for n in 0..N for k in 0..n]``: the row order of :func:`basis_all`."""
    return [(n, k) for n in range(N + 1) for k in range(n + 1)]


def basis_all(N, w, x):
    r"""All ``P_{k,n}^{a,b}(x)`` with ``n <= N`` in :func:`basis_index` order.

    The factor ``x2^{k/2} P_k^{(b-1/2,b-1/2)}(x1/sqrt(x2))`` is produced by the
    homogenised recurrence in ``(x1, x2)``, so no division by ``sqrt(x2)``
    occurs and the vertex ``x = (0, 0)`` is regular.
    """
    x1, x2 = _coords(x)
    x2c = np.clip(x2, 0.0, None)
    g = jacobi_homogeneous_all(N, w.b - 0.5, w.b - 0.5, x1, np.sqrt(x2c))
    out = np.empty((len(basis_index(N)),) + x1.shape)
    cols = {}
    for k in range(N + 1):
        cols[k] = jacobi_all(N - k, w.b + k, w.a, 1 - 2 * x2)
    row = 0
    for n in range(N + 1):
        for k in range(n + 1):
            out[row] = cols[k][n - k] * g[k]
            row += 1
    return out


def basis_eval(k, n, w, x):
    """``P_{k,n}^{a,b}(x) = P_{n-k}^{(b+k,a)}(1-2x2) x2^{k/2} P_k^{(b-1/2,b-1/2)}(x1/sqrt x2)``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k!r}, n={n!r}")
    x1, x2 = _coords(x)
    g = jacobi_homogeneous_all(k, w.b - 0.5, w.b - 0.5, x1, np.sqrt(np.clip(x2, 0, None)))[k]
    return _scalar(jacobi_all(n - k, w.b + k, w.a, 1 - 2 * x2)[n - k] * g)


def basis_norm(k, n, w):
    """``h_{k,n}^{a,b} = (c_{b,a}/c_{b+k,a}) h_{n-k}^{(b+k,a)} h_k^{(b-1/2,b-1/2)}``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k!r}, n={n!r}")
    ratio = beta_const(w.b, w.a) / beta_const(w.b + k, w.a)
    return float(ratio * jacobi_norms(n - k, w.b + k, w.a)[n - k]
                 * jacobi_norms(k, w.b - 0.5, w.b - 0.5)[k])


def basis_norms(N, w):
    return np.array([basis_norm(k, n, w) for n, k in basis_index(N)])


def kernel_P(n, w, x, y):
    """Reproducing kernel of degree ``n`` by direct summation over the basis."""
    x, y = _pair(x, y)
    bx = basis_all(n, w, x)[-(n + 1):]
    by = basis_all(n, w, y)[-(n + 1):]
    h = np.array([basis_norm(k, n, w) for k in range(n + 1)])
    h = h.reshape((-1,) + (1,) * (bx.ndim - 1))
    return _scalar(np.sum(bx * by / h, axis=0))


def kernel_P_boundary_all(N, w, x2, y):
    r"""``P_m(U_{a,b}; (sqrt x2, x2), y)`` for ``m = 0..N`` via zonal factors.

    Collapses the sum over ``k`` with
    ``P_k(1) P_k(rho) / h_k = Z_k^b(rho)`` for the symmetric Jacobi factor; the
    term ``y2^{k/2} Z_k^b(y1/sqrt y2)`` is evaluated homogeneously.
    """
    y1, y2 = _coords(y)
    x2 = np.asarray(x2, dtype=float)
    x2, y1, y2 = np.broadcast_arrays(x2, y1, y2)
    zh = gegenbauer_Z_homogeneous_all(N, w.b, y1, y2)
    sx = np.sqrt(np.clip(x2, 0.0, None))
    out = np.zeros((N + 1,) + x2.shape)
    cba = beta_const(w.b, w.a)
    xpow = np.ones_like(sx)
    for m in range(N + 1):
        jx = jacobi_all(N - m, w.b + m, w.a, 1 - 2 * x2)
        jy = jacobi_all(N - m, w.b + m, w.a, 1 - 2 * y2)
        h = jacobi_norms(N - m, w.b + m, w.a)
        coef = beta_const(w.b + m, w.a) / cba
        common = coef * xpow * zh[m]
        for j in range(N - m + 1):
            out[m + j] += common * jx[j] * jy[j] / h[j]
        xpow = xpow * sx
    return out


def kernel_P_boundary(n, w, x2, y):
    """``P_n(U_{a,b}; (sqrt x2, x2), y)`` through the collapsed zonal form."""
    return _scalar(kernel_P_boundary_all(n, w, x2, y)[n])


def kernel_K(n, w, x, y):
    """Partial-sum kernel ``K_n = sum_{m<=n} P_m`` by direct summation."""
    x, y = _pair(x, y)
    b = basis_all(n, w, x)
    c = basis_all(n, w, y)
    h = basis_norms(n, w).reshape((-1,) + (1,) * (b.ndim - 1))
    return _scalar(np.sum(b * c / h, axis=0))


def z_map(x, t):
    """``z(x, t) = 1 - (1-t^2)(1-x1) - (1-t)^2 (1-x2) / 2``."""
    x1, x2 = _coords(x)
    t = np.asarray(t, dtype=float)
    return _scalar(1 - (1 - t * t) * (1 - x1) - 0.5 * (1 - t) ** 2 * (1 - x2))


def _one_point_integral(weights_m, w, x, n_points=None):
    """``sum_m weights_m[m] K-type term``: integrates
    ``sum_m c_m P_m(1) P_m(z(x,t)) / h_m`` over ``w_{a+b+1,b}`` (normalised)."""
    n = len(weights_m) - 1
    A, B = w.a + w.b + 1, w.b
    npts = n_points or default_points(3 * n, safety=4)
    rule = gauss_jacobi(npts, A, B).normalized()
    x1, x2 = _coords(x)
    t = rule.nodes.reshape((-1,) + (1,) * x1.ndim)
    z = 1 - (1 - t * t) * (1 - x1) - 0.5 * (1 - t) ** 2 * (1 - x2)
    P = jacobi_all(n, A, B, z)
    h = jacobi_norms(n, A, B)
    at1 = np.array([jacobi_at_one(m, A) for m in range(n + 1)])
    coef = (np.asarray(weights_m) * at1 / h).reshape((-1, 1) + (1,) * x1.ndim)
    vals = np.sum(coef * P, axis=0)
    return _scalar(np.tensordot(rule.weights, vals, axes=(0, 0)))


def kernel_K_at_one(n, w, x, n_points=None):
    r"""Closed form of ``K_n(U_{a,b}; 1, x)`` with ``1 = (1, 1)``.

    ``P_n^{(a+b+1,b)}(1)/h_n^{(a+b+1,b)}`` times the normalised integral of
    ``P_n^{(a+b+1,b)}(z(x, t))`` against ``w_{a+b+1,b}(t)``.
    """
    weights = np.zeros(n + 1)
    weights[n] = 1.0
    return _one_point_integral(weights, w, x, n_points)


def cesaro_kernel(spec, w, x, y):
    """``K_n^delta(x, y)`` from the partial-sum kernels by direct summation."""
    x, y = _pair(x, y)
    n = spec.n
    b = basis_all(n, w, x)
    c = basis_all(n, w, y)
    h = basis_norms(n, w)
    proj_w = cesaro_weights(spec, "proj")
    deg = np.array([nn for nn, _ in basis_index(n)])
    coef = (proj_w[deg] / h).reshape((-1,) + (1,) * (b.ndim - 1))
    return _scalar(np.sum(coef * b * c, axis=0))


def cesaro_kernel_at_one(spec, w, x, n_points=None):
    r"""Closed integral form of ``K_n^delta(U_{a,b}; 1, x)``.

    For ``delta > 0`` this is ``delta/(n+delta)`` times the normalised
    integral of the Jacobi Cesaro kernel ``k_n^{delta-1}(w_{a+b+1,b}; 1, z(x,t))``;
    the coefficients are folded so ``delta = 0`` (the partial sum) is covered.
    """
    return _one_point_integral(cesaro_weights(spec, "K"), w, x, n_points)


@dataclass
class UExpansion:
    """Fourier coefficients ``<f, P_{k,n}> / h_{k,n}`` for ``n <= N``."""

    weight: WeightU
    N: int
    coeffs: np.ndarray
    index: list = field(default_factory=list)

    def __post_init__(self):
        if not self.index:
            self.index = basis_index(self.N)
        if len(self.coeffs) != len(self.index):
            raise ValueError("coefficient vector does not match the full triangle of indices")

    @property
    def coeff(self):
        return dict(zip(self.index, self.coeffs))

    def projections(self, x):
        """``proj_m f(x)`` for ``m = 0..N`` stacked on axis 0."""
        b = basis_all(self.N, self.weight, x)
        deg = np.array([n for n, _ in self.index])
        out = np.zeros((self.N + 1,) + b.shape[1:])
        terms = self.coeffs.reshape((-1,) + (1,) * (b.ndim - 1)) * b
        np.add.at(out, deg, terms)
        return out

    def partial_sum(self, n, x):
        return _scalar(np.sum(self.projections(x)[: n + 1], axis=0))

    def cesaro_mean(self, spec, x):
        if spec.n > self.N:
            raise ValueError(f"Cesaro order {spec.n} exceeds expansion degree {self.N}")
        lam = cesaro_weights(spec, "proj")
        pr = self.projections(x)[: spec.n + 1]
        return _scalar(np.tensordot(lam, pr, axes=(0, 0)))


def expand(f, N, w, rule=None):
    """Coefficients of ``f`` by quadrature; ``f`` takes an ``(npts, 2)`` array.

    The default rule has level ``N + 8``, exact for polynomial ``f`` of
    degree up to ``N + 15``.
    """
    rule = rule or rule_u(w.a, w.b, N + 8)
    b = basis_all(N, w, rule.points)
    fv = np.asarray(f(rule.points), dtype=float)
    c = (b * rule.weights) @ fv / basis_norms(N, w)
    return UExpansion(w, N, c)


def cesaro_mean(exp, spec, x):
    """``S_n^delta(U_{a,b}; f, x)`` from an :class:`UExpansion` (coefficient space)."""
    return exp.cesaro_mean(spec, x)


def cesaro_mean_kernel(f, spec, w, rule, x):
    """Kernel-integral route: ``sum_i w_i f(y_i) K_n^delta(x, y_i)``."""
    x = np.asarray(x, dtype=float)
    fv = np.asarray(f(rule.points), dtype=float) * rule.weights
    xs = x.reshape(-1, 2)
    out = np.array([np.sum(fv * cesaro_kernel(spec, w, xi[None, :], rule.points)) for xi in xs])
    return _scalar(out.reshape(x.shape[:-1]))


__all__ += ["ONE", "CesaroSpec"]
