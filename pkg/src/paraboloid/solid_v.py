"""Orthogonal analysis on the solid paraboloid ``|x|^2 <= t <= 1``.

Points are Cartesian arrays whose last axis is ``(x_1, ..., x_d, t)``.  The
weight ``W = t^beta (1-t)^gamma (t - |x|^2)^{mu-1/2}`` is normalised to a
probability measure and ``alpha = beta + mu + (d-1)/2``.

The ball basis of degree ``m`` (for ``b_mu (1-|x|^2)^{mu-1/2}``) is
``P_j^{(mu-1/2, k+(d-2)/2)}(2|x|^2-1) S(x)`` with ``S`` a solid harmonic of
degree ``k = m - 2j``, normalised analytically.  Kernels do not depend on
this choice.
"""
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import domain_u
from .domain_u import WeightU
from .quadrature import (
    default_points,
    gauss_jacobi,
    rule_ball,
    rule_u,
    rule_v,
    sphere_area,
    ultraspherical_rule,
)
from .specfun import (
    beta_const,
    cesaro_weights,
    gegenbauer_Z_all,
    jacobi_all,
    jacobi_homogeneous_all,
    jacobi_norms,
)
from .sphere import dim_harmonics, solid_harmonics

__all__ = [
    "SolidPoint",
    "WeightV",
    "VExpansion",
    "ball_index",
    "ball_basis_all",
    "ball_basis_eval",
    "ball_kernel",
    "basis_index_v",
    "basis_bQ_all",
    "basis_bQ_eval",
    "basis_bQ_norm",
    "xi0",
    "xi",
    "transfer_T_solid",
    "kernel_P_v",
    "kernel_P_v_all",
    "kernel_P_v_direct",
    "kernel_K_v_direct",
    "kernel_K_top",
    "cesaro_kernel_v",
    "ode_residual_solid",
    "eigenvalue_solid",
    "euler_identities_check",
    "expand_v",
    "cesaro_mean_v",
    "cesaro_mean_v_kernel",
    "transfer_bound_ratio_v",
    "ball_zonal_average",
    "ball_interval_average",
]

TOL = 1e-12


@dataclass(frozen=True)
class SolidPoint:
    x: tuple
    t: float

    def __post_init__(self):
        x = tuple(float(v) for v in self.x)
        object.__setattr__(self, "x", x)
        if not (sum(v * v for v in x) <= self.t + TOL and self.t <= 1 + TOL):
            raise ValueError(f"({x}, {self.t}) violates |x|^2 <= t <= 1")

    def __array__(self, dtype=None, copy=None):
        return np.array(self.x + (self.t,), dtype=dtype)


@dataclass(frozen=True)
class WeightV:
    d: int
    beta: float
    gamma: float
    mu: float

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"need d >= 2, got {self.d!r}")
        if not (self.beta > -(self.d + 1) / 2 and self.gamma > -1 and self.mu > -0.5):
            raise ValueError("solid weight needs beta > -(d+1)/2, gamma > -1, mu > -1/2; "
                             f"got {self.beta!r}, {self.gamma!r}, {self.mu!r}")

    @property
    def alpha(self):
        return self.beta + self.mu + (self.d - 1) / 2

    @property
    def b_mu(self):
        """Normalisation constant of ``(1-|x|^2)^{mu-1/2}`` on the unit ball."""
        return 2 * beta_const((self.d - 2) / 2, self.mu - 0.5) / sphere_area(self.d)

    @property
    def b_bgm(self):
        return self.b_mu * beta_const(self.alpha, self.gamma)

    @property
    def u_weight(self):
        return WeightU(self.gamma, self.alpha)


def _split(p, d):
    p = np.asarray(p, dtype=float)
    if p.shape[-1] != d + 1:
        raise ValueError(f"solid points need a trailing axis of length {d + 1}, got {p.shape}")
    return p[..., :d], p[..., d]


def _scalar(a):
    return a if np.ndim(a) else float(a)


# -- ball ------------------------------------------------------------------

def ball_index(d, m):
    """``(j, k, ell)`` labelling the degree-``m`` ball basis; ``kappa`` is the 1-based position."""
    return [(j, m - 2 * j, l) for j in range(m // 2 + 1)
            for l in range(1, dim_harmonics(d, m - 2 * j) + 1)]


def _ball_norm2(d, mu, j, k):
    lam = (d - 2) / 2
    return (jacobi_norms(j, mu - 0.5, k + lam)[j]
            * beta_const(lam, mu - 0.5) / beta_const(k + lam, mu - 0.5))


def _ball_hom(d, mu, m, x, t):
    """``t^{m/2} P^m(x/sqrt t)`` for the whole degree-``m`` block; shape ``(dim, ...)``."""
    lam = (d - 2) / 2
    r2 = np.sum(x * x, axis=-1)
    rows = []
    for j in range(m // 2 + 1):
        k = m - 2 * j
        radial = jacobi_homogeneous_all(j, mu - 0.5, k + lam, 2 * r2 - t, t)[j]
        rows.append(radial * solid_harmonics(d, k, x) / np.sqrt(_ball_norm2(d, mu, j, k)))
    return np.concatenate(rows, axis=0)


def ball_basis_all(d, mu, m, x):
    """Orthonormal basis of degree-``m`` ball polynomials at ``x`` (shape ``(..., d)``)."""
    x = np.asarray(x, dtype=float)
    return _ball_hom(d, mu, m, x, np.ones(x.shape[:-1]))


def ball_basis_eval(d, mu, m, kappa, x):
    n = comb(m + d - 1, m)
    if not 1 <= kappa <= n:
        raise ValueError(f"kappa={kappa!r} outside 1..{n}")
    return _scalar(ball_basis_all(d, mu, m, x)[kappa - 1])


def _u_rule(mu, n_points):
    return ultraspherical_rule(mu, n_points)


def ball_kernel(d, mu, n, x, y, n_points=None):
    r"""Reproducing kernel of degree ``n`` on the ball via the addition formula.

    Integrates ``Z_n^{mu+(d-1)/2}(<x,y> + u sqrt(1-|x|^2) sqrt(1-|y|^2))``
    against the normalised ``(1-u^2)^{mu-1}``; ``mu = 0`` is the average of
    the values at ``u = +-1``.
    """
    if mu < 0:
        raise ValueError(f"the addition formula needs mu >= 0, got {mu!r}")
    x, y = np.asarray(x, float), np.asarray(y, float)
    a = np.sum(x * y, axis=-1)
    b = np.sqrt(np.clip(1 - np.sum(x * x, -1), 0, None) * np.clip(1 - np.sum(y * y, -1), 0, None))
    r = _u_rule(mu, n_points or default_points(n, safety=2))
    u = r.nodes.reshape((-1,) + (1,) * np.ndim(a))
    z = gegenbauer_Z_all(n, mu + (d - 1) / 2, np.clip(a + u * b, -1, 1))[n]
    return _scalar(np.tensordot(r.weights, z, axes=(0, 0)))


# -- solid basis -------------------------------------------------------------

def basis_index_v(N, d):
    """``(n, m, kappa)`` with ``kappa = 1..binom(m+d-1, m)``."""
    return [(n, m, k) for n in range(N + 1) for m in range(n + 1)
            for k in range(1, comb(m + d - 1, m) + 1)]


def basis_bQ_all(N, w, p):
    """All ``Q^n_{m,kappa}`` with ``n <= N``, rows in :func:`basis_index_v` order."""
    x, t = _split(p, w.d)
    hs = [_ball_hom(w.d, w.mu, m, x, t) for m in range(N + 1)]
    js = [jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * t) for m in range(N + 1)]
    return np.concatenate([js[m][n - m] * hs[m] for n in range(N + 1) for m in range(n + 1)], axis=0)


def basis_bQ_eval(n, m, kappa, w, p):
    """``P_{n-m}^{(m+alpha,gamma)}(1-2t) t^{m/2} P_kappa^m(x/sqrt t)``, evaluated homogeneously."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m!r}, n={n!r}")
    if not 1 <= kappa <= comb(m + w.d - 1, m):
        raise ValueError(f"kappa={kappa!r} out of range for m={m}")
    x, t = _split(p, w.d)
    return _scalar(jacobi_all(n - m, m + w.alpha, w.gamma, 1 - 2 * t)[n - m]
                   * _ball_hom(w.d, w.mu, m, x, t)[kappa - 1])


def basis_bQ_norm(n, m, w):
    """``(c_{alpha,gamma}/c_{m+alpha,gamma}) h_{n-m}^{(m+alpha,gamma)}``."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m!r}, n={n!r}")
    a = w.alpha
    return float(beta_const(a, w.gamma) / beta_const(m + a, w.gamma)
                 * jacobi_norms(n - m, m + a, w.gamma)[n - m])


# -- kernels -----------------------------------------------------------------

def _reduced(x, t):
    t = np.asarray(t, float)
    st = np.sqrt(np.clip(t, 0, None))
    return np.where(st[..., None] > 0, x / np.where(st > 0, st, 1.0)[..., None], 0.0)


def xi0(x, t, y, s, u):
    r"""``(<x,y> + u sqrt(t-|x|^2) sqrt(s-|y|^2)) / sqrt(st)``, in ``[-1, 1]``.

    Computed as ``<x',y'> + u sqrt(1-|x'|^2) sqrt(1-|y'|^2)`` with
    ``x' = x/sqrt t`` (zero when ``t = 0``).
    """
    xr, yr = _reduced(np.asarray(x, float), t), _reduced(np.asarray(y, float), s)
    a = np.sum(xr * yr, axis=-1)
    b = np.sqrt(np.clip(1 - np.sum(xr * xr, -1), 0, None) * np.clip(1 - np.sum(yr * yr, -1), 0, None))
    out = a + np.asarray(u, float) * b
    if np.any(np.abs(out) > 1 + 1e-10):
        raise ValueError("xi0 left [-1, 1]: inputs are not solid paraboloid points")
    return _scalar(np.clip(out, -1, 1))


def xi(x, t, y, s, z1, z2, u):
    """``(1-z1)/2 xi0 + (1+z1)/2 z2``."""
    z1, z2 = np.asarray(z1, float), np.asarray(z2, float)
    return _scalar(0.5 * (1 - z1) * xi0(x, t, y, s, u) + 0.5 * (1 + z1) * z2)


def _solid_nodes(w, degree, n_points):
    """Flattened ``(z1, z2, u, weight)`` nodes for the transfer integral."""
    n = n_points or default_points(degree, safety=4)
    ur = _u_rule(w.mu, n)
    if w.beta == 0:
        return None, None, ur.nodes, ur.weights
    r1 = gauss_jacobi(n, w.mu + (w.d - 1) / 2, w.beta - 1).normalized()
    r2 = gauss_jacobi(n, w.beta - 0.5, w.beta - 0.5).normalized()
    z1, z2, u = np.meshgrid(r1.nodes, r2.nodes, ur.nodes, indexing="ij")
    wt = r1.weights[:, None, None] * r2.weights[None, :, None] * ur.weights[None, None, :]
    return z1.ravel(), z2.ravel(), u.ravel(), wt.ravel()


def transfer_T_solid(g, w, p, q, n_points=None, degree=8):
    r"""Apply the solid transfer operator to ``g(t, z)``.

    ``beta = 0``: average of ``g(t, (sqrt(s) xi0, s))`` over ``u`` with the
    normalised ``(1-u^2)^{mu-1}``.  ``beta > 0``: additionally over
    ``(z1, z2)`` with density proportional to
    ``(1-z1)^{mu+(d-1)/2} (1+z1)^{beta-1} (1-z2^2)^{beta-1/2}``, using ``xi``.
    ``mu = 0`` uses the endpoint average in ``u``.  ``g`` follows the same
    broadcasting contract as :func:`paraboloid.surface_v0.transfer_T`.
    """
    if w.beta < 0 or w.mu < 0:
        raise ValueError("the solid transfer operator needs beta >= 0 and mu >= 0")
    x, t = _split(p, w.d)
    y, s = _split(q, w.d)
    xr, yr = _reduced(x, t), _reduced(y, s)
    a = np.sum(xr * yr, axis=-1)
    b = np.sqrt(np.clip(1 - np.sum(xr * xr, -1), 0, None) * np.clip(1 - np.sum(yr * yr, -1), 0, None))
    a, b, t, s = np.broadcast_arrays(a, b, t, s)
    z1, z2, u, wt = _solid_nodes(w, degree, n_points)
    shp = (-1,) + (1,) * a.ndim
    e = np.clip(a + u.reshape(shp) * b, -1, 1)
    if z1 is not None:
        e = 0.5 * (1 - z1.reshape(shp)) * e + 0.5 * (1 + z1.reshape(shp)) * z2.reshape(shp)
    rs = np.sqrt(np.clip(s, 0, None))
    z = np.stack([rs * e, np.broadcast_to(s, e.shape)], axis=-1)
    return _scalar(np.tensordot(wt, g(t[None], z), axes=(0, 0)))


def kernel_P_v_all(N, w, p, q, n_points=None):
    """``P_m(W; p, q)`` for ``m = 0..N`` through the transfer of boundary kernels on U."""
    wu = w.u_weight

    def g(t, z):
        return np.moveaxis(domain_u.kernel_P_boundary_all(N, wu, t, z), 0, -1)

    return np.moveaxis(np.asarray(transfer_T_solid(g, w, p, q, n_points, degree=N)), -1, 0)


def kernel_P_v(n, w, p, q, n_points=None):
    """Reproducing kernel of degree ``n`` on the solid paraboloid (transfer route)."""
    return _scalar(kernel_P_v_all(n, w, p, q, n_points)[n])


def _direct_terms(N, w, p, q):
    p, q = np.broadcast_arrays(np.asarray(p, float), np.asarray(q, float))
    idx = basis_index_v(N, w.d)
    bp, bq = basis_bQ_all(N, w, p), basis_bQ_all(N, w, q)
    h = np.array([basis_bQ_norm(n, m, w) for n, m, _ in idx]).reshape((-1,) + (1,) * (bp.ndim - 1))
    terms = bp * bq / h
    deg = np.array([n for n, _, _ in idx])
    out = np.zeros((N + 1,) + bp.shape[1:])
    np.add.at(out, deg, terms)
    return out


def kernel_P_v_direct(n, w, p, q):
    """``sum_{m,kappa} Q Q / h`` over the explicit basis (``d`` in {2, 3})."""
    return _scalar(_direct_terms(n, w, p, q)[n])


def kernel_K_v_direct(n, w, p, q):
    return _scalar(np.sum(_direct_terms(n, w, p, q), axis=0))


def kernel_K_top(n, w, x, q, n_points=None):
    r"""Closed form of ``K_n(W_{0,gamma,mu}; (x, 1), q)``.

    A ``(u, v)`` double integral of ``P_n^{(gamma+tau+1,tau)}(z')`` with
    ``tau = mu + (d-1)/2`` and
    ``z' = 1 - (1-v^2)(1 - sqrt(s) xi0(x,1,y,s;u)) - (1-v)^2 (1-s)/2``.
    """
    if w.beta != 0:
        raise ValueError("the closed form at t = 1 is available for beta = 0 only")
    y, s = _split(q, w.d)
    x = np.asarray(x, float)
    ur = _u_rule(w.mu, n_points or default_points(n, safety=4))
    u = ur.nodes.reshape((-1,) + (1,) * np.ndim(s))
    e = xi0(x, 1.0, y, s, u)
    s_b = np.broadcast_to(s, np.shape(e))
    pts = np.stack([np.sqrt(np.clip(s_b, 0, None)) * e, s_b], axis=-1)
    vals = domain_u.kernel_K_at_one(n, WeightU(w.gamma, w.mu + (w.d - 1) / 2), pts)
    return _scalar(np.tensordot(ur.weights, vals, axes=(0, 0)))


def cesaro_kernel_v(spec, w, p, q, n_points=None):
    """``K_n^delta(W; p, q)`` by transferring the Cesaro-weighted boundary kernel on U."""
    lam = cesaro_weights(spec, "proj")
    wu = w.u_weight

    def g(t, z):
        return np.tensordot(lam, domain_u.kernel_P_boundary_all(spec.n, wu, t, z), axes=(0, 0))

    return transfer_T_solid(g, w, p, q, n_points, degree=spec.n)


# -- differential equation -----------------------------------------------------

def eigenvalue_solid(n, m, w):
    """``-(n(n+mu+gamma+(d+1)/2) - m(n+mu+(gamma+d)/2))``."""
    d, mu, g = w.d, w.mu, w.gamma
    return -(n * (n + mu + g + (d + 1) / 2) - m * (n + mu + (g + d) / 2))


def _fd_derivs(f, x, t, h):
    """Value, t-derivatives, x-gradient, mixed derivatives and Laplacian by central differences."""
    d = len(x)
    e = np.eye(d) * h
    f0 = f(x, t)
    ft = (f(x, t + h) - f(x, t - h)) / (2 * h)
    ftt = (f(x, t + h) - 2 * f0 + f(x, t - h)) / (h * h)
    gx = np.array([(f(x + e[i], t) - f(x - e[i], t)) / (2 * h) for i in range(d)])
    lap = sum((f(x + e[i], t) - 2 * f0 + f(x - e[i], t)) / (h * h) for i in range(d))
    fxt = np.array([(f(x + e[i], t + h) - f(x + e[i], t - h) - f(x - e[i], t + h) + f(x - e[i], t - h))
                    / (4 * h * h) for i in range(d)])
    return f0, ft, ftt, gx, fxt, lap


def _check_interior(x, t, h, margin=10):
    if not (h * margin < t < 1 - h * margin and np.dot(x, x) < t - h * margin):
        raise ValueError("finite differences need an interior point away from the boundary")


def ode_residual_solid(n, m, kappa, w, p, h=1e-4, return_ratio=False):
    r"""Residual of the solid-paraboloid equation for ``Q^n_{m,kappa}`` by finite differences.

    Operator: ``t(1-t) d_tt + (1-t) <x,grad> d_t + (1-t) Lap/4
    + (mu+(d+1)/2)(1-t) d_t - (gamma+1)/2 (2t d_t + <x,grad>)``, applied to
    ``u`` and compared with ``eigenvalue_solid(n, m) u``.  Needs ``beta = 0``.
    With ``return_ratio`` the measured ``(L u)/u`` is returned as well.
    """
    if w.beta != 0:
        raise ValueError("the solid differential equation holds for beta = 0 only")
    x, t = _split(p, w.d)
    x, t = np.array(x, float), float(t)
    _check_interior(x, t, h)

    def f(xx, tt):
        return basis_bQ_eval(n, m, kappa, w, np.append(xx, tt))

    u, ut, utt, gx, uxt, lap = _fd_derivs(f, x, t, h)
    xg, xgt = float(x @ gx), float(x @ uxt)
    Lu = (t * (1 - t) * utt + (1 - t) * xgt + 0.25 * (1 - t) * lap
          + (w.mu + (w.d + 1) / 2) * (1 - t) * ut - 0.5 * (w.gamma + 1) * (2 * t * ut + xg))
    res = Lu - eigenvalue_solid(n, m, w) * u
    if return_ratio:
        return res, (Lu / u if u != 0 else float("nan"))
    return res


def euler_identities_check(m, kappa, mu, d, p, h=1e-4):
    r"""Residuals of ``(2t d_t + <x,grad>) H = m H`` and
    ``2t d_tt H + <x,grad> d_t H = (m-2) d_t H`` for ``H = t^{m/2} P_kappa^m(x/sqrt t)``."""
    x, t = _split(p, d)
    x, t = np.array(x, float), float(t)
    _check_interior(x, t, h)

    def f(xx, tt):
        return float(_ball_hom(d, mu, m, xx, np.asarray(tt))[kappa - 1])

    H, Ht, Htt, gx, Hxt, _ = _fd_derivs(f, x, t, h)
    r1 = 2 * t * Ht + x @ gx - m * H
    r2 = 2 * t * Htt + x @ Hxt - (m - 2) * Ht
    return float(r1), float(r2)


# -- expansions ----------------------------------------------------------------

@dataclass
class VExpansion:
    """Coefficients on the solid paraboloid; ``blocks[m][n - m, kappa - 1]``."""

    weight: WeightV
    N: int
    blocks: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.blocks) != self.N + 1:
            raise ValueError("need one coefficient block per ball degree")
        for m, b in enumerate(self.blocks):
            if b.shape != (self.N - m + 1, comb(m + self.weight.d - 1, m)):
                raise ValueError(f"block {m} has shape {b.shape}")

    @property
    def coeff(self):
        return {(n, m, k): float(self.blocks[m][n - m, k - 1])
                for n, m, k in basis_index_v(self.N, self.weight.d)}

    def projections(self, p):
        w = self.weight
        x, t = _split(p, w.d)
        out = np.zeros((self.N + 1,) + t.shape)
        for m in range(self.N + 1):
            hb = _ball_hom(w.d, w.mu, m, x, t)
            j = jacobi_all(self.N - m, m + w.alpha, w.gamma, 1 - 2 * t)
            out[m:] += j * np.tensordot(self.blocks[m], hb, axes=(1, 0))
        return out

    def partial_sum(self, n, p):
        return _scalar(np.sum(self.projections(p)[: n + 1], axis=0))

    def cesaro_mean(self, spec, p):
        if spec.n > self.N:
            raise ValueError(f"Cesaro order {spec.n} exceeds expansion degree {self.N}")
        lam = cesaro_weights(spec, "proj")
        return _scalar(np.tensordot(lam, self.projections(p)[: spec.n + 1], axes=(0, 0)))


def expand_v(f, N, w, rule=None):
    """Coefficients of ``f`` (Cartesian ``(x, t)`` input) using the tensor structure of :func:`rule_v`."""
    rule = rule or rule_v(w.d, w.beta, w.gamma, w.mu, 2 * N + 8)
    tr, ball = rule.factors
    fv = np.asarray(f(rule.points), dtype=float).reshape(len(tr), len(ball))
    blocks = []
    for m in range(N + 1):
        b = ball_basis_all(w.d, w.mu, m, ball.points)
        G = fv @ (b * ball.weights).T
        j = jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * tr.nodes) * np.sqrt(tr.nodes) ** m
        h = np.array([basis_bQ_norm(n, m, w) for n in range(m, N + 1)])
        blocks.append((j * tr.weights) @ G / h[:, None])
    return VExpansion(w, N, blocks)


def cesaro_mean_v(exp, spec, p):
    return exp.cesaro_mean(spec, p)


def cesaro_mean_v_kernel(f, spec, w, rule, x):
    """``S_n^delta f`` at ``(x, 1)`` via the transfer of ``K_n^delta(U; 1, .)``."""
    wu = w.u_weight
    fv = np.asarray(f(rule.points), dtype=float) * rule.weights
    x = np.atleast_2d(np.asarray(x, dtype=float))

    def g(t, z):
        return domain_u.cesaro_kernel_at_one(spec, wu, z)

    out = [np.sum(fv * transfer_T_solid(g, w, np.append(xx, 1.0)[None, :], rule.points, degree=spec.n))
           for xx in x]
    return out[0] if len(out) == 1 else np.array(out)


def transfer_bound_ratio_v(g, w, p, level=16):
    """Ratio of ``int |T g(p, .)| W`` over the solid to ``int |g(t, .)| U_{gamma,alpha}``."""
    p = np.asarray(p, float)
    rv = rule_v(w.d, w.beta, w.gamma, w.mu, level)
    top = np.sum(rv.weights * np.abs(transfer_T_solid(g, w, p[None, :], rv.points, degree=level)))
    ru = rule_u(w.gamma, w.alpha, level)
    bottom = np.sum(ru.weights * np.abs(g(np.array([p[-1]]), ru.points)))
    return float(top / bottom)


# -- integral identity on the ball ---------------------------------------------

def ball_zonal_average(h, d, mu, v, degree):
    r"""``b_mu c_{mu-1/2} int_B int h(<u,v> + sqrt(1-|u|^2) sqrt(1-|v|^2) r) (1-r^2)^{mu-1} dr (1-|u|^2)^{mu-1/2} du``.

    Both measures are normalised; ``mu = 0`` uses the endpoint average in ``r``.
    """
    rb = rule_ball(d, mu, degree)
    rr = _u_rule(mu, default_points(degree))
    v = np.asarray(v, float)
    a = rb.points @ v
    b = np.sqrt(np.clip(1 - np.sum(rb.points ** 2, -1), 0, None) * max(0.0, 1 - v @ v))
    vals = h(a[:, None] + b[:, None] * rr.nodes[None, :])
    return float(rb.weights @ vals @ rr.weights)


def ball_interval_average(h, d, mu, degree):
    """``c_{mu+(d-1)/2} int_{-1}^1 h(t) (1-t^2)^{mu+(d-2)/2} dt``."""
    lam = mu + (d - 2) / 2
    r = gauss_jacobi(default_points(degree), lam, lam).normalized()
    return float(r.weights @ h(r.nodes))

