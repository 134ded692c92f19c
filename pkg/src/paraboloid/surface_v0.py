"""Orthogonal analysis on the paraboloid surface ``x = sqrt(t) xi, 0 <= t <= 1``.

Two point conventions are used:

* kernels and basis functions take *surface coordinates*: arrays whose last
  axis is ``(xi_1, ..., xi_d, t)`` with ``|xi| = 1``.  Storing ``xi`` keeps
  the apex ``t = 0`` free of a coordinate singularity.
* functions being expanded receive *Cartesian* points ``(x_1, ..., x_d, t)``
  (see :func:`to_cartesian`).

The weight is ``t^beta (1-t)^gamma`` against ``t^{(d-1)/2} dt dsigma(xi)``,
normalised to a probability measure; ``alpha = beta + (d-1)/2``.
"""
from dataclasses import dataclass, field

import numpy as np

from . import domain_u
from .domain_u import WeightU
from .quadrature import default_points, gauss_jacobi, rule_u, rule_v0, sphere_area
from .specfun import (
    beta_const,
    cesaro_weights,
    gegenbauer_Z_all,
    jacobi_all,
    jacobi_deriv,
    jacobi_deriv2,
    jacobi_eval,
    jacobi_norms,
)
from .sphere import dim_harmonics, sph_basis

__all__ = [
    "SurfacePoint",
    "WeightV0",
    "V0Expansion",
    "to_cartesian",
    "basis_index_v0",
    "basis_Q_eval",
    "basis_Q_all",
    "basis_Q_norm",
    "transfer_T",
    "kernel_P_v0",
    "kernel_P_v0_all",
    "kernel_P_v0_direct",
    "kernel_K_v0_direct",
    "kernel_K_boundary",
    "cesaro_kernel_v0",
    "ode_residual",
    "expand_v0",
    "cesaro_mean_v0",
    "cesaro_mean_v0_kernel",
    "transfer_bound_ratio",
]

TOL = 1e-12


@dataclass(frozen=True)
class SurfacePoint:
    xi: tuple
    t: float

    def __post_init__(self):
        xi = tuple(float(v) for v in self.xi)
        object.__setattr__(self, "xi", xi)
        if abs(np.linalg.norm(xi) - 1.0) > TOL:
            raise ValueError(f"xi must be a unit vector, |xi| = {np.linalg.norm(xi)!r}")
        if not -TOL <= self.t <= 1 + TOL:
            raise ValueError(f"t must lie in [0, 1], got {self.t!r}")

    @property
    def d(self):
        return len(self.xi)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.xi + (self.t,), dtype=dtype)


@dataclass(frozen=True)
class WeightV0:
    d: int
    beta: float
    gamma: float

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"need d >= 2, got {self.d!r}")
        if not (self.beta > -(self.d + 1) / 2 and self.gamma > -1):
            raise ValueError(
                f"surface weight needs beta > -(d+1)/2 and gamma > -1, got {self.beta!r}, {self.gamma!r}")

    @property
    def alpha(self):
        return self.beta + (self.d - 1) / 2

    @property
    def b_bg(self):
        return beta_const(self.alpha, self.gamma) / sphere_area(self.d)

    @property
    def u_weight(self):
        """Weight ``U_{gamma, alpha}`` on the parabolic domain whose kernels transfer here."""
        return WeightU(self.gamma, self.alpha)


def _split(p, d):
    p = np.asarray(p, dtype=float)
    if p.shape[-1] != d + 1:
        raise ValueError(f"surface points need a trailing axis of length {d + 1}, got {p.shape}")
    return p[..., :d], p[..., d]


def to_cartesian(p):
    """``(xi, t) -> (sqrt(t) xi, t)``."""
    p = np.asarray(p, dtype=float)
    t = p[..., -1:]
    return np.concatenate([np.sqrt(np.clip(t, 0, None)) * p[..., :-1], t], axis=-1)


def _scalar(a):
    return a if np.ndim(a) else float(a)


def basis_index_v0(N, d):
    """``(n, m, ell)`` for ``0 <= m <= n <= N``, ``ell = 1..dim H_m^d``."""
    return [(n, m, l) for n in range(N + 1) for m in range(n + 1)
            for l in range(1, dim_harmonics(d, m) + 1)]


def basis_Q_all(N, w, p):
    """All ``Q^n_{m,ell}`` with ``n <= N`` at surface points, rows in :func:`basis_index_v0` order."""
    xi, t = _split(p, w.d)
    ys = [sph_basis(w.d, m, xi) for m in range(N + 1)]
    js = [jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * t) * np.sqrt(t) ** m for m in range(N + 1)]
    rows = []
    for n in range(N + 1):
        for m in range(n + 1):
            rows.append(js[m][n - m] * ys[m])
    return np.concatenate(rows, axis=0)


def basis_Q_eval(n, m, ell, w, p):
    """``P_{n-m}^{(m+alpha,gamma)}(1-2t) t^{m/2} Y_ell^m(xi)``."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m!r}, n={n!r}")
    if not 1 <= ell <= dim_harmonics(w.d, m):
        raise ValueError(f"ell={ell!r} out of range for m={m}, d={w.d}")
    xi, t = _split(p, w.d)
    y = sph_basis(w.d, m, xi)[ell - 1]
    return _scalar(jacobi_eval(n - m, m + w.alpha, w.gamma, 1 - 2 * t) * np.sqrt(t) ** m * y)


def basis_Q_norm(n, m, w):
    """``(c_{alpha,gamma}/c_{m+alpha,gamma}) h_{n-m}^{(m+alpha,gamma)}``."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m!r}, n={n!r}")
    a = w.alpha
    return float(beta_const(a, w.gamma) / beta_const(m + a, w.gamma)
                 * jacobi_norms(n - m, m + a, w.gamma)[n - m])


def _transfer_rules(w, n_points):
    r1 = gauss_jacobi(n_points, (w.d - 2) / 2, w.beta - 0.5).normalized()
    r2 = gauss_jacobi(n_points, w.beta, w.beta).normalized()
    z1, z2 = np.meshgrid(r1.nodes, r2.nodes, indexing="ij")
    wt = np.outer(r1.weights, r2.weights)
    return z1.ravel(), z2.ravel(), wt.ravel()


def transfer_T(g, w, p, q, n_points=None, degree=8):
    r"""Apply the transfer operator to ``g(t, z)``, ``z`` a point of the parabolic domain.

    For ``beta > -1/2`` the slice ``g(t, .)`` is averaged over
    ``z = (sqrt(s) ((1-z1)/2 <xi,eta> + (1+z1)/2 z2), s)`` with ``(z1, z2)``
    distributed proportionally to
    ``(1-z1)^{(d-2)/2} (1+z1)^{beta-1/2} (1-z2^2)^beta``.
    For ``beta = -1/2`` it is the single value ``g(t, (sqrt(s) <xi,eta>, s))``.

    ``g`` must broadcast: it receives ``t`` of shape ``(1, ...)`` and ``z`` of
    shape ``(k, ..., 2)`` where ``k`` indexes quadrature nodes.  ``degree``
    is the polynomial degree of ``g`` in ``z`` used to size the rules.
    """
    if w.beta < -0.5:
        raise ValueError(f"transfer operator needs beta >= -1/2, got {w.beta!r}")
    xi, t = _split(p, w.d)
    eta, s = _split(q, w.d)
    c = np.clip(np.sum(xi * eta, axis=-1), -1.0, 1.0)
    c, t, s = np.broadcast_arrays(c, t, s)
    rs = np.sqrt(np.clip(s, 0, None))
    if w.beta == -0.5:
        z = np.stack([rs * c, s], axis=-1)[None]
        return _scalar(g(t[None], z)[0])
    npts = n_points or default_points(degree, safety=4)
    z1, z2, wt = _transfer_rules(w, npts)
    shp = (-1,) + (1,) * c.ndim
    z1, z2 = z1.reshape(shp), z2.reshape(shp)
    inner = rs * (0.5 * (1 - z1) * c + 0.5 * (1 + z1) * z2)
    z = np.stack([inner, np.broadcast_to(s, inner.shape)], axis=-1)
    vals = g(t[None], z)
    return _scalar(np.tensordot(wt, vals, axes=(0, 0)))


def kernel_P_v0_all(N, w, p, q, n_points=None):
    """``P_m(V0; p, q)`` for ``m = 0..N`` via the transfer of boundary kernels on U."""
    wu = w.u_weight

    def g(t, z):
        return np.moveaxis(domain_u.kernel_P_boundary_all(N, wu, t, z), 0, -1)

    return np.moveaxis(np.asarray(transfer_T(g, w, p, q, n_points, degree=N)), -1, 0)


def kernel_P_v0(n, w, p, q, n_points=None):
    """Reproducing kernel of degree ``n`` on the surface (transfer route)."""
    return _scalar(kernel_P_v0_all(n, w, p, q, n_points)[n])


def _zonal_terms(N, w, p, q):
    """Per-degree kernels from the zonal sum ``sum_m J J (ts)^{m/2} Z_m(<xi,eta>) / h``."""
    xi, t = _split(p, w.d)
    eta, s = _split(q, w.d)
    c = np.sum(xi * eta, axis=-1)
    c, t, s = np.broadcast_arrays(c, t, s)
    z = gegenbauer_Z_all(N, (w.d - 2) / 2, c)
    out = np.zeros((N + 1,) + c.shape)
    ts = np.sqrt(t * s)
    for m in range(N + 1):
        jt = jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * t)
        js = jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * s)
        for n in range(m, N + 1):
            out[n] += jt[n - m] * js[n - m] * ts ** m * z[m] / basis_Q_norm(n, m, w)
    return out


def kernel_P_v0_direct(n, w, p, q, zonal=None):
    r"""Reproducing kernel by direct summation.

    With explicit harmonics (``d`` in {2, 3}) this is
    ``sum_{m, ell} Q^n_{m,ell}(p) Q^n_{m,ell}(q) / h_{m,n}``; otherwise (or
    with ``zonal=True``) the sum over ``ell`` is replaced by the zonal kernel.
    """
    if zonal is None:
        zonal = w.d not in (2, 3)
    if zonal:
        return _scalar(_zonal_terms(n, w, p, q)[n])
    p, q = np.broadcast_arrays(np.asarray(p, float), np.asarray(q, float))
    idx = basis_index_v0(n, w.d)
    sel = [i for i, (nn, _, _) in enumerate(idx) if nn == n]
    bp = basis_Q_all(n, w, p)[sel]
    bq = basis_Q_all(n, w, q)[sel]
    h = np.array([basis_Q_norm(n, idx[i][1], w) for i in sel]).reshape((-1,) + (1,) * (bp.ndim - 1))
    return _scalar(np.sum(bp * bq / h, axis=0))


def kernel_K_v0_direct(n, w, p, q):
    """Partial-sum kernel ``sum_{m<=n} P_m`` from the zonal direct sum."""
    return _scalar(np.sum(_zonal_terms(n, w, p, q), axis=0))


def kernel_K_boundary(n, w, xi, q, n_points=None):
    r"""Closed form of ``K_n(V0; (xi, 1), q)`` for ``beta = -1/2``.

    A single integral against ``w_{gamma+d/2,(d-2)/2}`` of
    ``P_n^{(gamma+d/2,(d-2)/2)}(z')`` with
    ``z' = 1 - (1-v^2)(1 - <xi,y>) - (1-v)^2 (1-s)/2``.
    """
    if w.beta != -0.5:
        raise ValueError("the closed boundary form is available for beta = -1/2 only")
    eta, s = _split(q, w.d)
    c = np.sum(np.asarray(xi, float) * eta, axis=-1)
    y = np.stack(np.broadcast_arrays(np.sqrt(np.clip(s, 0, None)) * c, s), axis=-1)
    return domain_u.kernel_K_at_one(n, WeightU(w.gamma, (w.d - 2) / 2), y, n_points)


def cesaro_kernel_v0(spec, w, p, q, n_points=None):
    """``K_n^delta(V0; p, q)`` by transferring the Cesaro-weighted boundary kernel on U."""
    lam = cesaro_weights(spec, "proj")
    wu = w.u_weight

    def g(t, z):
        pm = domain_u.kernel_P_boundary_all(spec.n, wu, t, z)
        return np.tensordot(lam, pm, axes=(0, 0))

    return transfer_T(g, w, p, q, n_points, degree=spec.n)


def ode_residual(n, m, w, t):
    r"""Residual of the radial equation satisfied by ``f = P_{n-m}^{(m+alpha,gamma)}(1-2t) t^{m/2}``.

    ``t(1-t) f'' + (1+alpha-(2+alpha+gamma) t) f' - m(m+2 alpha)(1-t)/(4t) f
    + (n(n+alpha+gamma+1) - m(2n+2 alpha+gamma+1)/2) f``, ``alpha = (d-2)/2``.
    Requires ``beta = -1/2`` and ``0 < t < 1`` (``t = 0`` allowed for ``m = 0``).
    """
    if w.beta != -0.5:
        raise ValueError("the surface differential equation holds for beta = -1/2 only")
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m!r}, n={n!r}")
    t = np.asarray(t, dtype=float)
    if np.any(t >= 1) or np.any(t < 0) or (m > 0 and np.any(t <= 0)):
        raise ValueError("t must lie in (0, 1)")
    a, g = (w.d - 2) / 2, w.gamma
    k, A = n - m, m + a
    u = 1 - 2 * t
    P = jacobi_eval(k, A, g, u)
    dP = -2 * jacobi_deriv(k, A, g, u)
    d2P = 4 * jacobi_deriv2(k, A, g, u)
    h = m / 2
    # write f = P * t^h and divide the whole residual by t^h
    safe = np.where(t > 0, t, 1.0)
    f = P
    df = dP + h * P / safe
    d2f = d2P + 2 * h * dP / safe + h * (h - 1) * P / safe ** 2
    lam = n * (n + a + g + 1) - m * (2 * n + 2 * a + g + 1) / 2
    res = (t * (1 - t) * d2f + (1 + a - (2 + a + g) * t) * df
           - m * (m + 2 * a) * (1 - t) / (4 * safe) * f + lam * f)
    return _scalar(res * np.sqrt(t) ** m)


@dataclass
class V0Expansion:
    """Fourier coefficients on the surface.

    ``blocks[m]`` has shape ``(N - m + 1, dim H_m^d)`` and holds the
    coefficient of ``Q^n_{m,ell}`` at ``[n - m, ell - 1]``.
    """

    weight: WeightV0
    N: int
    blocks: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.blocks) != self.N + 1:
            raise ValueError("need one coefficient block per harmonic degree")
        for m, b in enumerate(self.blocks):
            if b.shape != (self.N - m + 1, dim_harmonics(self.weight.d, m)):
                raise ValueError(f"block {m} has shape {b.shape}")

    @property
    def coeff(self):
        return {(n, m, l): float(self.blocks[m][n - m, l - 1])
                for n, m, l in basis_index_v0(self.N, self.weight.d)}

    def projections(self, p):
        w = self.weight
        xi, t = _split(p, w.d)
        out = np.zeros((self.N + 1,) + t.shape)
        for m in range(self.N + 1):
            y = sph_basis(w.d, m, xi)
            j = jacobi_all(self.N - m, m + w.alpha, w.gamma, 1 - 2 * t) * np.sqrt(t) ** m
            ang = np.tensordot(self.blocks[m], y, axes=(1, 0))
            out[m:] += j * ang
        return out

    def partial_sum(self, n, p):
        return _scalar(np.sum(self.projections(p)[: n + 1], axis=0))

    def cesaro_mean(self, spec, p):
        if spec.n > self.N:
            raise ValueError(f"Cesaro order {spec.n} exceeds expansion degree {self.N}")
        lam = cesaro_weights(spec, "proj")
        return _scalar(np.tensordot(lam, self.projections(p)[: spec.n + 1], axes=(0, 0)))


def expand_v0(f, N, w, rule=None):
    """Coefficients of ``f`` (a function of Cartesian ``(x, t)``) up to degree ``N``.

    Uses the tensor structure of :func:`rule_v0`: the sphere integrals are
    done once per ``t`` node.  The default rule has degree ``2N + 8``.
    """
    rule = rule or rule_v0(w.d, w.beta, w.gamma, 2 * N + 8)
    tr, sph = rule.factors
    fv = np.asarray(f(to_cartesian(rule.points)), dtype=float).reshape(len(tr), len(sph))
    blocks = []
    for m in range(N + 1):
        y = sph_basis(w.d, m, sph.points)
        G = fv @ (y * sph.weights).T
        j = jacobi_all(N - m, m + w.alpha, w.gamma, 1 - 2 * tr.nodes) * np.sqrt(tr.nodes) ** m
        h = np.array([basis_Q_norm(n, m, w) for n in range(m, N + 1)])
        blocks.append((j * tr.weights) @ G / h[:, None])
    return V0Expansion(w, N, blocks)


def cesaro_mean_v0(exp, spec, p):
    """``S_n^delta f(p)`` from a :class:`V0Expansion`."""
    return exp.cesaro_mean(spec, p)


def cesaro_mean_v0_kernel(f, spec, w, rule, xi):
    r"""``S_n^delta f`` at the rim point ``(xi, 1)`` through the kernel route.

    The Cesaro kernel at ``(xi, 1)`` is the transfer of the closed integral
    form of ``K_n^delta(U_{gamma,alpha}; 1, .)``.
    """
    wu = w.u_weight
    fv = np.asarray(f(to_cartesian(rule.points)), dtype=float) * rule.weights
    xi = np.atleast_2d(np.asarray(xi, dtype=float))
    out = []
    for x in xi:
        p = np.append(x, 1.0)

        def g(t, z):
            return domain_u.cesaro_kernel_at_one(spec, wu, z)

        k = transfer_T(g, w, p[None, :], rule.points, degree=spec.n)
        out.append(np.sum(fv * k))
    return out[0] if len(out) == 1 else np.array(out)


def transfer_bound_ratio(g, w, t, level=20):
    r"""Measured constant in the transfer bound at surface height ``t``.

    Ratio of ``int |T g((xi,t), .)|`` over the surface to
    ``int |g(t, .)|`` over the parabolic domain, both with normalised
    weights.  For ``beta = -1/2`` the ratio is 1 up to quadrature error.
    """
    p = np.zeros(w.d + 1)
    p[0], p[-1] = 1.0, t
    rv = rule_v0(w.d, w.beta, w.gamma, level)
    top = np.sum(rv.weights * np.abs(transfer_T(g, w, p[None, :], rv.points, degree=level)))
    ru = rule_u(w.gamma, w.alpha, level)
    bottom = np.sum(ru.weights * np.abs(g(np.array([t]), ru.points)))
    return float(top / bottom)
