"""Gauss-Jacobi rules and the product rules built from them.

Every :class:`ProductRule` carries normalised weights (they sum to one), so
``rule.integrate(f)`` is the integral against the probability measure of the
corresponding weight function, normalisation constant included.

Point layouts (``rule.points`` is always an ``(npts, k)`` array):

========  =============================================
domain    columns
========  =============================================
U         ``x1, x2``
SPHERE    ``xi_1 .. xi_d``
BALL      ``x_1 .. x_d``
V0        ``xi_1 .. xi_d, t`` (surface point ``(sqrt(t) xi, t)``)
V         ``x_1 .. x_d, t``
========  =============================================

Tensor rules keep their one-dimensional ``factors`` so separable algorithms
can exploit the structure; points are enumerated in C order over factors.
"""
import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

__all__ = [
    "Rule1D",
    "ProductRule",
    "QuadratureError",
    "default_points",
    "gauss_jacobi",
    "gauss_jacobi_01",
    "ultraspherical_rule",
    "rule_u",
    "rule_sphere",
    "rule_ball",
    "rule_v0",
    "rule_v",
    "sphere_area",
    "write_rule_csv",
]


class QuadratureError(RuntimeError):
    """Raised when a rule cannot be generated to working accuracy."""


def _frozen(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Rule1D:
    nodes: np.ndarray
    weights: np.ndarray
    exactness: int
    weight_desc: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", _frozen(self.nodes))
        object.__setattr__(self, "weights", _frozen(self.weights))

    @property
    def mass(self):
        return float(np.sum(self.weights))

    def normalized(self):
        return Rule1D(self.nodes, self.weights / self.mass, self.exactness,
                      dict(self.weight_desc, normalized=True))

    def integrate(self, f):
        return float(np.sum(self.weights * f(self.nodes)))

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class ProductRule:
    points: np.ndarray
    weights: np.ndarray
    exactness: int
    domain_tag: str
    factors: tuple = ()
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "points", _frozen(self.points))
        object.__setattr__(self, "weights", _frozen(self.weights))

    def integrate(self, f):
        """Sum ``w_i f(p_i)`` in ascending node order with numpy's pairwise sum.

        ``f`` receives the whole ``(npts, k)`` point array.
        """
        vals = np.asarray(f(self.points), dtype=float)
        return float(np.sum(self.weights * vals))

    def __len__(self):
        return len(self.weights)


def default_points(exactness, safety=2):
    """Node count for a Gauss rule exact to ``exactness``, plus safety nodes."""
    return max(1, math.ceil((exactness + 1) / 2) + safety)


def _jacobi_recurrence(n, alpha, beta):
    """Monic recurrence coefficients (diagonal, off-diagonal) for w_{alpha,beta}."""
    ab = alpha + beta
    k = np.arange(n, dtype=float)
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    if n > 1:
        kk = k[1:]
        diag[1:] = (beta ** 2 - alpha ** 2) / ((2 * kk + ab) * (2 * kk + ab + 2))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = 4.0 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab))
        kk = k[2:n]
        off[1:] = (4 * kk * (kk + alpha) * (kk + beta) * (kk + ab)
                   / ((2 * kk + ab) ** 2 * (2 * kk + ab + 1) * (2 * kk + ab - 1)))
    return diag, np.sqrt(off)


def gauss_jacobi(n_points, alpha, beta):
    """Gauss rule for ``(1-t)^alpha (1+t)^beta`` on ``[-1, 1]`` (Golub-Welsch).

    Weights sum to the total mass ``2^{a+b+1} B(a+1, b+1)``; the rule is exact
    for polynomials of degree ``<= 2 n_points - 1``.
    """
    if int(n_points) != n_points or n_points < 1:
        raise ValueError(f"n_points must be a positive integer, got {n_points!r}")
    if not (alpha > -1 and beta > -1):
        raise ValueError(f"Jacobi exponents must exceed -1, got {alpha!r}, {beta!r}")
    n = int(n_points)
    mass = float(np.exp((alpha + beta + 1) * np.log(2.0) + gammaln(alpha + 1)
                        + gammaln(beta + 1) - gammaln(alpha + beta + 2)))
    diag, off = _jacobi_recurrence(n, alpha, beta)
    if n == 1:
        nodes, vecs = diag.copy(), np.ones((1, 1))
    else:
        try:
            nodes, vecs = eigh_tridiagonal(diag, off)
        except np.linalg.LinAlgError as exc:
            raise QuadratureError(
                f"eigensolver failed for n={n}, alpha={alpha}, beta={beta}: {exc}") from exc
    weights = mass * vecs[0] ** 2
    if not np.all(np.isfinite(nodes)) or not np.all(weights > 0):
        raise QuadratureError(
            f"degenerate Gauss-Jacobi rule for n={n}, alpha={alpha}, beta={beta}; "
            f"min weight {weights.min():.3e}")
    order = np.argsort(nodes)
    return Rule1D(nodes[order], weights[order], 2 * n - 1,
                  {"interval": (-1.0, 1.0), "alpha": alpha, "beta": beta})


def gauss_jacobi_01(n_points, p, q):
    """Gauss rule for ``t^p (1-t)^q`` on ``[0, 1]`` by affine map of a [-1,1] rule."""
    base = gauss_jacobi(n_points, q, p)
    scale = 2.0 ** -(p + q + 1)
    return Rule1D(0.5 * (1.0 + base.nodes), scale * base.weights, base.exactness,
                  {"interval": (0.0, 1.0), "p": p, "q": q})


def ultraspherical_rule(mu, n_points):
    """Normalised rule for ``(1-u^2)^{mu-1}`` on [-1, 1], ``mu >= 0``.

    At ``mu = 0`` the measure degenerates to the endpoint average
    ``(f(1) + f(-1)) / 2``, which is returned exactly.
    """
    if mu < 0:
        raise ValueError(f"mu must be >= 0, got {mu!r}")
    if mu == 0:
        return Rule1D([-1.0, 1.0], [0.5, 0.5], 1 << 30, {"limit": "endpoint-average"})
    return gauss_jacobi(n_points, mu - 1.0, mu - 1.0).normalized()


def sphere_area(d):
    """Surface area ``omega_d = 2 pi^{d/2} / Gamma(d/2)`` of the unit sphere in R^d."""
    return float(2.0 * np.pi ** (d / 2.0) / np.exp(gammaln(d / 2.0)))


def _tensor(*arrays):
    grids = np.meshgrid(*arrays, indexing="ij")
    return [g.ravel() for g in grids]


def rule_u(a, b, level):
    """Product rule on the parabolic domain for ``U_{a,b}``, normalised.

    Uses ``x1 = u sqrt(x2)``: the ``u`` factor carries ``(1-u^2)^{b-1/2}`` and
    the ``x2`` factor carries ``x2^b (1-x2)^a`` on [0, 1].  Exact for total
    degree ``<= 2 level - 1``.
    """
    if not (a > -1 and b > -0.5):
        raise ValueError(f"U weight needs a > -1 and b > -1/2, got a={a!r}, b={b!r}")
    ur = gauss_jacobi(level, b - 0.5, b - 0.5).normalized()
    xr = gauss_jacobi_01(level, b, a).normalized()
    x2, u = _tensor(xr.nodes, ur.nodes)
    w2, wu = _tensor(xr.weights, ur.weights)
    pts = np.column_stack([u * np.sqrt(x2), x2])
    return ProductRule(pts, w2 * wu, 2 * level - 1, "U", (xr, ur), {"a": a, "b": b})


def rule_sphere(d, degree):
    """Normalised rule on ``S^{d-1}`` exact for polynomials of degree ``<= degree``.

    ``d = 2``: equispaced angles.  ``d = 3``: Gauss-Legendre in ``cos(theta)``
    times equispaced ``phi``.
    """
    if d == 2:
        m = degree + 1
        th = 2.0 * np.pi * np.arange(m) / m
        pts = np.column_stack([np.cos(th), np.sin(th)])
        w = np.full(m, 1.0 / m)
        fac = (Rule1D(th, w, degree, {"angle": "theta"}),)
        return ProductRule(pts, w, degree, "SPHERE", fac, {"d": 2})
    if d == 3:
        zr = gauss_jacobi(max(1, math.ceil((degree + 1) / 2)), 0.0, 0.0).normalized()
        m = degree + 1
        ph = 2.0 * np.pi * np.arange(m) / m
        pr = Rule1D(ph, np.full(m, 1.0 / m), degree, {"angle": "phi"})
        z, phi = _tensor(zr.nodes, ph)
        wz, wp = _tensor(zr.weights, pr.weights)
        s = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        pts = np.column_stack([s * np.cos(phi), s * np.sin(phi), z])
        return ProductRule(pts, wz * wp, degree, "SPHERE", (zr, pr), {"d": 3})
    raise ValueError(f"explicit sphere rules exist for d in {{2, 3}}, got d={d!r}")


def rule_ball(d, mu, degree):
    """Normalised rule on ``B^d`` for ``b_mu (1-|x|^2)^{mu-1/2}``.

    Radial factor in ``rho = |x|^2`` with weight ``rho^{(d-2)/2} (1-rho)^{mu-1/2}``.
    """
    if not mu > -0.5:
        raise ValueError(f"ball weight needs mu > -1/2, got {mu!r}")
    sph = rule_sphere(d, degree)
    rr = gauss_jacobi_01(default_points(degree // 2, safety=1), (d - 2) / 2.0, mu - 0.5).normalized()
    i_r, i_s = _tensor(np.arange(len(rr)), np.arange(len(sph)))
    r = np.sqrt(rr.nodes[i_r])
    pts = r[:, None] * sph.points[i_s]
    return ProductRule(pts, rr.weights[i_r] * sph.weights[i_s], degree, "BALL",
                       (rr, sph), {"d": d, "mu": mu})


def rule_v0(d, beta, gamma, degree):
    """Normalised rule on the paraboloid surface for ``t^beta (1-t)^gamma dsigma``."""
    if not (beta > -(d + 1) / 2.0 and gamma > -1):
        raise ValueError(f"surface weight needs beta > -(d+1)/2, gamma > -1; got {beta!r}, {gamma!r}")
    sph = rule_sphere(d, degree)
    tr = gauss_jacobi_01(default_points(degree), beta + (d - 1) / 2.0, gamma).normalized()
    i_t, i_s = _tensor(np.arange(len(tr)), np.arange(len(sph)))
    pts = np.column_stack([sph.points[i_s], tr.nodes[i_t]])
    return ProductRule(pts, tr.weights[i_t] * sph.weights[i_s], degree, "V0", (tr, sph),
                       {"d": d, "beta": beta, "gamma": gamma})


def rule_v(d, beta, gamma, mu, degree):
    """Normalised rule on the solid paraboloid for ``W_{beta,gamma,mu}``.

    Points are ``(sqrt(t) x', t)`` with ``x'`` from :func:`rule_ball`.
    """
    if not (beta > -(d + 1) / 2.0 and gamma > -1 and mu > -0.5):
        raise ValueError(f"solid weight parameters out of range: {beta!r}, {gamma!r}, {mu!r}")
    ball = rule_ball(d, mu, degree)
    tr = gauss_jacobi_01(default_points(degree), beta + mu + (d - 1) / 2.0, gamma).normalized()
    i_t, i_b = _tensor(np.arange(len(tr)), np.arange(len(ball)))
    t = tr.nodes[i_t]
    pts = np.column_stack([np.sqrt(t)[:, None] * ball.points[i_b], t])
    return ProductRule(pts, tr.weights[i_t] * ball.weights[i_b], degree, "V", (tr, ball),
                       {"d": d, "beta": beta, "gamma": gamma, "mu": mu})


def write_rule_csv(rule, path):
    """Dump node coordinates and weights, one node per row."""
    k = rule.points.shape[1]
    with open(path, "w", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow([f"p{i}" for i in range(k)] + ["weight"])
        for p, w in zip(rule.points, rule.weights):
            wr.writerow([repr(float(v)) for v in p] + [repr(float(w))])
