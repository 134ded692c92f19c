"""Jacobi and Gegenbauer polynomials, norm constants and Cesaro weights.

Conventions
-----------
``P_n^{(a,b)}`` is orthogonal for ``w_{a,b}(t) = (1-t)^a (1+t)^b`` on
``[-1, 1]`` and normalised by ``P_n^{(a,b)}(1) = (a+1)_n / n!``.  With the
probability normalisation ``c'_{a,b} = 2^{-a-b-1} c_{a,b}`` the squared norm
is ``h_n^{(a,b)}``, so ``h_0 = 1``.

All evaluators accept numpy arrays for ``t`` and broadcast; the ``*_all``
variants return every degree ``0..n_max`` stacked along a new leading axis.
"""
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = [
    "JacobiParams",
    "CesaroSpec",
    "jacobi_eval",
    "jacobi_all",
    "jacobi_homogeneous_all",
    "jacobi_deriv",
    "jacobi_deriv2",
    "jacobi_at_one",
    "jacobi_norm",
    "jacobi_norms",
    "beta_const",
    "beta_const_prime",
    "c_lambda",
    "gegenbauer_Z",
    "gegenbauer_Z_all",
    "gegenbauer_Z_homogeneous_all",
    "cesaro_weights",
    "pochhammer",
]


@dataclass(frozen=True)
class JacobiParams:
    """Validated pair of Jacobi exponents ``(alpha, beta)``, both ``> -1``."""

    alpha: float
    beta: float

    def __post_init__(self):
        _check_jacobi(self.alpha, self.beta)

    def eval(self, n, t):
        return jacobi_eval(n, self.alpha, self.beta, t)

    def deriv(self, n, t):
        return jacobi_deriv(n, self.alpha, self.beta, t)

    def norm(self, n):
        return jacobi_norm(n, self.alpha, self.beta)

    @property
    def c_ab(self):
        return beta_const(self.alpha, self.beta)


@dataclass(frozen=True)
class CesaroSpec:
    """Order ``n`` and summability index ``delta > -1`` of a (C, delta) mean."""

    n: int
    delta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"Cesaro order must be a nonnegative integer, got {self.n!r}")
        if not self.delta > -1:
            raise ValueError(f"Cesaro index must satisfy delta > -1, got {self.delta!r}")


def _check_jacobi(alpha, beta):
    if not (alpha > -1 and beta > -1):
        raise ValueError(f"Jacobi parameters must exceed -1, got alpha={alpha!r}, beta={beta!r}")


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    return int(n)


def pochhammer(x, n):
    """Rising factorial ``(x)_n`` by direct product (exact for small ``n``)."""
    out = 1.0
    for j in range(int(n)):
        out *= x + j
    return out


def jacobi_homogeneous_all(n_max, alpha, beta, p, q):
    r"""Homogenised Jacobi polynomials ``H_n(p, q) = q^n P_n^{(a,b)}(p/q)``.

    Runs the three-term recurrence with ``t`` replaced by ``p/q`` and each
    degree multiplied through by ``q``, so ``q = 0`` is a regular point.  In
    the symmetric case ``alpha == beta`` only even powers of ``q`` occur.

    Returns an array of shape ``(n_max + 1,) + broadcast(p, q).shape``.
    """
    _check_jacobi(alpha, beta)
    n_max = _check_degree(n_max)
    p, q = np.broadcast_arrays(np.asarray(p, dtype=float), np.asarray(q, dtype=float))
    q2 = q * q
    out = np.empty((n_max + 1,) + p.shape)
    out[0] = 1.0
    if n_max == 0:
        return out
    ab = alpha + beta
    out[1] = 0.5 * (alpha - beta) * q + 0.5 * (ab + 2.0) * p
    diff2 = alpha * alpha - beta * beta
    for n in range(2, n_max + 1):
        c = 2.0 * n + ab
        a1 = 2.0 * n * (n + ab) * (c - 2.0)
        a2 = (c - 1.0) * c * (c - 2.0)
        a3 = (c - 1.0) * diff2
        a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c
        out[n] = ((a2 * p + a3 * q) * out[n - 1] - a4 * q2 * out[n - 2]) / a1
    return out


def jacobi_all(n_max, alpha, beta, t):
    """``P_k^{(alpha,beta)}(t)`` for ``k = 0..n_max``, stacked on axis 0."""
    t = np.asarray(t, dtype=float)
    return jacobi_homogeneous_all(n_max, alpha, beta, t, np.ones_like(t))


def jacobi_eval(n, alpha, beta, t):
    """Jacobi polynomial ``P_n^{(alpha,beta)}(t)`` by three-term recurrence.

    ``t`` is not restricted to ``[-1, 1]``; the polynomial is evaluated as is.
    """
    n = _check_degree(n)
    out = jacobi_all(n, alpha, beta, t)[n]
    return out if out.ndim else float(out)


def jacobi_deriv(n, alpha, beta, t):
    """First derivative ``d/dt P_n^{(alpha,beta)}(t)``."""
    n = _check_degree(n)
    _check_jacobi(alpha, beta)
    if n == 0:
        out = np.zeros_like(np.asarray(t, dtype=float))
        return out if out.ndim else 0.0
    return 0.5 * (n + alpha + beta + 1) * jacobi_eval(n - 1, alpha + 1, beta + 1, t)


def jacobi_deriv2(n, alpha, beta, t):
    """Second derivative of ``P_n^{(alpha,beta)}``."""
    n = _check_degree(n)
    _check_jacobi(alpha, beta)
    if n < 2:
        out = np.zeros_like(np.asarray(t, dtype=float))
        return out if out.ndim else 0.0
    return 0.5 * (n + alpha + beta + 1) * jacobi_deriv(n - 1, alpha + 1, beta + 1, t)


def jacobi_at_one(n, alpha):
    """``P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!`` (independent of beta)."""
    n = _check_degree(n)
    out = 1.0
    for j in range(n):
        out *= (alpha + 1 + j) / (j + 1)
    return out


def jacobi_norms(n_max, alpha, beta):
    """Vector of ``h_k^{(alpha,beta)}`` for ``k = 0..n_max``."""
    _check_jacobi(alpha, beta)
    n_max = _check_degree(n_max)
    ab = alpha + beta
    out = np.empty(n_max + 1)
    out[0] = 1.0
    prod = 1.0
    for n in range(1, n_max + 1):
        j = n - 1
        prod *= (alpha + 1 + j) * (beta + 1 + j) / ((j + 1) * (ab + 2 + j))
        out[n] = prod * (ab + n + 1) / (ab + 2 * n + 1)
    return out


def jacobi_norm(n, alpha, beta):
    r"""Squared norm ``h_n^{(alpha,beta)}`` under ``c'_{a,b} w_{a,b}``.

    .. math::
        h_n = \frac{(a+1)_n (b+1)_n (a+b+n+1)}{n! (a+b+2)_n (a+b+2n+1)}

    The ``n = 0`` value is 1 even when ``a + b + 1 = 0``.
    """
    n = _check_degree(n)
    return float(jacobi_norms(n, alpha, beta)[n])


def beta_const(a, b):
    """``c_{a,b} = Gamma(a+b+2) / (Gamma(a+1) Gamma(b+1))``.

    This is the reciprocal of ``int_0^1 t^a (1-t)^b dt``.
    """
    _check_jacobi(a, b)
    return float(np.exp(gammaln(a + b + 2) - gammaln(a + 1) - gammaln(b + 1)))


def beta_const_prime(a, b):
    """``c'_{a,b} = 2^{-a-b-1} c_{a,b}``, reciprocal mass of ``w_{a,b}`` on [-1,1]."""
    return 2.0 ** (-a - b - 1) * beta_const(a, b)


def c_lambda(lam):
    """``c_lambda``: reciprocal of ``int_{-1}^1 (1-t^2)^{lambda-1/2} dt``.

    Defined for ``lambda > -1/2``.
    """
    if not lam > -0.5:
        raise ValueError(f"c_lambda needs lambda > -1/2, got {lam!r}")
    return float(np.exp(gammaln(lam + 1) - 0.5 * np.log(np.pi) - gammaln(lam + 0.5)))


def gegenbauer_Z_homogeneous_all(n_max, lam, p, q2):
    r"""Homogenised zonal polynomials ``q^n Z_n^lambda(p/q)`` with ``q2 = q^2``.

    ``Z_n^lambda = (n+lambda)/lambda C_n^lambda``; for ``lambda = 0`` the limit
    ``Z_0^0 = 1``, ``Z_n^0 = 2 T_n`` is used.  Only ``q^2`` enters, so the
    result is a polynomial in ``(p, q^2)``.
    """
    n_max = _check_degree(n_max)
    if lam < 0:
        raise ValueError(f"zonal index must be >= 0, got {lam!r}")
    p, q2 = np.broadcast_arrays(np.asarray(p, dtype=float), np.asarray(q2, dtype=float))
    c = np.empty((n_max + 1,) + p.shape)
    c[0] = 1.0
    if lam == 0:
        # Chebyshev T_n, then double every n >= 1
        if n_max >= 1:
            c[1] = p
        for n in range(2, n_max + 1):
            c[n] = 2.0 * p * c[n - 1] - q2 * c[n - 2]
        c[1:] *= 2.0
        return c
    if n_max >= 1:
        c[1] = 2.0 * lam * p
    for n in range(2, n_max + 1):
        c[n] = (2.0 * (n + lam - 1) * p * c[n - 1] - (n + 2 * lam - 2) * q2 * c[n - 2]) / n
    scale = (np.arange(n_max + 1) + lam) / lam
    return c * scale.reshape((-1,) + (1,) * p.ndim)


def gegenbauer_Z_all(n_max, lam, t):
    """``Z_k^lambda(t)`` for ``k = 0..n_max``."""
    t = np.asarray(t, dtype=float)
    return gegenbauer_Z_homogeneous_all(n_max, lam, t, np.ones_like(t))


def gegenbauer_Z(n, lam, t):
    """Zonal polynomial ``Z_n^lambda(t) = (n+lambda)/lambda C_n^lambda(t)``.

    ``lambda = 0`` is the Chebyshev limit ``2 T_n`` (and 1 for ``n = 0``).
    """
    n = _check_degree(n)
    out = gegenbauer_Z_all(n, lam, t)[n]
    return out if out.ndim else float(out)


def _log_binom_ratio(x, k):
    """log|binom(x + k, k)| and its sign, via a product of ratios."""
    terms = (x + np.arange(1, k + 1)) / np.arange(1, k + 1)
    if np.any(terms == 0):
        return -np.inf, 0.0
    return float(np.sum(np.log(np.abs(terms)))), float(np.prod(np.sign(terms)))


def cesaro_weights(spec, form="K"):
    r"""Coefficients of the (C, delta) mean of order ``spec.n``.

    ``form="K"`` returns ``binom(n-m+delta-1, n-m) / binom(n+delta, n)`` for
    ``m = 0..n``: the weights applied to the partial-sum kernels ``K_m``.
    ``form="proj"`` returns ``binom(n-k+delta, n-k) / binom(n+delta, n)``:
    the weights applied to the projections ``proj_k``.

    Generalised binomials are formed in log space with explicit signs, so
    ``n`` of several hundred does not overflow.
    """
    n, delta = spec.n, spec.delta
    if form not in ("K", "proj"):
        raise ValueError(f"form must be 'K' or 'proj', got {form!r}")
    log_den, _ = _log_binom_ratio(delta, n)
    shift = delta - 1.0 if form == "K" else delta
    out = np.empty(n + 1)
    for m in range(n + 1):
        j = n - m
        if j == 0:
            lg, sg = 0.0, 1.0
        else:
            lg, sg = _log_binom_ratio(shift, j)
        out[m] = 0.0 if sg == 0 else sg * np.exp(lg - log_den)
    return out
