"""Command-line verification suites and Cesaro experiments.

Each command writes a CSV table with the header
``check_id,domain,params,n,delta,measured,tolerance,pass`` (rows sorted by
``check_id``) and exits with status 0 when every row passes, 1 otherwise and
2 on invalid input.

Random point pairs come from a SplitMix64 stream seeded by ``--seed``:
``state += 0x9E3779B97F4A7C15``, then the usual xor-shift-multiply finaliser;
uniforms are ``(x >> 11) * 2**-53``.  ``PARAB_THREADS`` caps the worker pool.
"""
import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import domain_u as U
from . import solid_v as V
from . import surface_v0 as S
from .quadrature import rule_u, rule_v, rule_v0, write_rule_csv
from .specfun import CesaroSpec, cesaro_weights
from .sphere import dim_harmonics

COMMANDS = ("ortho-check", "norm-check", "kernel-check", "closedform-check", "ode-check",
            "cesaro-table", "positivity-scan", "expand")
HEADER = ["check_id", "domain", "params", "n", "delta", "measured", "tolerance", "pass"]
MASK64 = (1 << 64) - 1


class ConfigError(ValueError):
    """Invalid experiment configuration."""


class SplitMix64:
    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, size=None):
        if size is None:
            return (self.next_u64() >> 11) * 2.0 ** -53
        return np.array([(self.next_u64() >> 11) * 2.0 ** -53 for _ in range(int(np.prod(size)))]
                        ).reshape(size)

    def normal(self, size):
        # Box-Muller on 1 - u so the logarithm never sees 0
        n = int(np.prod(size))
        u1 = 1.0 - self.uniform(n)
        u2 = self.uniform(n)
        return (np.sqrt(-2 * np.log(u1)) * np.cos(2 * np.pi * u2)).reshape(size)


# -- configuration ---------------------------------------------------------------

@dataclass
class ExperimentConfig:
    command: str
    domain: str = "U"
    a: float = 0.5
    b: float = 0.5
    d: int = 2
    beta: float = -0.5
    gamma: float = 0.0
    mu: float = 0.5
    N: int = 8
    n: list = field(default_factory=lambda: [4, 8, 16, 32])
    delta: list = field(default_factory=list)
    f: str = "abs-x1"
    pairs: int = 100
    seed: int = 0
    level: int = 0
    out: str = ""
    rule_csv: str = ""

    def weight(self):
        try:
            if self.domain == "U":
                return U.WeightU(self.a, self.b)
            if self.domain == "V0":
                return S.WeightV0(self.d, self.beta, self.gamma)
            if self.domain == "V":
                return V.WeightV(self.d, self.beta, self.gamma, self.mu)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        raise ConfigError(f"domain must be U, V0 or V, got {self.domain!r}")

    def params(self):
        if self.domain == "U":
            return f"a={self.a!r};b={self.b!r}"
        s = f"d={self.d};beta={self.beta!r};gamma={self.gamma!r}"
        return s + (f";mu={self.mu!r}" if self.domain == "V" else "")

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        w = self.weight()
        if self.N < 0 or any(k < 0 for k in self.n):
            raise ConfigError("degrees must be nonnegative")
        if any(not dl > -1 for dl in self.delta):
            raise ConfigError("every delta must exceed -1")
        if self.pairs < 1:
            raise ConfigError("pairs must be positive")
        if self.domain != "U" and self.command in ("ortho-check", "norm-check", "expand") \
                and self.d not in (2, 3):
            raise ConfigError("explicit bases need d in {2, 3}")
        if self.command == "kernel-check" and self.domain != "U":
            if self.domain == "V0" and self.beta < -0.5:
                raise ConfigError("the surface transfer operator needs beta >= -1/2")
            if self.domain == "V" and (self.beta < 0 or self.mu < 0 or self.d not in (2, 3)):
                raise ConfigError("the solid kernel check needs beta >= 0, mu >= 0, d in {2, 3}")
        if self.command == "closedform-check":
            if self.domain == "V0" and self.beta != -0.5:
                raise ConfigError("the surface closed form needs beta = -1/2")
            if self.domain == "V" and (self.beta != 0 or self.mu < 0 or self.d not in (2, 3)):
                raise ConfigError("the solid closed form needs beta = 0, mu >= 0, d in {2, 3}")
        if self.command == "ode-check":
            if self.domain == "U":
                raise ConfigError("no differential equation is checked on U")
            if self.domain == "V0" and self.beta != -0.5:
                raise ConfigError("the surface equation needs beta = -1/2")
            if self.domain == "V" and (self.beta != 0 or self.d not in (2, 3)):
                raise ConfigError("the solid equation needs beta = 0 and d in {2, 3}")
        if self.command in ("positivity-scan", "cesaro-table") and self.domain != "U" \
                and self.d not in (2, 3):
            raise ConfigError("Cesaro experiments need d in {2, 3}")
        get_test_function(self.f, self.domain, w)
        return w


def positivity_delta(cfg):
    if cfg.domain == "U":
        return cfg.a + 2 * cfg.b + 4
    if cfg.domain == "V0":
        return 2 * cfg.beta + cfg.gamma + cfg.d + 3
    return 2 * cfg.beta + 2 * cfg.mu + cfg.gamma + cfg.d + 3


def convergence_delta(cfg):
    """Smallest ``delta`` covered by the convergence theorems, plus one."""
    if cfg.domain == "U":
        return cfg.a + cfg.b + 1.5 + 1
    if cfg.domain == "V0":
        return cfg.beta + cfg.gamma + (cfg.d + 2) / 2 + 1
    return cfg.beta + cfg.mu + cfg.gamma + (cfg.d + 2) / 2 + 1


# -- test functions --------------------------------------------------------------

_CATALOG = {
    "const": "f = 1",
    "x1": "first coordinate",
    "x1^2": "square of the first coordinate",
    "t": "last coordinate (x2 on U, t on the paraboloids)",
    "abs-x1": "|x1|",
    "dist-boundary": "distance-like gap to the boundary: min(x2 - x1^2, 1 - x2) on U, "
                     "1 - t on V0, min(t - |x|^2, 1 - t) on V",
    "bump": "smooth bump exp(1 - 1/(1 - r^2)) around the centre (0, 1/2), r <= 1/2 scaled",
    "basis:U:n:k": "orthogonal basis element P_{k,n} on U",
    "basis:V0:n:m:l": "orthogonal basis element Q^n_{m,l} on the surface",
    "basis:V:n:m:kappa": "orthogonal basis element Q^n_{m,kappa} on the solid",
}


def list_test_functions():
    """Stable ids of the built-in test functions with one-line descriptions."""
    return dict(_CATALOG)


def _bump(r2):
    inside = r2 < 1
    out = np.zeros_like(r2)
    out[inside] = np.exp(1 - 1 / (1 - r2[inside]))
    return out


def get_test_function(fid, domain, w):
    """Callable on Cartesian points ``(..., dim)`` for catalog id ``fid``."""
    if fid.startswith("basis:"):
        parts = fid.split(":")
        try:
            dom, idx = parts[1], tuple(int(v) for v in parts[2:])
        except ValueError:
            raise ConfigError(f"malformed basis id {fid!r}") from None
        if dom != domain:
            raise ConfigError(f"{fid!r} is a basis element of {dom}, not {domain}")
        if domain == "U" and len(idx) == 2:
            n, k = idx
            if not 0 <= k <= n:
                raise ConfigError(f"bad index in {fid!r}")
            return lambda p: U.basis_eval(k, n, w, p)
        if domain == "V0" and len(idx) == 3:
            n, m, l = idx
            if not (0 <= m <= n and 1 <= l <= dim_harmonics(w.d, m)):
                raise ConfigError(f"bad index in {fid!r}")
            return lambda p: S.basis_Q_eval(n, m, l, w, _surface_coords(p))
        if domain == "V" and len(idx) == 3:
            n, m, k = idx
            if not (0 <= m <= n and 1 <= k <= comb(m + w.d - 1, m)):
                raise ConfigError(f"bad index in {fid!r}")
            return lambda p: V.basis_bQ_eval(n, m, k, w, p)
        raise ConfigError(f"malformed basis id {fid!r}")
    if fid == "const":
        return lambda p: np.ones(np.shape(p)[:-1])
    if fid == "x1":
        return lambda p: np.asarray(p)[..., 0]
    if fid == "x1^2":
        return lambda p: np.asarray(p)[..., 0] ** 2
    if fid == "t":
        return lambda p: np.asarray(p)[..., -1]
    if fid == "abs-x1":
        return lambda p: np.abs(np.asarray(p)[..., 0])
    if fid == "dist-boundary":
        if domain == "U":
            return lambda p: np.minimum(p[..., 1] - p[..., 0] ** 2, 1 - p[..., 1])
        if domain == "V0":
            return lambda p: 1 - p[..., -1]
        return lambda p: np.minimum(p[..., -1] - np.sum(p[..., :-1] ** 2, -1), 1 - p[..., -1])
    if fid == "bump":
        def f(p):
            p = np.asarray(p, float)
            r2 = (np.sum(p[..., :-1] ** 2, -1) + (p[..., -1] - 0.5) ** 2) / 0.25
            return _bump(r2)
        return f
    raise ConfigError(f"unknown test function {fid!r}; known ids: {', '.join(_CATALOG)}")


def _surface_coords(p):
    """Cartesian surface point ``(x, t)`` to ``(xi, t)``; the apex gets ``xi = e_1``."""
    p = np.asarray(p, float)
    x, t = p[..., :-1], p[..., -1:]
    r = np.linalg.norm(x, axis=-1, keepdims=True)
    e1 = np.zeros_like(x)
    e1[..., 0] = 1
    xi = np.where(r > 0, x / np.where(r > 0, r, 1), e1)
    return np.concatenate([xi, t], axis=-1)


# -- random points and grids -----------------------------------------------------

def random_points(domain, d, count, rng):
    """``count`` points of the domain in kernel coordinates (surface: ``(xi, t)``)."""
    if domain == "U":
        u = rng.uniform((count, 2))
        x2 = u[:, 1]
        return np.column_stack([(2 * u[:, 0] - 1) * np.sqrt(x2), x2])
    g = rng.normal((count, d))
    g /= np.linalg.norm(g, axis=1)[:, None]
    t = rng.uniform(count)
    if domain == "V0":
        return np.column_stack([g, t])
    r = rng.uniform(count) ** (1.0 / d)
    return np.column_stack([g * (r * np.sqrt(t))[:, None], t])


def eval_grid(domain, d):
    """Fixed evaluation grid (Cartesian coordinates)."""
    if domain == "U":
        x1, x2 = np.meshgrid(np.linspace(-1, 1, 41), np.linspace(0, 1, 21))
        keep = x1 ** 2 <= x2
        return np.column_stack([x1[keep], x2[keep]])
    if domain == "V0":
        return S.to_cartesian(_surface_grid(d, 11, 13))
    return random_points("V", d, 300, SplitMix64(20240601))


def _surface_grid(d, nt, na):
    ts = np.linspace(0, 1, nt)
    th = np.linspace(0, np.pi, na)
    if d == 2:
        xi = np.column_stack([np.cos(th), np.sin(th)])
    elif d == 3:
        xi = np.column_stack([np.cos(th), 0.6 * np.sin(th), 0.8 * np.sin(th)])
    else:
        xi = np.zeros((na, d))
        xi[:, 0], xi[:, 1] = np.cos(th), np.sin(th)
    T, I = np.meshgrid(ts, np.arange(na), indexing="ij")
    return np.column_stack([xi[I.ravel()], T.ravel()])


def _positivity_grid(domain, d):
    """Kernel-coordinate grid for positivity scans."""
    if domain == "U":
        x1, x2 = np.meshgrid(np.linspace(-1, 1, 40), np.linspace(0, 1, 40))
        keep = x1 ** 2 <= x2
        return np.column_stack([x1[keep], x2[keep]])[::7]
    if domain == "V0":
        return _surface_grid(d, 7, 8)
    return random_points("V", d, 48, SplitMix64(7))


# -- commands ----------------------------------------------------------------------

def _row(check_id, cfg, n, delta, measured, tol, ok):
    return {"check_id": check_id, "domain": cfg.domain, "params": cfg.params(), "n": n,
            "delta": delta, "measured": measured, "tolerance": tol, "pass": ok}


def _default_level(cfg, N):
    if cfg.level:
        return cfg.level
    if cfg.domain == "V" and cfg.d == 3:
        return 2 * N + 4
    return 2 * N + 24 if cfg.command in ("cesaro-table", "expand") else 2 * N + 4


def _rule(cfg, w, N):
    lv = _default_level(cfg, N)
    if cfg.domain == "U":
        return rule_u(w.a, w.b, lv)
    if cfg.domain == "V0":
        return rule_v0(w.d, w.beta, w.gamma, lv)
    return rule_v(w.d, w.beta, w.gamma, w.mu, lv)


def _gram(cfg, w, rule, N):
    if cfg.domain == "U":
        B = U.basis_all(N, w, rule.points)
        h = U.basis_norms(N, w)
        deg = [n for n, _ in U.basis_index(N)]
    elif cfg.domain == "V0":
        B = S.basis_Q_all(N, w, rule.points)
        idx = S.basis_index_v0(N, w.d)
        h = np.array([S.basis_Q_norm(n, m, w) for n, m, _ in idx])
        deg = [n for n, _, _ in idx]
    else:
        B = V.basis_bQ_all(N, w, rule.points)
        idx = V.basis_index_v(N, w.d)
        h = np.array([V.basis_bQ_norm(n, m, w) for n, m, _ in idx])
        deg = [n for n, _, _ in idx]
    return (B * rule.weights) @ B.T, h, np.array(deg)


def cmd_ortho(cfg, w):
    rule = _rule(cfg, w, cfg.N)
    G, h, _ = _gram(cfg, w, rule, cfg.N)
    err = float(np.max(np.abs(G - np.diag(h))))
    return [_row(f"ortho:{cfg.domain}:N={cfg.N:03d}", cfg, cfg.N, "", err, 1e-10, err <= 1e-10)]


def cmd_norm(cfg, w):
    rule = _rule(cfg, w, cfg.N)
    G, h, deg = _gram(cfg, w, rule, cfg.N)
    rel = np.abs(np.diag(G) / h - 1)
    return [_row(f"norm:{cfg.domain}:n={n:03d}", cfg, n, "", float(rel[deg == n].max()), 1e-10,
                 bool(rel[deg == n].max() <= 1e-10)) for n in range(cfg.N + 1)]


def _kernel_pairs(cfg):
    rng = SplitMix64(cfg.seed)
    p = random_points(cfg.domain, cfg.d, cfg.pairs, rng)
    q = random_points(cfg.domain, cfg.d, cfg.pairs, rng)
    return p, q


def cmd_kernel(cfg, w):
    p, q = _kernel_pairs(cfg)
    N = cfg.N
    if cfg.domain == "U":
        x2 = p[:, 1]
        onb = np.column_stack([np.sqrt(x2), x2])
        tr = U.kernel_P_boundary_all(N, w, x2, q)
        dr = [U.kernel_P(n, w, onb, q) for n in range(N + 1)]
        tol = 1e-10
    elif cfg.domain == "V0":
        tr = S.kernel_P_v0_all(N, w, p, q)
        dr = [S.kernel_P_v0_direct(n, w, p, q) for n in range(N + 1)]
        tol = 1e-8
    else:
        tr = V.kernel_P_v_all(N, w, p, q)
        dr = [V.kernel_P_v_direct(n, w, p, q) for n in range(N + 1)]
        tol = 1e-7
    rows = []
    for n in range(N + 1):
        err = float(np.max(np.abs(tr[n] - dr[n])))
        rows.append(_row(f"kernel:{cfg.domain}:n={n:03d}", cfg, n, "", err, tol, err <= tol))
    return rows


def cmd_closedform(cfg, w):
    p, q = _kernel_pairs(cfg)
    rows = []
    for n in range(cfg.N + 1):
        if cfg.domain == "U":
            cf = U.kernel_K_at_one(n, w, q)
            ds = U.kernel_K(n, w, np.array([1.0, 1.0]), q)
            tol = 1e-9
        elif cfg.domain == "V0":
            xi = p[0, :-1]
            cf = S.kernel_K_boundary(n, w, xi, q)
            ds = S.kernel_K_v0_direct(n, w, np.append(xi, 1.0), q)
            tol = 1e-8
        else:
            x = p[0, :-1] / np.sqrt(p[0, -1]) if p[0, -1] > 0 else p[0, :-1]
            cf = V.kernel_K_top(n, w, x, q)
            ds = V.kernel_K_v_direct(n, w, np.append(x, 1.0), q)
            tol = 1e-7
        err = float(np.max(np.abs(cf - ds) / np.maximum(1.0, np.abs(ds))))
        rows.append(_row(f"closedform:{cfg.domain}:n={n:03d}", cfg, n, "", err, tol, err <= tol))
    return rows


def cmd_ode(cfg, w):
    rows = []
    if cfg.domain == "V0":
        tgrid = np.linspace(0.05, 0.95, 19)
        for n in range(cfg.N + 1):
            err = max(float(np.max(np.abs(S.ode_residual(n, m, w, tgrid)))) for m in range(n + 1))
            rows.append(_row(f"ode:V0:n={n:03d}", cfg, n, "", err, 1e-9, err <= 1e-9))
        return rows
    pts = [p for p in random_points("V", w.d, 40, SplitMix64(cfg.seed))
           if 0.05 < p[-1] < 0.95 and p[:-1] @ p[:-1] < p[-1] - 0.01][:6]
    for n in range(cfg.N + 1):
        res, eig = 0.0, 0.0
        for m in range(n + 1):
            for k in range(1, comb(m + w.d - 1, m) + 1):
                for p in pts:
                    r, ratio = V.ode_residual_solid(n, m, k, w, p, return_ratio=True)
                    res = max(res, abs(r))
                    if abs(V.basis_bQ_eval(n, m, k, w, p)) > 0.1:
                        eig = max(eig, abs(ratio - V.eigenvalue_solid(n, m, w)))
        rows.append(_row(f"ode:V:residual:n={n:03d}", cfg, n, "", res, 1e-5, res <= 1e-5))
        rows.append(_row(f"ode:V:eigenvalue:n={n:03d}", cfg, n, "", eig, 1e-4, eig <= 1e-4))
    return rows


def _expansion(cfg, w, f, N):
    rule = _rule(cfg, w, N)
    if cfg.rule_csv:
        write_rule_csv(rule, cfg.rule_csv)
    if cfg.domain == "U":
        return U.expand(f, N, w, rule)
    if cfg.domain == "V0":
        return S.expand_v0(f, N, w, rule)
    return V.expand_v(f, N, w, rule)


def _kernel_coords(cfg, pts):
    return _surface_coords(pts) if cfg.domain == "V0" else pts


def cmd_cesaro(cfg, w):
    f = get_test_function(cfg.f, cfg.domain, w)
    deltas = cfg.delta or [convergence_delta(cfg)]
    ns = sorted(cfg.n)
    E = _expansion(cfg, w, f, max(ns))
    grid = eval_grid(cfg.domain, cfg.d)
    target = f(grid)
    proj = E.projections(_kernel_coords(cfg, grid))
    rows = []
    for dl in deltas:
        errs = []
        for n in ns:
            lam = cesaro_weights(CesaroSpec(n, dl), "proj")
            approx = np.tensordot(lam, proj[: n + 1], axes=(0, 0))
            errs.append(float(np.max(np.abs(approx - target))))
            rows.append(_row(f"cesaro:{cfg.domain}:delta={dl!r}:n={n:03d}", cfg, n, dl, errs[-1], "", True))
        rise = max([b - a for a, b in zip(errs, errs[1:])], default=0.0)
        rows.append(_row(f"cesaro:{cfg.domain}:delta={dl!r}:trend", cfg, ns[-1], dl, rise, 0.0, rise <= 0.0))
    return rows


def cmd_positivity(cfg, w):
    deltas = cfg.delta or [positivity_delta(cfg)]
    P = _positivity_grid(cfg.domain, cfg.d)
    A, B = np.broadcast_arrays(P[:, None, :], P[None, :, :])
    rows = []
    for dl in deltas:
        for n in range(cfg.N + 1):
            spec = CesaroSpec(n, dl)
            if cfg.domain == "U":
                k = U.cesaro_kernel(spec, w, A, B)
            elif cfg.domain == "V0":
                k = S.cesaro_kernel_v0(spec, w, A, B)
            else:
                k = V.cesaro_kernel_v(spec, w, A, B)
            mn = float(np.min(k))
            rows.append(_row(f"positivity:{cfg.domain}:delta={dl!r}:n={n:03d}", cfg, n, dl, mn, -1e-9,
                             mn >= -1e-9))
    return rows


def cmd_expand(cfg, w):
    f = get_test_function(cfg.f, cfg.domain, w)
    E = _expansion(cfg, w, f, cfg.N)
    rows = []
    for key, c in E.coeff.items():
        label = ",".join(str(v) for v in key)
        rows.append(_row(f"coeff:{cfg.domain}:({label})", cfg, key[0], "", float(c), "", True))
    return rows


_RUNNERS = {"ortho-check": cmd_ortho, "norm-check": cmd_norm, "kernel-check": cmd_kernel,
            "closedform-check": cmd_closedform, "ode-check": cmd_ode, "cesaro-table": cmd_cesaro,
            "positivity-scan": cmd_positivity, "expand": cmd_expand}


def run(cfg):
    """Validate ``cfg``, execute its command and return rows sorted by ``check_id``."""
    w = cfg.validate()
    rows = _RUNNERS[cfg.command](cfg, w)
    return sorted(rows, key=lambda r: r["check_id"])


def _fmt(v):
    if isinstance(v, bool) or isinstance(v, np.bool_):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def to_csv(rows):
    buf = io.StringIO()
    wr = csv.writer(buf)
    wr.writerow(HEADER)
    for r in rows:
        wr.writerow([_fmt(r[k]) for k in HEADER])
    return buf.getvalue()


def worker_count():
    try:
        return max(1, int(os.environ.get("PARAB_THREADS", "1")))
    except ValueError:
        return 1


def run_many(configs):
    """Run several configurations with at most ``PARAB_THREADS`` workers; results keep input order."""
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        return list(pool.map(run, configs))


# -- command line ------------------------------------------------------------------

def _int_list(s):
    return [int(v) for v in str(s).split(",") if v.strip()]


def _float_list(s):
    return [float(v) for v in str(s).split(",") if v.strip()]


_FIELD_TYPES = {"domain": str, "a": float, "b": float, "d": int, "beta": float, "gamma": float,
                "mu": float, "N": int, "n": _int_list, "delta": _float_list, "f": str, "pairs": int,
                "seed": int, "level": int, "out": str, "rule_csv": str}


def read_config_file(path):
    """``key=value`` lines; ``#`` starts a comment.  Keys match the long flags."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value")
            key, val = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in _FIELD_TYPES:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                out[key] = _FIELD_TYPES[key](val)
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {val!r}") from None
    return out


def build_parser():
    ap = argparse.ArgumentParser(prog="parab", description=__doc__.split("\n\n")[0])
    ap.add_argument("command", nargs="?", choices=COMMANDS)
    ap.add_argument("--config", help="key=value file; explicit flags take precedence")
    ap.add_argument("--list-functions", action="store_true", help="print the test-function catalog")
    for name, typ in _FIELD_TYPES.items():
        flag = "--" + name.replace("_", "-")
        ap.add_argument(flag, dest=name, type=typ, default=None)
    return ap


def config_from_args(argv):
    ap = build_parser()
    ns = ap.parse_args(argv)
    if ns.command is None and not ns.list_functions:
        ap.error("a command is required")
    values = {}
    if ns.config:
        values.update(read_config_file(ns.config))
    for key in _FIELD_TYPES:
        v = getattr(ns, key)
        if v is not None:
            values[key] = v
    command = ns.command or "expand"
    if command != "cesaro-table" and "n" in values and "N" not in values and values["n"]:
        # single-degree commands accept --n as the maximal degree
        values["N"] = max(values["n"])
    return ExperimentConfig(command=command, **values), ns.list_functions


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg, listing = config_from_args(argv)
        if listing:
            for k, v in list_test_functions().items():
                print(f"{k}\t{v}")
            return 0
        rows = run(cfg)
    except ConfigError as exc:
        print(f"parab: error: {exc}", file=sys.stderr)
        return 2
    text = to_csv(rows)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in rows if not r["pass"]]
    for r in rows:
        status = "PASS" if r["pass"] else "FAIL"
        print(f"{status} {r['check_id']} measured={_fmt(r['measured'])} tol={_fmt(r['tolerance'])}",
              file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
