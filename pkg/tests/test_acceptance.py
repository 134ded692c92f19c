"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

The lines are printed as the tests run (visible with ``-s``) and repeated in
the terminal summary.
"""
import subprocess
import sys
import time
from math import comb

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from paraboloid import domain_u as U
from paraboloid import harness as H
from paraboloid import solid_v as V
from paraboloid import surface_v0 as S
from paraboloid.quadrature import rule_u, rule_v, rule_v0
from paraboloid.specfun import CesaroSpec
from paraboloid.sphere import zonal_interval_average, zonal_sphere_average


def report(num, title, ok, detail, elapsed, limit):
    ok = bool(ok) and elapsed <= limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {title} | {detail} | {elapsed:.1f}s (limit {limit}s)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def surface_pairs(rng, d, count):
    return H.random_points("V0", d, count, rng), H.random_points("V0", d, count, rng)


def solid_pairs(rng, d, count):
    return H.random_points("V", d, count, rng), H.random_points("V", d, count, rng)


def test_criterion_01_orthogonality():
    t0 = time.perf_counter()
    worst = 0.0
    for w in [U.WeightU(0.5, 0.5), U.WeightU(0.0, 1.5), U.WeightU(2.0, 0.75)]:
        r = rule_u(w.a, w.b, 10)
        B = U.basis_all(8, w, r.points)
        worst = max(worst, np.max(np.abs((B * r.weights) @ B.T - np.diag(U.basis_norms(8, w)))))
    for d in (2, 3):
        for beta, gamma in [(-0.5, 0.0), (0.0, 1.5), (1.0, 0.5)]:
            w = S.WeightV0(d, beta, gamma)
            r = rule_v0(d, beta, gamma, 12)
            B = S.basis_Q_all(5, w, r.points)
            h = [S.basis_Q_norm(n, m, w) for n, m, _ in S.basis_index_v0(5, d)]
            worst = max(worst, np.max(np.abs((B * r.weights) @ B.T - np.diag(h))))
        for beta, gamma, mu in [(0.0, 0.0, 0.5), (1.0, 1.5, 0.0), (0.5, 0.5, 1.5)]:
            w = V.WeightV(d, beta, gamma, mu)
            r = rule_v(d, beta, gamma, mu, 10)
            B = V.basis_bQ_all(4, w, r.points)
            h = [V.basis_bQ_norm(n, m, w) for n, m, _ in V.basis_index_v(4, d)]
            worst = max(worst, np.max(np.abs((B * r.weights) @ B.T - np.diag(h))))
    report(1, "Gram matrices equal the norm diagonals", worst <= 1e-10, f"max abs err {worst:.2e}",
           time.perf_counter() - t0, 60)


def test_criterion_02_closed_form_on_u():
    t0 = time.perf_counter()
    rng = H.SplitMix64(2)
    x = H.random_points("U", 2, 50, rng)
    worst = 0.0
    for a, b in [(0.5, 0.5), (1.0, 0.5), (0.0, 1.5), (2.5, 0.75)]:
        w = U.WeightU(a, b)
        for n in range(21):
            cf = U.kernel_K_at_one(n, w, x)
            ds = U.kernel_K(n, w, np.array([1.0, 1.0]), x)
            worst = max(worst, float(np.max(np.abs(cf - ds) / np.maximum(1.0, np.abs(ds)))))
    report(2, "closed form of K_n(1, x) on U", worst <= 1e-9, f"max rel err {worst:.2e}",
           time.perf_counter() - t0, 10)


def test_criterion_03_surface_kernel():
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3):
        p, q = surface_pairs(H.SplitMix64(30 + d), d, 200)
        for beta in (-0.5, 0.0, 1.0):
            for gamma in (0.0, 1.5):
                w = S.WeightV0(d, beta, gamma)
                tr = S.kernel_P_v0_all(6, w, p, q)
                for n in range(7):
                    worst = max(worst, float(np.max(np.abs(tr[n] - S.kernel_P_v0_direct(n, w, p, q)))))
    report(3, "surface kernel: transfer route vs direct sum", worst <= 1e-8, f"max abs err {worst:.2e}",
           time.perf_counter() - t0, 120)


def test_criterion_04_solid_kernel():
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3):
        p, q = solid_pairs(H.SplitMix64(40 + d), d, 100)
        for beta, gamma, mu in [(0.0, 1.0, 0.5), (0.0, 0.0, 0.0), (1.0, 0.5, 0.0), (0.5, 1.5, 1.0)]:
            w = V.WeightV(d, beta, gamma, mu)
            tr = V.kernel_P_v_all(5, w, p, q)
            for n in range(6):
                worst = max(worst, float(np.max(np.abs(tr[n] - V.kernel_P_v_direct(n, w, p, q)))))
    report(4, "solid kernel (mu = 0 included): transfer vs direct sum", worst <= 1e-7,
           f"max abs err {worst:.2e}", time.perf_counter() - t0, 120)


def test_criterion_05_boundary_closed_forms():
    t0 = time.perf_counter()
    ws, wv = 0.0, 0.0
    for d in (2, 3):
        rng = H.SplitMix64(50 + d)
        q = H.random_points("V0", d, 50, rng)
        xi = H.random_points("V0", d, 1, rng)[0, :d]
        for gamma in (0.0, 1.5):
            w = S.WeightV0(d, -0.5, gamma)
            for n in range(16):
                cf = S.kernel_K_boundary(n, w, xi, q)
                ds = S.kernel_K_v0_direct(n, w, np.append(xi, 1.0), q)
                ws = max(ws, float(np.max(np.abs(cf - ds) / np.maximum(1.0, np.abs(ds)))))
        q = H.random_points("V", d, 50, rng)
        x = H.random_points("V", d, 1, rng)[0]
        x = x[:d] / np.sqrt(x[d])
        for gamma, mu in [(1.0, 0.5), (0.0, 0.0)]:
            w = V.WeightV(d, 0.0, gamma, mu)
            for n in range(11):
                cf = V.kernel_K_top(n, w, x, q)
                ds = V.kernel_K_v_direct(n, w, np.append(x, 1.0), q)
                wv = max(wv, float(np.max(np.abs(cf - ds) / np.maximum(1.0, np.abs(ds)))))
    report(5, "boundary closed forms on the surface and the solid", ws <= 1e-8 and wv <= 1e-7,
           f"surface {ws:.2e}, solid {wv:.2e}", time.perf_counter() - t0, 30)


def test_criterion_06_differential_equations():
    t0 = time.perf_counter()
    tgrid = np.linspace(0.05, 0.95, 19)
    surf = 0.0
    for d in (2, 3):
        for gamma in (0.0, 0.5, 2.0):
            w = S.WeightV0(d, -0.5, gamma)
            for n in range(9):
                for m in range(n + 1):
                    surf = max(surf, float(np.max(np.abs(S.ode_residual(n, m, w, tgrid)))))
    res, eig = 0.0, 0.0
    pts = [np.array([0.2, 0.1, 0.5]), np.array([-0.3, 0.25, 0.6]), np.array([0.05, -0.4, 0.35])]
    for gamma, mu in [(1.0, 0.5), (0.0, 1.5)]:
        w = V.WeightV(2, 0.0, gamma, mu)
        for n in range(5):
            for m in range(n + 1):
                for k in range(1, comb(m + 1, m) + 1):
                    for p in pts:
                        r, ratio = V.ode_residual_solid(n, m, k, w, p, return_ratio=True)
                        res = max(res, abs(r))
                        if abs(V.basis_bQ_eval(n, m, k, w, p)) > 0.1:
                            eig = max(eig, abs(ratio - V.eigenvalue_solid(n, m, w)))
    ok = surf <= 1e-9 and res <= 1e-5 and eig <= 1e-4
    report(6, "differential equations", ok,
           f"surface ODE {surf:.2e}, solid FD residual {res:.2e}, eigenvalue {eig:.2e}",
           time.perf_counter() - t0, 60)


def _u_grid():
    x1, x2 = np.meshgrid(np.linspace(-1, 1, 30), np.linspace(0, 1, 30))
    keep = x1 ** 2 <= x2
    return np.column_stack([x1[keep], x2[keep]])


def test_criterion_07_positivity():
    t0 = time.perf_counter()
    worst = np.inf
    # U: kernel with one point at 1 (closed form) on a 30 x 30 grid, and full pairs on a subgrid
    g = _u_grid()
    sub = g[::9]
    A, B = np.broadcast_arrays(sub[:, None, :], sub[None, :, :])
    for a, b in [(0.5, 0.5), (0.0, 1.0), (1.5, 0.0)]:
        w = U.WeightU(a, b)
        delta = a + 2 * b + 4
        for n in range(13):
            spec = CesaroSpec(n, delta)
            worst = min(worst, float(np.min(U.cesaro_kernel_at_one(spec, w, g))))
            worst = min(worst, float(np.min(U.cesaro_kernel(spec, w, A, B))))
        # means of a nonnegative function
        f = lambda p: np.minimum(p[..., 1] - p[..., 0] ** 2, 1 - p[..., 1])
        e = U.expand(f, 12, w, rule_u(a, b, 20))
        for n in (4, 8, 12):
            worst = min(worst, float(np.min(e.cesaro_mean(CesaroSpec(n, delta), g))))
    # V0 with gamma >= beta + (d-1)/2
    for d, beta, gamma in [(2, -0.5, 0.0), (2, 0.0, 1.0), (3, -0.5, 1.5)]:
        cfg = H.ExperimentConfig("positivity-scan", domain="V0", d=d, beta=beta, gamma=gamma, N=12)
        P = H._positivity_grid("V0", d)
        A, B = np.broadcast_arrays(P[:, None, :], P[None, :, :])
        w = cfg.weight()
        for n in range(13):
            worst = min(worst, float(np.min(S.cesaro_kernel_v0(CesaroSpec(n, H.positivity_delta(cfg)), w, A, B))))
    for d, beta, gamma, mu in [(2, 0.0, 1.0, 0.5), (2, 0.0, 0.0, 0.0)]:
        cfg = H.ExperimentConfig("positivity-scan", domain="V", d=d, beta=beta, gamma=gamma, mu=mu, N=12)
        P = H._positivity_grid("V", d)
        A, B = np.broadcast_arrays(P[:, None, :], P[None, :, :])
        w = cfg.weight()
        for n in range(13):
            worst = min(worst, float(np.min(V.cesaro_kernel_v(CesaroSpec(n, H.positivity_delta(cfg)), w, A, B))))
    report(7, "Cesaro kernels and means nonnegative at the positivity thresholds", worst >= -1e-9,
           f"min value {worst:.3e}", time.perf_counter() - t0, 120)


def test_criterion_08_convergence_trend():
    t0 = time.perf_counter()
    configs = [
        H.ExperimentConfig("cesaro-table", domain="U", a=0.5, b=0.5, f="abs-x1"),
        H.ExperimentConfig("cesaro-table", domain="U", a=0.0, b=1.0, f="abs-x1"),
        H.ExperimentConfig("cesaro-table", domain="V0", d=2, beta=-0.5, gamma=0.0, f="abs-x1"),
        H.ExperimentConfig("cesaro-table", domain="V0", d=3, beta=0.0, gamma=0.5, f="abs-x1"),
        H.ExperimentConfig("cesaro-table", domain="V", d=2, beta=0.0, gamma=0.0, mu=0.5, f="abs-x1"),
        H.ExperimentConfig("cesaro-table", domain="V", d=3, beta=0.0, gamma=0.0, mu=0.5, f="abs-x1"),
    ]
    details, ok = [], True
    for cfg in configs:
        rows = H.run(cfg)
        errs = [r["measured"] for r in rows if not r["check_id"].endswith("trend")]
        trend = [r for r in rows if r["check_id"].endswith("trend")][0]
        ok &= trend["pass"]
        details.append(f"{cfg.domain}:{errs[0]:.3f}->{errs[-1]:.3f}")
    report(8, "Cesaro sup-grid error non-increasing over n = 4, 8, 16, 32", ok, ", ".join(details),
           time.perf_counter() - t0, 300)


def test_criterion_09_integral_identities():
    t0 = time.perf_counter()
    worst = 0.0
    polys = [lambda u: u ** 4, lambda u: 3 * u ** 7 - u ** 2 + 0.5, lambda u: (1 + u) ** 6]
    for d in (2, 3):
        eta = np.zeros(d)
        eta[-1] = 1.0
        eta = (eta + 0.3) / np.linalg.norm(eta + 0.3)
        for h in polys:
            worst = max(worst, abs(zonal_sphere_average(h, d, eta, 8) - zonal_interval_average(h, d, 8)))
        for mu in (0.0, 0.5, 1.5):
            v = np.full(d, 0.35)
            for h in polys:
                worst = max(worst, abs(V.ball_zonal_average(h, d, mu, v, 8) - V.ball_interval_average(h, d, mu, 8)))
    report(9, "sphere and ball integral identities", worst <= 1e-10, f"max abs err {worst:.2e}",
           time.perf_counter() - t0, 60)


def test_criterion_10_determinism(tmp_path):
    t0 = time.perf_counter()
    args = [["kernel-check", "--domain", "V0", "--d", "3", "--beta", "0", "--gamma", "1.5", "--N", "4",
             "--pairs", "40", "--seed", "17"],
            ["closedform-check", "--domain", "U", "--a", "0", "--b", "1.5", "--N", "10", "--seed", "3"],
            ["cesaro-table", "--domain", "U", "--n", "4,8", "--delta", "3"]]
    ok = True
    for i, a in enumerate(args):
        outs = []
        for j, threads in enumerate(("1", "2")):
            path = tmp_path / f"run{i}_{j}.csv"
            subprocess.run([sys.executable, "-m", "paraboloid", *a, "--out", str(path)], check=False,
                           capture_output=True, env={"PARAB_THREADS": threads, "PATH": "/usr/bin:/bin"},
                           timeout=300)
            outs.append(path.read_bytes())
        ok &= outs[0] == outs[1] and len(outs[0]) > 0
    report(10, "repeated harness runs give byte-identical CSV", ok, f"{len(args)} commands x 2 runs",
           time.perf_counter() - t0, 300)
