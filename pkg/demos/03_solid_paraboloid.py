# Orthogonal polynomials inside the paraboloid ||x||^2 <= t <= 1.
import numpy as np

from paraboloid import solid_v as V
from paraboloid.harness import SplitMix64, random_points
from paraboloid.quadrature import rule_v

d = 2
w = V.WeightV(d, beta=0.0, gamma=1.0, mu=0.5)

# %% Basis: a Jacobi polynomial in t times a ball polynomial scaled to the slice.
rule = rule_v(d, w.beta, w.gamma, w.mu, 10)
B = V.basis_bQ_all(4, w, rule.points)
h = [V.basis_bQ_norm(n, m, w) for n, m, _ in V.basis_index_v(4, d)]
print(f"{len(B)} polynomials, max |Gram - diag(h)| = {np.max(np.abs((B * rule.weights) @ B.T - np.diag(h))):.1e}")

# %% Kernels: transfer from the parabolic domain, including the mu = 0 case
# where the inner integral collapses to two endpoint values.
rng = SplitMix64(5)
p, q = random_points("V", d, 8, rng), random_points("V", d, 8, rng)
for mu in (0.0, 0.5, 2.0):
    wm = V.WeightV(d, 0.0, 1.0, mu)
    err = np.max(np.abs(V.kernel_P_v(4, wm, p, q) - V.kernel_P_v_direct(4, wm, p, q)))
    print(f"mu={mu}: transfer vs basis sum, degree 4, max diff {err:.2e}")

# %% At the top disc t = 1 the partial-sum kernel reduces to a double integral.
x = np.array([0.3, -0.4])
for n in (2, 6, 10):
    print(f"K_{n}((x,1), q0): closed {V.kernel_K_top(n, w, x, q[0]):+.9f}"
          f"  direct {V.kernel_K_v_direct(n, w, np.append(x, 1.0), q[0]):+.9f}")

# %% Each basis element is an eigenfunction of a second-order operator.
pt = np.array([0.2, 0.1, 0.5])
for n, m, k in [(2, 1, 1), (4, 2, 3), (4, 4, 5)]:
    res, ratio = V.ode_residual_solid(n, m, k, w, pt, return_ratio=True)
    print(f"(n,m,kappa)=({n},{m},{k}): residual {res:.1e}, L u / u = {ratio:.5f},"
          f" expected {V.eigenvalue_solid(n, m, w):.5f}")
