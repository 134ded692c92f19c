# Kernels on the surface ||x|| = sqrt(t), 0 <= t <= 1, built from the planar ones.
import numpy as np

from paraboloid import surface_v0 as S
from paraboloid.harness import SplitMix64, random_points

d = 3
rng = SplitMix64(1)
p = random_points("V0", d, 6, rng)
q = random_points("V0", d, 6, rng)

# %% The transfer operator averages a kernel on the parabolic domain over two
# auxiliary variables.  For beta = -1/2 no averaging is needed.
for beta in (-0.5, 0.0, 1.5):
    w = S.WeightV0(d, beta, gamma=1.0)
    err = np.max(np.abs(S.kernel_P_v0(5, w, p, q) - S.kernel_P_v0_direct(5, w, p, q)))
    print(f"beta={beta:+.1f}: transfer vs basis sum, degree 5, max diff {err:.2e}")

# %% With one point on the rim t = 1 the partial-sum kernel is a single integral.
w = S.WeightV0(d, -0.5, gamma=0.5)
xi = np.array([0.0, 0.6, 0.8])
print("\nK_n((xi, 1), q) for the first q")
for n in (3, 9, 15):
    closed = S.kernel_K_boundary(n, w, xi, q[0])
    direct = S.kernel_K_v0_direct(n, w, np.append(xi, 1.0), q[0])
    print(f"  n={n:2d}  {closed:+.10f}  {direct:+.10f}")

# %% The radial factors satisfy a second-order equation in t.
t = np.linspace(0.1, 0.9, 5)
print("\nradial equation residuals (n, m):")
for n, m in [(3, 1), (6, 2), (8, 8)]:
    print(f"  ({n}, {m})  {np.max(np.abs(S.ode_residual(n, m, w, t))):.1e}")
