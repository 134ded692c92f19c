# Orthogonal polynomials on the region between x2 = x1^2 and x2 = 1.
import numpy as np

from paraboloid import domain_u as U
from paraboloid.quadrature import rule_u
from paraboloid.specfun import CesaroSpec

w = U.WeightU(a=0.5, b=1.0)
print(f"weight (1-x2)^{w.a} (x2-x1^2)^{w.b - 0.5}, normalising constant {w.d_ab:.6f}")

# %% The basis is orthogonal under a product Gauss rule.
N = 6
rule = rule_u(w.a, w.b, N + 2)
B = U.basis_all(N, w, rule.points)
G = (B * rule.weights) @ B.T
print(f"{len(B)} basis polynomials up to degree {N}, {len(rule)} quadrature nodes")
print("max |Gram - diag(h)| =", np.max(np.abs(G - np.diag(U.basis_norms(N, w)))))

# %% The reproducing kernel with one point on the curved boundary has a short
# zonal form.  Compare it with the sum over the basis.
rng = np.random.default_rng(0)
x2 = rng.uniform(0, 1, 5)
y2 = rng.uniform(0, 1, 5)
y = np.column_stack([np.sqrt(y2) * rng.uniform(-1, 1, 5), y2])
x = np.column_stack([np.sqrt(x2), x2])
print("\nboundary kernel, degree 4")
print("  zonal form :", np.round(U.kernel_P_boundary(4, w, x2, y), 10))
print("  basis sum  :", np.round(U.kernel_P(4, w, x, y), 10))

# %% At the corner (1, 1) the partial-sum kernel is a one-dimensional integral.
print("\nK_n((1,1), x) at x = (0.2, 0.3)")
for n in (2, 8, 16):
    print(f"  n={n:2d}  integral {U.kernel_K_at_one(n, w, (0.2, 0.3)):+.12f}"
          f"  direct {U.kernel_K(n, w, (1.0, 1.0), (0.2, 0.3)):+.12f}")

# %% Cesaro kernels become nonnegative once delta is large enough.
x1g, x2g = np.meshgrid(np.linspace(-1, 1, 60), np.linspace(0, 1, 60))
keep = x1g ** 2 <= x2g
grid = np.column_stack([x1g[keep], x2g[keep]])
threshold = w.a + 2 * w.b + 4
print(f"\nminimum of K_n^delta((1,1), .) over {len(grid)} grid points, n = 12")
for delta in (0.0, 1.0, 3.0, threshold):
    m = U.cesaro_kernel_at_one(CesaroSpec(12, delta), w, grid).min()
    print(f"  delta={delta:4.1f}  min={m:+.4e}")
