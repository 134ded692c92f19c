# Cesaro means of |x1| on the three domains.
#
# The convergence results for these means are asymptotic statements in L^p
# norms; they carry no rates or constants that could be checked numerically.
# What can be observed at desk scale is that the sup error on a fixed grid
# keeps falling as n doubles when delta sits above the threshold.
from paraboloid.harness import ExperimentConfig, convergence_delta, run

configs = [
    ExperimentConfig("cesaro-table", domain="U", a=0.5, b=0.5),
    ExperimentConfig("cesaro-table", domain="V0", d=2, beta=-0.5, gamma=0.0),
    ExperimentConfig("cesaro-table", domain="V", d=2, beta=0.0, gamma=0.0, mu=0.5),
]
for cfg in configs:
    delta = convergence_delta(cfg)
    cfg.delta = [0.0, delta]
    print(f"\n{cfg.domain} ({cfg.params()})")
    for row in run(cfg):
        if row["check_id"].endswith("trend"):
            print(f"  delta={row['delta']:.2f}  largest rise {row['measured']:+.2e}  "
                  f"{'monotone' if row['pass'] else 'not monotone'}")
        else:
            print(f"  delta={row['delta']:.2f}  n={row['n']:2d}  sup error {row['measured']:.4f}")
