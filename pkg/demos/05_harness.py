# Driving the verification harness from Python instead of the command line.
import os

from paraboloid import harness

# Same as: parab closedform-check --domain U --a 0 --b 1.5 --N 6 --seed 3
cfg = harness.ExperimentConfig("closedform-check", domain="U", a=0.0, b=1.5, N=6, seed=3)
print(harness.to_csv(harness.run(cfg)))

# Several configurations in parallel; PARAB_THREADS caps the pool and never
# changes the output.
os.environ["PARAB_THREADS"] = "2"
batch = [harness.ExperimentConfig("kernel-check", domain="V0", d=d, beta=0.0, gamma=1.0, N=4, pairs=30)
         for d in (2, 3)]
for cfg, rows in zip(batch, harness.run_many(batch)):
    worst = max(r["measured"] for r in rows)
    print(f"d={cfg.d}: {len(rows)} rows, worst difference {worst:.2e}, all pass: {all(r['pass'] for r in rows)}")

print("\ntest functions:")
for fid, text in harness.list_test_functions().items():
    print(f"  {fid:18s} {text}")
