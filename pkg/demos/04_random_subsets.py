"""
Random half-size subsets of Z/101Z
==================================

Draw |A| = 50 uniformly at random, smooth at r = 5, 10, 20 and compare the
observed effective constant c(r) = ||g_A||_inf sqrt(r / N) with the uniform
worst case sqrt(5/12) ~ 0.645. The same run is available from the command line:

    zn-fejer discrepancy --n 101 --size 50 --r 5 --r 10 --r 20 --trials 100 --seed 42
"""
import math

from zn_fejer import ExperimentConfig, emit_report, run_experiment
from zn_fejer.experiments import summarize

config = ExperimentConfig(N=101, subset_size=50, radii=(5, 10, 20), trials=100, seed=42)
reports = run_experiment(config)

print(f"worst-case constant: {math.sqrt(5 / 12):.4f}")
for r, s in summarize(reports).items():
    print(f"r={r:>2}: mean c(r) = {s['mean_effective_constant']:.4f}, max = {s['max_effective_constant']:.4f}")

# %% First few report rows
print("\n".join(emit_report(reports[:6], "csv").splitlines()[-7:]))
