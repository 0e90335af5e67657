"""
Smoothed discrepancy of a subset
================================

For a subset A, f_A = 1_A - |A|/N has mean zero and g_A = f_A * F_r measures
how far the smoothed local density of A strays from its global density.
Cauchy-Schwarz bounds ||g_A||_inf by sqrt(5/3) r^(-1/2) ||f_A||_2, and since
||f_A||_2 <= sqrt(N)/2 that is at most sqrt(5/12) r^(-1/2) N^(1/2).
"""
import numpy as np

from zn_fejer import (
    SubsetIndicator,
    effective_constant,
    interval_discrepancy,
    smoothed_deviation,
)

N = 60
# an interval is about as clustered as a subset can be
interval = SubsetIndicator(N, tuple(range(20)))
# multiples of 3 are perfectly spread out
spread = SubsetIndicator(N, tuple(range(0, N, 3)))

for name, A in (("interval", interval), ("multiples of 3", spread)):
    print(f"\n{name}: |A| = {A.size}")
    for r in (1, 3, 6, 12):
        rep = effective_constant(A, r)
        print(
            f"  r={r:>2}  ||g_A||_inf={rep.observed_sup:.4f}  theorem={rep.theorem_bound:.4f}"
            f"  corollary={rep.corollary_bound:.4f}  c(r)={rep.effective_constant:.4f}"
            f"  D(A, 2r-1)={interval_discrepancy(A, 2 * r - 1):.3f}"
        )

# %% The smoothed profile of the interval: positive inside, negative outside
print("\ng_A for the interval, r=6:")
print(np.round(smoothed_deviation(interval, 6), 3))
