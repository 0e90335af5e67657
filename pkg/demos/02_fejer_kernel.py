"""
The triangular kernel and its symbol
====================================

F_r is a tent of height 1/r and half-width r. It is (1/r^2) times the
autocorrelation of the boxcar on {0, ..., r-1}, which is why its DFT is a
squared ratio of sines and never leaves [0, 1].
"""
import numpy as np

from zn_fejer import (
    KernelSpec,
    build_kernel,
    dft,
    kernel_l2_squared_closed_form,
    kernel_l2_squared_upper_bound,
    kernel_via_autocorrelation,
    l2_norm,
    symbol,
)

spec = KernelSpec(N=24, r=5)
F = build_kernel(spec)
print("F_5 on Z/24Z:", np.round(F, 4))
print("mass:", F.sum())
print("same as boxcar autocorrelation:", np.allclose(F, kernel_via_autocorrelation(spec), atol=1e-12))

# %% Fourier symbol: closed form vs the direct DFT
S = symbol(spec)
print("symbol:", np.round(S, 4))
print("max |dft(F) - symbol|:", np.max(np.abs(dft(F) - S)))
print("symbol range: [%.3g, %.3g]" % (S.min(), S.max()))

# %% L2 norm: exact value, the 5/(3r) bound and the 2/(3r) asymptote
print(f"{'r':>6} {'||F_r||^2':>12} {'5/(3r)':>10} {'r*||F_r||^2':>12}")
for r in (1, 2, 5, 10, 100, 1000):
    exact = kernel_l2_squared_closed_form(r)
    print(f"{r:>6} {exact:12.6g} {kernel_l2_squared_upper_bound(r):10.4g} {r * exact:12.6f}")
print("check against the kernel itself at r=100:",
      l2_norm(build_kernel(KernelSpec(200, 100))) ** 2)
