"""
Transforms on Z/NZ
==================

The forward DFT is an unnormalized sum and the inverse carries the 1/N. With
that convention Parseval reads sum |f|^2 = (1/N) sum |f_hat|^2 and
convolution becomes a pointwise product.
"""
import numpy as np

from zn_fejer import convolve, dft, idft, l2_norm

# %% A small hand-checkable transform
f = np.array([1.0, 2.0, 3.0, 4.0])
print("dft(1,2,3,4) =", np.round(dft(f), 12))
print("round trip   =", np.round(idft(dft(f)).real, 12))

# %% Parseval on a random complex signal
rng = np.random.default_rng(0)
N = 101
f = rng.standard_normal(N) + 1j * rng.standard_normal(N)
F = dft(f)
print("energy in space     :", l2_norm(f) ** 2)
print("energy in frequency :", np.sum(np.abs(F) ** 2) / N)

# %% Convolution theorem, and the two convolution paths
g = rng.standard_normal(N)
direct = convolve(f, g, "direct")
spectral = convolve(f, g, "spectral")
print("max |dft(f*g) - dft(f) dft(g)| :", np.max(np.abs(dft(direct) - F * dft(g))))
print("max |direct - spectral|        :", np.max(np.abs(direct - spectral)))
