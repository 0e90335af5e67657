"""
Signals on the cyclic group Z/NZ.

A signal is a 1-D numpy array of length N >= 2 whose entry ``n`` holds f(n).
Spectra use the same layout indexed by frequency k. The transform convention
is unnormalized forward / (1/N) inverse:

    dft(f)[k]  = sum_n f(n) exp(-2 pi i k n / N)
    idft(F)[n] = (1/N) sum_k F(k) exp(+2 pi i k n / N)

All functions are pure; cached twiddle matrices are read-only.
"""
from functools import lru_cache

import numpy as np

from .exceptions import DimensionError, ParameterError

__all__ = [
    "as_signal",
    "least_abs_representative",
    "least_abs_residues",
    "dft",
    "idft",
    "convolve",
    "inner",
    "l2_norm",
    "linf_norm",
    "mean",
    "is_mean_zero",
    "delta",
]

DFT_METHODS = ("direct", "fft")
CONVOLVE_METHODS = ("direct", "spectral")


def check_group_size(N):
    if isinstance(N, bool) or int(N) != N or N < 2:
        raise ParameterError(f"group size must be an integer >= 2, got {N!r}")
    return int(N)


def as_signal(values, N=None):
    """Validate ``values`` as a signal on Z/NZ and return it as an ndarray.

    Real input stays real; everything else is promoted to complex128.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise DimensionError(f"signal must be 1-D, got shape {arr.shape}")
    check_group_size(arr.shape[0])
    if N is not None and arr.shape[0] != N:
        raise DimensionError(f"expected length {N}, got {arr.shape[0]}")
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128, copy=False)
    else:
        arr = arr.astype(np.float64, copy=False)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("signal values must be finite")
    return arr


def delta(N, at=0):
    """Unit mass at residue ``at``."""
    N = check_group_size(N)
    out = np.zeros(N)
    out[at % N] = 1.0
    return out


def least_abs_representative(n, N):
    """Representative of n mod N in [-N//2, N//2].

    For even N the tie n = N/2 resolves to +N/2.

    >>> least_abs_representative(5, 7)
    -2
    >>> least_abs_representative(3, 6)
    3
    """
    N = check_group_size(N)
    if not 0 <= n < N:
        raise ParameterError(f"residue must satisfy 0 <= n < {N}, got {n}")
    return n if n <= N // 2 else n - N


def least_abs_residues(N):
    """Vector of least absolute representatives for n = 0, ..., N-1."""
    N = check_group_size(N)
    n = np.arange(N)
    return np.where(n <= N // 2, n, n - N)


@lru_cache(maxsize=64)
def _twiddles(N, sign):
    # exponent reduced mod N before trig evaluation keeps the argument in [0, 2 pi)
    kn = np.outer(np.arange(N), np.arange(N)) % N
    w = np.exp(sign * 2j * np.pi * kn / N)
    w.setflags(write=False)
    return w


def dft(f, method="direct"):
    """Discrete Fourier transform, f_hat(k) = sum_n f(n) e^{-2 pi i k n / N}.

    ``method="direct"`` evaluates the O(N^2) defining sum and is the
    reference; ``method="fft"`` uses numpy's FFT with the same convention.
    """
    f = as_signal(f)
    if method == "direct":
        return _twiddles(f.shape[0], -1) @ f.astype(np.complex128)
    if method == "fft":
        return np.fft.fft(f)
    raise ParameterError(f"unknown dft method {method!r}; expected one of {DFT_METHODS}")


def idft(F, method="direct"):
    """Inverse transform, f(n) = (1/N) sum_k F(k) e^{+2 pi i k n / N}."""
    F = as_signal(F)
    N = F.shape[0]
    if method == "direct":
        return (_twiddles(N, +1) @ F.astype(np.complex128)) / N
    if method == "fft":
        return np.fft.ifft(F)
    raise ParameterError(f"unknown dft method {method!r}; expected one of {DFT_METHODS}")


def convolve(f, g, method="direct"):
    """Circular convolution (f * g)(n) = sum_m f(n - m) g(m).

    ``direct`` is the O(N^2) sum; ``spectral`` multiplies FFT spectra.
    Two real inputs give a real output.
    """
    f = as_signal(f)
    g = as_signal(g)
    if f.shape != g.shape:
        raise DimensionError(f"cannot convolve signals of lengths {f.shape[0]} and {g.shape[0]}")
    N = f.shape[0]
    real = not (np.iscomplexobj(f) or np.iscomplexobj(g))
    if method == "direct":
        idx = (np.arange(N)[:, None] - np.arange(N)[None, :]) % N
        out = f[idx] @ g
    elif method == "spectral":
        out = idft(dft(f, "fft") * dft(g, "fft"), "fft")
        if real:
            out = out.real
    else:
        raise ParameterError(
            f"unknown convolution method {method!r}; expected one of {CONVOLVE_METHODS}"
        )
    return out


def inner(f, g):
    """<f, g> = sum_n f(n) conj(g(n))."""
    f = as_signal(f)
    g = as_signal(g)
    if f.shape != g.shape:
        raise DimensionError("inner product of signals on different groups")
    return complex(np.vdot(g, f))


def l2_norm(f):
    """Unnormalized l^2 norm (sum_n |f(n)|^2)^(1/2); no 1/N factor."""
    f = as_signal(f)
    return float(np.sqrt(np.sum(np.abs(f) ** 2)))


def linf_norm(f):
    f = as_signal(f)
    return float(np.max(np.abs(f)))


def mean(f):
    """Normalized average (1/N) sum_n f(n)."""
    f = as_signal(f)
    return complex(np.sum(f) / f.shape[0])


def is_mean_zero(f, tol=1e-12):
    return abs(mean(f)) <= tol
