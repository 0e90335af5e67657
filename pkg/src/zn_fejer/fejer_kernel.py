"""
Triangular Fejer-type kernel on Z/NZ.

    F_r(n) = (1/r) max(0, 1 - |n|/r) = (r - |n|) / r^2   for |n| <= r - 1

with |n| the least absolute representative. F_r is (1/r^2) times the
autocorrelation of the boxcar 1_{0..r-1}, so its DFT is a squared-sinc ratio
lying in [0, 1].
"""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ParameterError
from .group_signal import check_group_size, least_abs_residues

__all__ = [
    "KernelSpec",
    "build_kernel",
    "boxcar",
    "kernel_via_autocorrelation",
    "kernel_l2_squared_closed_form",
    "kernel_l2_squared_upper_bound",
    "symbol_closed_form",
    "symbol",
]


@dataclass(frozen=True)
class KernelSpec:
    """Group order N and smoothing radius r, with 1 <= r <= N // 2."""

    N: int
    r: int

    def __post_init__(self):
        check_group_size(self.N)
        if isinstance(self.r, bool) or int(self.r) != self.r:
            raise ParameterError(f"radius must be an integer, got {self.r!r}")
        if not 1 <= self.r <= self.N // 2:
            raise ParameterError(
                f"radius must satisfy 1 <= r <= {self.N // 2} for N={self.N}, got r={self.r}"
            )


def _check_radius(r):
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterError(f"radius must be an integer >= 1, got {r!r}")
    return int(r)


def build_kernel(spec):
    """The kernel F_r as a real signal of length N."""
    r = spec.r
    a = np.abs(least_abs_residues(spec.N))
    # integer numerator r - |n| avoids cancellation at |n| = r - 1
    return np.where(a < r, (r - a) / (r * r), 0.0)


def boxcar(spec):
    """Indicator of {0, ..., r-1}."""
    g = np.zeros(spec.N)
    g[: spec.r] = 1.0
    return g


def kernel_via_autocorrelation(spec):
    """(1/r^2) sum_m g(m) g(n+m) for the boxcar g.

    Independent O(N r) construction used to cross-check :func:`build_kernel`.
    """
    g = boxcar(spec)
    N = spec.N
    n = np.arange(N)
    acc = np.zeros(N)
    for m in np.flatnonzero(g):
        acc += g[m] * g[(n + m) % N]
    return acc / spec.r**2


def kernel_l2_squared_closed_form(r):
    """||F_r||_2^2 = 1/r^2 + (r-1)(2r-1)/(3 r^3). Independent of N."""
    r = _check_radius(r)
    return 1.0 / r**2 + (r - 1) * (2 * r - 1) / (3.0 * r**3)


def kernel_l2_squared_upper_bound(r):
    """The uniform bound 5/(3r) on ||F_r||_2^2."""
    r = _check_radius(r)
    return 5.0 / (3.0 * r)


def symbol_closed_form(spec, k):
    """Fourier multiplier of F_r at frequency k.

    Equal to 1 at k = 0 and (sin(pi r k/N) / (r sin(pi k/N)))^2 otherwise.
    The denominator is strictly positive for 0 < k < N.
    """
    N, r = spec.N, spec.r
    if isinstance(k, bool) or int(k) != k or not 0 <= k < N:
        raise ParameterError(f"frequency must satisfy 0 <= k < {N}, got {k!r}")
    if k == 0:
        return 1.0
    # r k reduced mod 2N: sin(pi x / N) has period 2N in x
    num = math.sin(math.pi * ((r * k) % (2 * N)) / N)
    den = r * math.sin(math.pi * k / N)
    return (num / den) ** 2


def symbol(spec):
    """Vector of :func:`symbol_closed_form` over all k."""
    return np.array([symbol_closed_form(spec, k) for k in range(spec.N)])
