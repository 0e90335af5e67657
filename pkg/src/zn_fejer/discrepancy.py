"""
Smoothed discrepancy of subsets of Z/NZ.

For A a subset of Z/NZ, f_A = 1_A - |A|/N is mean zero and
g_A = f_A * F_r is its Fejer-smoothed local density deviation. Cauchy-Schwarz
gives

    ||f * F_r||_inf <= ||f||_2 ||F_r||_2 <= sqrt(5/3) r^{-1/2} ||f||_2

and with ||f_A||_2 <= sqrt(N)/2 the uniform bound sqrt(5/12) r^{-1/2} N^{1/2}.
"""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ParameterError
from .fejer_kernel import KernelSpec, build_kernel
from .group_signal import check_group_size, convolve, l2_norm, linf_norm

__all__ = [
    "SubsetIndicator",
    "BoundReport",
    "mean_zero_indicator",
    "fA_l2_squared_closed_form",
    "smoothed_deviation",
    "l2_linf_bound",
    "worst_case_bound",
    "effective_constant",
    "interval_discrepancy",
]

THEOREM_CONSTANT = math.sqrt(5.0 / 3.0)
COROLLARY_CONSTANT = math.sqrt(5.0 / 12.0)


@dataclass(frozen=True)
class SubsetIndicator:
    """A subset of Z/NZ stored as a strictly increasing tuple of residues."""

    N: int
    members: tuple = ()

    def __post_init__(self):
        check_group_size(self.N)
        members = tuple(int(m) for m in self.members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ParameterError("members must be strictly increasing")
        if members and not (0 <= members[0] and members[-1] < self.N):
            raise ParameterError(f"members must lie in [0, {self.N})")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, N, residues):
        """Build from any iterable of integers, reducing mod N and deduplicating."""
        return cls(N, tuple(sorted({int(x) % N for x in residues})))

    @classmethod
    def from_mask(cls, mask):
        mask = np.asarray(mask, dtype=bool)
        return cls(mask.shape[0], tuple(np.flatnonzero(mask).tolist()))

    @property
    def size(self):
        return len(self.members)

    def indicator(self):
        out = np.zeros(self.N)
        out[list(self.members)] = 1.0
        return out

    def complement(self):
        return SubsetIndicator.from_mask(self.indicator() == 0)

    def shift(self, t):
        return SubsetIndicator.of(self.N, (m + t for m in self.members))


@dataclass(frozen=True)
class BoundReport:
    observed_sup: float
    theorem_bound: float
    corollary_bound: float
    effective_constant: float

    def is_ordered(self, rtol=1e-10):
        """observed_sup <= theorem_bound <= corollary_bound, with relative slack."""
        return (
            self.observed_sup <= self.theorem_bound * (1 + rtol)
            and self.theorem_bound <= self.corollary_bound * (1 + rtol)
        )


def mean_zero_indicator(A):
    """f_A(n) = 1_A(n) - |A|/N."""
    return A.indicator() - A.size / A.N


def fA_l2_squared_closed_form(size_A, N):
    """||f_A||_2^2 = |A| (N - |A|) / N, which never exceeds N/4."""
    N = check_group_size(N)
    if isinstance(size_A, bool) or int(size_A) != size_A or not 0 <= size_A <= N:
        raise ParameterError(f"subset size must satisfy 0 <= |A| <= {N}, got {size_A!r}")
    return size_A * (N - size_A) / N


def smoothed_deviation(A, r, method="direct"):
    """g_A = f_A * F_r."""
    kernel = build_kernel(KernelSpec(A.N, r))
    return convolve(mean_zero_indicator(A), kernel, method=method)


def l2_linf_bound(r, f_l2):
    """sqrt(5/3) r^{-1/2} ||f||_2, an upper bound for ||f * F_r||_inf."""
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterError(f"radius must be an integer >= 1, got {r!r}")
    if f_l2 < 0:
        raise ParameterError("l2 norm must be nonnegative")
    return THEOREM_CONSTANT * f_l2 / math.sqrt(r)


def worst_case_bound(N, r):
    """sqrt(5/12) r^{-1/2} N^{1/2}, uniform over all subsets A."""
    spec = KernelSpec(N, r)
    return COROLLARY_CONSTANT * math.sqrt(spec.N / spec.r)


def effective_constant(A, r, method="direct"):
    """Observed sup of g_A against both bounds, plus c(r) = ||g_A||_inf sqrt(r/N)."""
    g = smoothed_deviation(A, r, method=method)
    sup = linf_norm(g)
    return BoundReport(
        observed_sup=sup,
        theorem_bound=l2_linf_bound(r, l2_norm(mean_zero_indicator(A))),
        corollary_bound=worst_case_bound(A.N, r),
        effective_constant=sup * math.sqrt(r / A.N),
    )


def interval_discrepancy(A, max_len):
    """Max of ||A cap I| - (|A|/N)|I|| over cyclic intervals with 1 <= |I| <= max_len.

    Brute force over every start a and length L using prefix sums on the
    doubled indicator; O(N * max_len).
    """
    N = A.N
    if isinstance(max_len, bool) or int(max_len) != max_len or not 1 <= max_len <= N:
        raise ParameterError(f"max_len must satisfy 1 <= max_len <= {N}, got {max_len!r}")
    ind = A.indicator().astype(np.int64)
    prefix = np.concatenate(([0], np.cumsum(np.concatenate((ind, ind)))))
    starts = np.arange(N)
    density = A.size / N
    best = 0.0
    for L in range(1, int(max_len) + 1):
        counts = prefix[starts + L] - prefix[starts]
        best = max(best, float(np.max(np.abs(counts - density * L))))
    return best
