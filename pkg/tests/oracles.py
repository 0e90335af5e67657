"""Brute-force reference computations, independent of the package code paths."""
import cmath
from fractions import Fraction
from itertools import combinations


def naive_dft(values):
    N = len(values)
    return [
        sum(values[n] * cmath.exp(-2j * cmath.pi * k * n / N) for n in range(N))
        for k in range(N)
    ]


def naive_convolve(f, g):
    N = len(f)
    return [sum(f[(n - m) % N] * g[m] for m in range(N)) for n in range(N)]


def kernel_fraction(N, r):
    """F_r(n) from max(0, 1 - |n|/r)/r in exact arithmetic, scanning {n-N, n, n+N}."""
    out = []
    for n in range(N):
        a = min(abs(n - N), abs(n), abs(n + N))
        out.append(max(Fraction(0), 1 - Fraction(a, r)) / r)
    return out


def kernel_l2_squared_fraction(r):
    return sum(x * x for x in kernel_fraction(2 * r, r))


def all_subsets(N):
    for size in range(N + 1):
        yield from combinations(range(N), size)


def sup_interval_discrepancy(N, members, max_len):
    """Enumerate every cyclic interval explicitly with set intersection."""
    A = set(members)
    best = Fraction(0)
    for a in range(N):
        for L in range(1, max_len + 1):
            I = {(a + j) % N for j in range(L)}
            best = max(best, abs(len(A & I) - Fraction(len(A) * L, N)))
    return best


def random_complex(rng, N):
    return rng.standard_normal(N) + 1j * rng.standard_normal(N)
