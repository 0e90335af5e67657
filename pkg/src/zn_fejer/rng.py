"""
Frozen 64-bit generator for reproducible subset draws.

SplitMix64 (Steele, Lea, Flood 2014) in pure Python. Its output stream is
fixed by the algorithm, so reports stay identical across platforms and numpy
releases. Bump ``RNG_VERSION`` if anything below changes the drawn values.
"""

RNG_NAME = "splitmix64"
RNG_VERSION = 1

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def mix64(z):
    """SplitMix64 finalizer: a bijective avalanche on 64-bit words."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master_seed, index):
    """Independent per-trial seed from (master_seed, index)."""
    return mix64(mix64(master_seed) ^ ((index + 1) * GOLDEN_GAMMA & MASK64))


class SplitMix64:
    def __init__(self, seed):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.state = seed

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound):
        """Unbiased integer in [0, bound) by Lemire's multiply-and-reject."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        m = self.next_u64() * bound
        low = m & MASK64
        if low < bound:
            threshold = (-bound) % bound
            while low < threshold:
                m = self.next_u64() * bound
                low = m & MASK64
        return m >> 64


def subset_hash(N, members):
    """FNV-1a over N followed by the sorted members, as 64-bit words.

    Sorting first makes the digest independent of the order members arrive in.
    """
    h = FNV_OFFSET
    for word in (N, *sorted(members)):
        for shift in range(0, 64, 8):
            h ^= (word >> shift) & 0xFF
            h = (h * FNV_PRIME) & MASK64
    return h
