"""Deterministic 64-bit PRNG (splitmix64) with derived substreams.

random.Random's integer methods are not guaranteed byte-stable across
interpreter versions; this sequence is fixed by the splitmix64 constants and
nothing else, so seeds printed in output can always be replayed.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


def derive(seed: int, *path: int) -> int:
    """Independent stream seed from a root seed and an index path.

    derive(s, a, b) != derive(s, a, c) for b != c with overwhelming
    probability; used to give each trial / each sample its own stream.
    """
    s = seed & _MASK
    for p in path:
        s = _mix((s + _GOLDEN * ((p & _MASK) + 1)) & _MASK)
    return s


class Stream:
    """Stateful splitmix64 generator."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], unbiased via rejection."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next64()
            if x < limit:
                return lo + x % span

    def nonzero(self, bound: int) -> int:
        """Uniform nonzero integer in [-bound, bound]."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        while True:
            x = self.randint(-bound, bound)
            if x:
                return x
