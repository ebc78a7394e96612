"""SplitMix64: the fixed pseudo-random generator for all randomized runs.

Chosen because it is tiny, fast, well mixed, and trivially reproducible in
any language, so seeded workloads and fuzz runs can be replayed elsewhere
bit for bit.  The step is, in 64-bit wrapping arithmetic::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

The process-global ``random`` module is never used anywhere in this
package.
"""

from __future__ import annotations

import operator

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = operator.index(seed) & MASK64

    def next_u64(self) -> int:
        """Next value of the stream, uniform over [0, 2**64)."""
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """``next_u64() % bound``: uniform enough for bounds << 2**64 and,
        unlike rejection, a fixed one-draw cost; exact when *bound* is a
        power of two."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound
