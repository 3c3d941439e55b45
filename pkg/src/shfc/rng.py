"""Deterministic random number generator shared by the verification suites.

A fixed 64-bit linear congruential generator is used instead of the stdlib
`random` module so that seeded corpus draws are reproducible across Python
versions and platforms, byte for byte. Constants are Knuth's MMIX
multiplier/increment; output takes the top 31 bits of the state.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64,
    output = state' >> 33."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK

    def next(self):
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state >> 33

    def randint(self, lo, hi):
        """Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here:
        ranges are tiny against 2^31)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next() % (hi - lo + 1)

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.next() % len(seq)]
