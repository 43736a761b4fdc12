"""
Seeded randomness for sampled checks.

SplitMix64: increment 0x9E3779B97F4A7C15, mixing multipliers
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30 / 27 / 31.
"""

from __future__ import annotations

from typing import Container, Optional

from sympy.polys.domains import QQ

from ..config import Config

MASK64 = (1 << 64) - 1


class SplitMix64:
    GAMMA = 0x9E3779B97F4A7C15
    MIX1 = 0xBF58476D1CE4E5B9
    MIX2 = 0x94D049BB133111EB

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX1) & MASK64
        z = ((z ^ (z >> 27)) * self.MIX2) & MASK64
        return z ^ (z >> 31)

    def randint(self, low: int, high: int) -> int:
        """Uniform-ish integer in ``[low, high]``."""
        if high < low:
            raise ValueError(f"Empty range [{low}, {high}]")
        return low + self.next_u64() % (high - low + 1)

    def rational(self, bound: int = Config.RATIONAL_BOUND, nonzero: bool = False):
        while True:
            value = QQ(self.randint(-bound, bound), self.randint(1, bound))
            if value or not nonzero:
                return value

    def point(self, dimension: int, bound: int = Config.RATIONAL_BOUND, exclude: Optional[Container] = None) -> tuple:
        """A random rational point, redrawn while it lies in ``exclude``."""
        while True:
            candidate = tuple(self.rational(bound) for _ in range(dimension))
            if exclude is None or candidate not in exclude:
                return candidate

    def element(self, dimension: int, box: int, exclude: Optional[Container] = None) -> tuple[int, ...]:
        """A random element of {0..box}^dimension, redrawn while it lies in ``exclude``."""
        if exclude is not None and box < 1 and (0,) * dimension in exclude:
            raise ValueError(f"Box {box} has no element outside {exclude!r}")
        while True:
            candidate = tuple(self.randint(0, box) for _ in range(dimension))
            if exclude is None or candidate not in exclude:
                return candidate

    def sample_elements(
        self, dimension: int, box: int, count: int, exclude: Optional[Container] = None
    ) -> list[tuple[int, ...]]:
        return [self.element(dimension, box, exclude) for _ in range(count)]
