"""Deterministic pseudo-random input generation.

The micro-benchmark and the randomized contract checks need reproducible
inputs whose checksums can be compared across runs, so the generator is a
fixed, named algorithm (splitmix64) rather than a library PRNG whose
stream might change between versions.
"""

from __future__ import annotations

import math
from typing import Iterator

__all__ = ["splitmix64", "log_uniform_signed"]

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """Endless stream of 64-bit words from the splitmix64 generator."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield (z ^ (z >> 31))


def log_uniform_signed(
    n: int,
    seed: int,
    lo_mag: float = 1e-6,
    hi_mag: float = 1e6,
) -> list[float]:
    """n floats with log-uniform magnitude in [lo_mag, hi_mag], random sign.

    One 64-bit word per value: the top 53 bits drive the magnitude
    exponent, the lowest bit the sign.  Fully determined by ``seed``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not (0.0 < lo_mag < hi_mag) or not math.isfinite(hi_mag):
        raise ValueError(f"need 0 < lo_mag < hi_mag finite, got ({lo_mag}, {hi_mag})")
    lo_exp = math.log10(lo_mag)
    hi_exp = math.log10(hi_mag)
    span = hi_exp - lo_exp
    words = splitmix64(seed)
    out = []
    for _ in range(n):
        z = next(words)
        u = (z >> 11) * 2.0 ** -53  # uniform in [0, 1)
        magnitude = 10.0 ** (lo_exp + span * u)
        out.append(-magnitude if (z & 1) else magnitude)
    return out
