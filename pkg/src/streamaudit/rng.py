"""Reproducible pseudo-random numbers.

The generator is SplitMix64 (Steele, Lea & Flood 2014), fixed by
specification rather than by platform default so that seeded runs produce
identical sequences on every platform and in every language that
implements the same three lines of 64-bit arithmetic:

    state_k  = seed + (k + 1) * 0x9E3779B97F4A7C15   (mod 2^64)
    output_k = mix(state_k)

where mix(z) is the usual xor-shift-multiply finalizer. Because the state
sequence is a plain counter, the stream is also vectorizable (see
`uniforms`); the scalar and vectorized paths are bit-identical.

Uniform doubles are formed from the top 53 bits: u = (output >> 11) * 2^-53,
giving values in [0, 1).
"""

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit value."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream seeded with a 64-bit integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def random(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def bernoulli(self, p: float) -> bool:
        """One draw with success probability p (p=0 never, p=1 always)."""
        return self.random() < p


def uniforms(seed: int, n: int) -> np.ndarray:
    """Vectorized batch of the first n uniforms of SplitMix64(seed).

    Bit-identical to calling SplitMix64(seed).random() n times.
    """
    with np.errstate(over="ignore"):
        state = np.uint64(seed) + (np.arange(1, n + 1, dtype=np.uint64)
                                   * np.uint64(_GOLDEN))
        z = (state ^ (state >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
        z ^= z >> np.uint64(31)
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53


def derive_seed(master: int, *indices: int) -> int:
    """Deterministic per-run seed from a master seed and integer indices.

    Folds each index into the running hash with the SplitMix64 finalizer:

        s = mix64(master)
        for i in indices:  s = mix64(s ^ mix64(i + GOLDEN))

    Distinct index tuples give independent-looking 64-bit seeds, so sweep
    cells can run in any order (or concurrently) without collisions.
    """
    s = mix64(master)
    for i in indices:
        s = mix64(s ^ mix64((i + _GOLDEN) & _MASK))
    return s
