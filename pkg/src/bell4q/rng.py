"""Portable seedable randomness built on the splitmix64 sequence.

The i-th output (i = 0, 1, ...) for a given 64-bit seed is

    mix(seed + (i + 1) * GAMMA)   mod 2^64

where GAMMA = 0x9E3779B97F4A7C15 and mix is the xor-shift/multiply chain

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

Because each output is a pure function of (seed, i), the same stream can
be produced one value at a time or as a vectorized block, and every
backend of this package reproduces it bit for bit.  Substreams (per
restart, per correlator term) use the parent stream's outputs as child
seeds.

Derived real numbers:

* uniform in [0, 1): (x >> 11) * 2**-53
* uniform in (0, 1]: ((x >> 11) + 1) * 2**-53  (safe under log)
* standard normal pairs: Box-Muller on one open and one half-open uniform
"""

from __future__ import annotations

import math

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB
U01_SCALE = 2.0**-53


def mix64(z: int) -> int:
    """Finalizing mixer; bijective on 64-bit integers."""
    z &= MASK64
    z ^= z >> 30
    z = (z * _MIX_MULT_1) & MASK64
    z ^= z >> 27
    z = (z * _MIX_MULT_2) & MASK64
    z ^= z >> 31
    return z


def stream_output(seed: int, index: int) -> int:
    """The index-th 64-bit output of the stream for this seed."""
    if index < 0:
        raise ValueError(f"stream index must be >= 0, got {index}")
    return mix64((seed + (index + 1) * GAMMA) & MASK64)


def substream_seed(seed: int, index: int) -> int:
    """Child seed number `index`: simply the parent's index-th output."""
    return stream_output(seed, index)


def uint64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs start .. start+count-1 as a uint64 array, vectorized.

    Identical values to calling stream_output in a loop.
    """
    if start < 0 or count < 0:
        raise ValueError("start and count must be >= 0")
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + idx * np.uint64(GAMMA)
        z ^= z >> np.uint64(30)
        z *= np.uint64(_MIX_MULT_1)
        z ^= z >> np.uint64(27)
        z *= np.uint64(_MIX_MULT_2)
        z ^= z >> np.uint64(31)
    return z


def unit_float(x: int) -> float:
    """Map a 64-bit output to [0, 1) using the top 53 bits."""
    return (x >> 11) * U01_SCALE


def open_unit_float(x: int) -> float:
    """Map a 64-bit output to (0, 1]; never 0, so log() is safe."""
    return ((x >> 11) + 1) * U01_SCALE


def unit_float_block(seed: int, start: int, count: int) -> np.ndarray:
    """Vectorized unit_float over outputs start .. start+count-1."""
    return (uint64_block(seed, start, count) >> np.uint64(11)).astype(np.float64) * U01_SCALE


def normal_pair(seed: int, base_index: int) -> tuple[float, float]:
    """Two standard normals (Box-Muller) from outputs base_index, base_index+1."""
    u1 = open_unit_float(stream_output(seed, base_index))
    u2 = unit_float(stream_output(seed, base_index + 1))
    r = math.sqrt(-2.0 * math.log(u1))
    return r * math.cos(2.0 * math.pi * u2), r * math.sin(2.0 * math.pi * u2)


def unit_vector3(seed: int, base_index: int) -> np.ndarray:
    """Uniform direction on the sphere from outputs base_index .. base_index+3.

    Consumes four outputs (two Box-Muller pairs; the fourth normal is
    discarded) so that consecutive vectors sit at stride 4.
    """
    n1, n2 = normal_pair(seed, base_index)
    n3, _ = normal_pair(seed, base_index + 2)
    vec = np.array([n1, n2, n3])
    norm = float(np.linalg.norm(vec))
    if norm < 1e-12:
        # Probability ~1e-36 per draw; fall back to a fixed axis.
        return np.array([0.0, 0.0, 1.0])
    return vec / norm


class SplitMix64:
    """Stateful sequential view of the stream (same values as stream_output)."""

    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self._index = 0

    def next_uint64(self) -> int:
        value = stream_output(self.seed, self._index)
        self._index += 1
        return value

    def next_float(self) -> float:
        return unit_float(self.next_uint64())
