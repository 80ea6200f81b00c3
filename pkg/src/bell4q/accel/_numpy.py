"""Pure-numpy implementations of the hot kernels.

These are the reference semantics; the numba backend mirrors them.  The
shared contract:

* ``amps`` is a (16,) complex128 state, ``bloch`` a (8, 3) float64 array
  of unit vectors in slot order (a1, a2, b1, b2, c1, c2, d1, d2) where
  slot = 2*party + (setting - 1).
* ``coeffs`` (T,) float64 and ``slots`` (T, 4) int64 describe the
  correlator: sum_t coeffs[t] * <prod_p bloch[slots[t, p]] . sigma_p>.
* ``sample_counts`` consumes the splitmix64 stream of its seed, one
  output per shot, and bins u * cdf[-1] by "first cell with
  u * cdf[-1] < cdf[k]" (index clipped to 15).  Counts are bit-identical
  across backends.
"""

from __future__ import annotations

import numpy as np

_INDEX = np.arange(16)
# Pairs of amplitude indices that differ only in the party's bit.
_LO = [_INDEX[(_INDEX & (1 << (3 - p))) == 0] for p in range(4)]
_HI = [_LO[p] | (1 << (3 - p)) for p in range(4)]

_RNG_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_RNG_MULT_1 = np.uint64(0xBF58476D1CE4E5B9)
_RNG_MULT_2 = np.uint64(0x94D049BB133111EB)
_U01_SCALE = 2.0**-53


def _apply_bloch(work: np.ndarray, party: int, bx: float, by: float, bz: float) -> None:
    """In-place v.sigma on one party of a working copy."""
    lo, hi = _LO[party], _HI[party]
    a0 = work[lo].copy()
    a1 = work[hi].copy()
    work[lo] = bz * a0 + (bx - 1j * by) * a1
    work[hi] = (bx + 1j * by) * a0 - bz * a1


def bell_value(amps, bloch, coeffs, slots) -> complex:
    """Value of the correlator expression at the given settings."""
    total = 0.0 + 0.0j
    for t in range(coeffs.shape[0]):
        work = amps.copy()
        for p in range(4):
            s = slots[t, p]
            _apply_bloch(work, p, bloch[s, 0], bloch[s, 1], bloch[s, 2])
        total += coeffs[t] * np.vdot(amps, work)
    return complex(total)


def effective_bloch(amps, bloch, coeffs, slots, slot) -> np.ndarray:
    """Gradient of the correlator with respect to one slot's Bloch vector.

    The objective is linear in each slot's vector, so the value at v is
    m . v with m returned here; terms not using the slot contribute 0.
    """
    party = slot // 2
    lo, hi = _LO[party], _HI[party]
    m = np.zeros(3)
    for t in range(coeffs.shape[0]):
        if slots[t, party] != slot:
            continue
        work = amps.copy()
        for p in range(4):
            if p == party:
                continue
            s = slots[t, p]
            _apply_bloch(work, p, bloch[s, 0], bloch[s, 1], bloch[s, 2])
        ca0 = amps[lo].conj()
        ca1 = amps[hi].conj()
        w0 = work[lo]
        w1 = work[hi]
        m[0] += coeffs[t] * float(np.sum(ca0 * w1 + ca1 * w0).real)
        m[1] += coeffs[t] * float(np.sum(-1j * ca0 * w1 + 1j * ca1 * w0).real)
        m[2] += coeffs[t] * float(np.sum(ca0 * w0 - ca1 * w1).real)
    return m


def seesaw_sweeps(amps, bloch, coeffs, slots, max_sweeps, tol):
    """Alternating slot updates until the per-sweep gain drops below tol.

    Mutates ``bloch`` in place; callers pass a fresh copy.  Returns
    (bloch, trace, converged) where trace[k] is the value after k sweeps
    (trace[0] is the value at the initial settings).
    """
    trace = np.empty(max_sweeps + 1)
    trace[0] = bell_value(amps, bloch, coeffs, slots).real
    used = 0
    converged = False
    for sweep in range(1, max_sweeps + 1):
        for slot in range(8):
            m = effective_bloch(amps, bloch, coeffs, slots, slot)
            norm = np.sqrt(m[0] ** 2 + m[1] ** 2 + m[2] ** 2)
            # A vanishing gradient leaves the slot untouched.
            if norm >= 1e-12:
                bloch[slot, 0] = m[0] / norm
                bloch[slot, 1] = m[1] / norm
                bloch[slot, 2] = m[2] / norm
        value = bell_value(amps, bloch, coeffs, slots).real
        trace[sweep] = value
        used = sweep
        if value - trace[sweep - 1] < tol:
            converged = True
            break
    return bloch, trace[: used + 1].copy(), converged


def sample_counts(cdf, shots, seed) -> np.ndarray:
    """Multinomial counts over the 16 outcomes for a cumulative distribution."""
    counts = np.zeros(16, dtype=np.int64)
    total = cdf[15]
    done = 0
    chunk = 1 << 20
    seed = np.uint64(int(seed) & ((1 << 64) - 1))
    while done < shots:
        n = min(chunk, shots - done)
        idx = np.arange(done + 1, done + n + 1, dtype=np.uint64)
        z = seed + idx * _RNG_GAMMA
        z ^= z >> np.uint64(30)
        z *= _RNG_MULT_1
        z ^= z >> np.uint64(27)
        z *= _RNG_MULT_2
        z ^= z >> np.uint64(31)
        u = (z >> np.uint64(11)).astype(np.float64) * _U01_SCALE
        cells = np.searchsorted(cdf, u * total, side="right")
        np.minimum(cells, 15, out=cells)
        counts += np.bincount(cells, minlength=16)
        done += n
    return counts
