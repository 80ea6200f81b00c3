"""Numba-jitted implementations of the hot kernels.

Same contract as the numpy backend (see _numpy.py).  Every kernel is an
explicit loop nest; uint64 arithmetic in the sampler uses np.uint64
constants throughout because mixing in a Python int would promote the
result to float64.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_RNG_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_RNG_MULT_1 = np.uint64(0xBF58476D1CE4E5B9)
_RNG_MULT_2 = np.uint64(0x94D049BB133111EB)
_U01_SCALE = 2.0**-53


@njit(cache=True)
def _apply_bloch(work, party, bx, by, bz):
    mask = 1 << (3 - party)
    for i in range(16):
        if i & mask == 0:
            j = i | mask
            a0 = work[i]
            a1 = work[j]
            work[i] = bz * a0 + (bx - 1j * by) * a1
            work[j] = (bx + 1j * by) * a0 - bz * a1


@njit(cache=True)
def bell_value(amps, bloch, coeffs, slots):
    total = 0.0 + 0.0j
    work = np.empty(16, np.complex128)
    for t in range(coeffs.shape[0]):
        work[:] = amps
        for p in range(4):
            s = slots[t, p]
            _apply_bloch(work, p, bloch[s, 0], bloch[s, 1], bloch[s, 2])
        acc = 0.0 + 0.0j
        for i in range(16):
            acc += np.conj(amps[i]) * work[i]
        total += coeffs[t] * acc
    return total


@njit(cache=True)
def effective_bloch(amps, bloch, coeffs, slots, slot):
    party = slot // 2
    mask = 1 << (3 - party)
    m = np.zeros(3)
    work = np.empty(16, np.complex128)
    for t in range(coeffs.shape[0]):
        if slots[t, party] != slot:
            continue
        work[:] = amps
        for p in range(4):
            if p == party:
                continue
            s = slots[t, p]
            _apply_bloch(work, p, bloch[s, 0], bloch[s, 1], bloch[s, 2])
        mx = 0.0
        my = 0.0
        mz = 0.0
        for i in range(16):
            if i & mask == 0:
                j = i | mask
                ca0 = np.conj(amps[i])
                ca1 = np.conj(amps[j])
                w0 = work[i]
                w1 = work[j]
                mx += (ca0 * w1 + ca1 * w0).real
                my += (-1j * ca0 * w1 + 1j * ca1 * w0).real
                mz += (ca0 * w0 - ca1 * w1).real
        m[0] += coeffs[t] * mx
        m[1] += coeffs[t] * my
        m[2] += coeffs[t] * mz
    return m


@njit(cache=True)
def seesaw_sweeps(amps, bloch, coeffs, slots, max_sweeps, tol):
    trace = np.empty(max_sweeps + 1)
    trace[0] = bell_value(amps, bloch, coeffs, slots).real
    used = 0
    converged = False
    for sweep in range(1, max_sweeps + 1):
        for slot in range(8):
            m = effective_bloch(amps, bloch, coeffs, slots, slot)
            norm = np.sqrt(m[0] ** 2 + m[1] ** 2 + m[2] ** 2)
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


@njit(cache=True)
def sample_counts(cdf, shots, seed):
    counts = np.zeros(16, np.int64)
    total = cdf[15]
    state = np.uint64(seed)
    for _ in range(shots):
        state = state + _RNG_GAMMA
        z = state
        z = (z ^ (z >> np.uint64(30))) * _RNG_MULT_1
        z = (z ^ (z >> np.uint64(27))) * _RNG_MULT_2
        z = z ^ (z >> np.uint64(31))
        u = np.float64(z >> np.uint64(11)) * _U01_SCALE
        x = u * total
        cell = 0
        while cell < 15 and x >= cdf[cell]:
            cell += 1
        counts[cell] += 1
    return counts
