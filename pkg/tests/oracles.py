"""Independent reference computations used only to verify the package.

Everything here is deliberately written the slow, obvious way (dense
Kronecker products, itertools enumeration, power iteration) and shares no
code with the implementation under test.
"""

from __future__ import annotations

import itertools

import numpy as np

ORACLE_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_chain(mats) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for m in mats:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def dense_pauli_string(string: str) -> np.ndarray:
    return kron_chain(ORACLE_PAULI[c] for c in string)


def dense_bloch(v) -> np.ndarray:
    x, y, z = (float(c) for c in v)
    return x * ORACLE_PAULI["X"] + y * ORACLE_PAULI["Y"] + z * ORACLE_PAULI["Z"]


def dense_expectation(amps, mats) -> complex:
    op = kron_chain(mats)
    return complex(np.vdot(amps, op @ amps))


def dense_bell_matrix(terms, slot_vectors) -> np.ndarray:
    """16x16 operator from raw terms [(coeff, (s_A..s_D))] and an (8, 3) array."""
    total = np.zeros((16, 16), dtype=complex)
    for coeff, choices in terms:
        mats = [dense_bloch(slot_vectors[2 * p + (choices[p] - 1)]) for p in range(4)]
        total += coeff * kron_chain(mats)
    return total


def dense_bell_value(amps, terms, slot_vectors) -> float:
    value = complex(np.vdot(amps, dense_bell_matrix(terms, slot_vectors) @ amps))
    assert abs(value.imag) < 1e-10
    return value.real


def brute_force_lhv(terms) -> tuple[float, tuple[int, ...]]:
    """Max |value| over all sign assignments, first maximizer in +1-first order."""
    best = -1.0
    best_signs = None
    for signs in itertools.product([1, -1], repeat=8):
        total = 0.0
        for coeff, choices in terms:
            prod = 1
            for p in range(4):
                prod *= signs[2 * p + (choices[p] - 1)]
            total += coeff * prod
        if abs(total) > best:
            best = abs(total)
            best_signs = signs
    return best, best_signs


def power_iteration_cap(matrix, iterations: int = 300, seed: int = 1234) -> float:
    """Largest |eigenvalue| of a Hermitian matrix via power iteration on M @ M.

    M @ M is positive semidefinite with spectral radius cap^2, so the
    iteration converges without sign trouble; the cap is the square root.
    """
    matrix = np.asarray(matrix, dtype=complex)
    squared = matrix @ matrix
    rng = np.random.default_rng(seed)
    vec = rng.normal(size=matrix.shape[0]) + 1j * rng.normal(size=matrix.shape[0])
    vec /= np.linalg.norm(vec)
    for _ in range(iterations):
        vec = squared @ vec
        vec /= np.linalg.norm(vec)
    return float(np.sqrt(np.vdot(vec, squared @ vec).real))


def random_state_amps(rng) -> np.ndarray:
    amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    return amps / np.linalg.norm(amps)


def random_qubit(rng) -> np.ndarray:
    amp = rng.normal(size=2) + 1j * rng.normal(size=2)
    return amp / np.linalg.norm(amp)


def random_product_amps(rng) -> np.ndarray:
    return kron_chain(random_qubit(rng) for _ in range(4)).reshape(16)


def random_unit3(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_settings_array(rng) -> np.ndarray:
    return np.vstack([random_unit3(rng) for _ in range(8)])
