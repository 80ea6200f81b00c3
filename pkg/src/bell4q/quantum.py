"""Exact state-vector algebra for four qubits.

Conventions, fixed everywhere in this package:

* A pure state is a vector of 16 complex amplitudes.  The amplitude at
  index ``i*8 + j*4 + k*2 + l`` belongs to the basis ket ``|ijkl>``, so
  party A occupies the most significant bit of the index and party D the
  least significant.  Equivalently, party ``p`` (0=A, 1=B, 2=C, 3=D)
  lives at bit ``3 - p``.
* Single-qubit observables are unit Bloch vectors ``v``, realized as
  ``v . sigma`` with ``sigma_y = [[0, -i], [i, 0]]`` (so
  ``sigma_y|0> = i|1>``).
* Expectation values of Hermitian observables must come out real; an
  imaginary residue above 1e-12 indicates a bug and raises instead of
  being silently discarded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

N_QUBITS = 4
DIM = 16

# Tolerance for identities that should hold to rounding error.
ATOL_EXACT = 1e-12
# Looser tolerance for user-supplied unit vectors.
ATOL_UNIT = 1e-9

PAULI_LABELS = "IXYZ"

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


class NormalizationError(ValueError):
    """A vector or parameter set that must have unit norm does not."""


class ConsistencyError(RuntimeError):
    """An internal identity (realness, probability sum, cross-check) failed."""


def ket_index(i: int, j: int, k: int, l: int) -> int:
    """Amplitude index of the basis ket |ijkl> (party A first)."""
    for bit in (i, j, k, l):
        if bit not in (0, 1):
            raise ValueError(f"basis labels must be 0 or 1, got {(i, j, k, l)}")
    return i * 8 + j * 4 + k * 2 + l


@dataclass(frozen=True, eq=False)
class StateVector:
    """Four-qubit pure state: 16 complex amplitudes of unit norm."""

    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (DIM,):
            raise ValueError(f"expected {DIM} amplitudes, got shape {amps.shape}")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > ATOL_EXACT:
            raise NormalizationError(
                f"state norm^2 = {norm_sq!r} is not 1 within {ATOL_EXACT}"
            )
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def normalized(cls, amps) -> "StateVector":
        """Build a state from arbitrary amplitudes, rescaling to unit norm."""
        amps = np.asarray(amps, dtype=complex)
        if amps.shape != (DIM,):
            raise ValueError(f"expected {DIM} amplitudes, got shape {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if norm < 1e-15:
            raise NormalizationError("cannot normalize a zero vector")
        return cls(amps / norm)

    @classmethod
    def basis(cls, i: int, j: int, k: int, l: int) -> "StateVector":
        """The computational basis ket |ijkl>."""
        amps = np.zeros(DIM, dtype=complex)
        amps[ket_index(i, j, k, l)] = 1.0
        return cls(amps)

    def fidelity(self, other: "StateVector") -> float:
        """|<self|other>|^2."""
        return float(abs(np.vdot(self.amps, other.amps)) ** 2)


@dataclass(frozen=True)
class BlochVector:
    """Real three-vector labeling the observable v . sigma."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, arr) -> "BlochVector":
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (3,):
            raise ValueError(f"expected 3 components, got shape {arr.shape}")
        return cls(float(arr[0]), float(arr[1]), float(arr[2]))

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))

    def unit(self) -> "BlochVector":
        """Normalized copy; raises on (near-)zero input."""
        n = self.norm
        if n < 1e-15:
            raise NormalizationError("cannot normalize a zero Bloch vector")
        return BlochVector(self.x / n, self.y / n, self.z / n)


def observable_from_bloch(v) -> np.ndarray:
    """2x2 Hermitian matrix v . sigma for a unit Bloch vector v."""
    if isinstance(v, BlochVector):
        v = v.as_array()
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > ATOL_UNIT:
        raise NormalizationError(f"Bloch vector norm {norm!r} is not 1 within {ATOL_UNIT}")
    x, y, z = v
    return np.array([[z, x - 1j * y], [x + 1j * y, -z]], dtype=complex)


def apply_single_qubit(amps: np.ndarray, party: int, matrix: np.ndarray) -> np.ndarray:
    """Apply a 2x2 matrix to one party of a 16-amplitude vector.

    Works directly on amplitude pairs that differ in the party's bit; no
    16x16 matrix is built.
    """
    if party not in range(N_QUBITS):
        raise ValueError(f"party must be 0..3, got {party}")
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {matrix.shape}")
    out = np.empty(DIM, dtype=complex)
    mask = 1 << (3 - party)
    idx = np.arange(DIM)
    lo = idx[(idx & mask) == 0]
    hi = lo | mask
    out[lo] = matrix[0, 0] * amps[lo] + matrix[0, 1] * amps[hi]
    out[hi] = matrix[1, 0] * amps[lo] + matrix[1, 1] * amps[hi]
    return out


def apply_pauli_string(string: str, state: StateVector) -> StateVector:
    """Apply a four-letter Pauli string (party A first) to a state.

    Uses sign/phase bookkeeping on amplitude indices; the result is exact
    because X permutes, Z negates, and Y multiplies by +/-i.
    """
    if len(string) != N_QUBITS:
        raise ValueError(f"Pauli string must have 4 letters, got {string!r}")
    amps = np.array(state.amps, dtype=complex)
    idx = np.arange(DIM)
    for party, label in enumerate(string):
        if label == "I":
            continue
        mask = 1 << (3 - party)
        bit_set = (idx & mask) != 0
        if label == "X":
            amps = amps[idx ^ mask]
        elif label == "Y":
            # New |1> component picks up +i from sigma_y|0> = i|1>,
            # new |0> component picks up -i from sigma_y|1> = -i|0>.
            amps = np.where(bit_set, 1j, -1j) * amps[idx ^ mask]
        elif label == "Z":
            amps = np.where(bit_set, -amps, amps)
        else:
            raise ValueError(f"unknown Pauli label {label!r} in {string!r}")
    return StateVector(amps)


def expectation(state: StateVector, observables) -> float:
    """<state| O_A x O_B x O_C x O_D |state> for four Hermitian 2x2 matrices."""
    observables = list(observables)
    if len(observables) != N_QUBITS:
        raise ValueError(f"expected 4 observables, got {len(observables)}")
    work = np.array(state.amps, dtype=complex)
    for party, obs in enumerate(observables):
        obs = np.asarray(obs, dtype=complex)
        if obs.shape != (2, 2):
            raise ValueError(f"observable for party {party} must be 2x2")
        if not np.allclose(obs, obs.conj().T, atol=ATOL_EXACT):
            raise ValueError(f"observable for party {party} is not Hermitian")
        work = apply_single_qubit(work, party, obs)
    value = complex(np.vdot(state.amps, work))
    if abs(value.imag) > ATOL_EXACT:
        raise ConsistencyError(
            f"expectation of a Hermitian product has imaginary part {value.imag!r}"
        )
    return float(value.real)
