"""Born-rule shot sampling of correlator terms and finite-statistics estimates.

Outcome cells: each term measurement has 16 outcomes indexed like basis
kets, bit 3-p of the cell holding party p's outcome with 0 meaning +1 and
1 meaning -1.  The outcome product's sign is the cell's bit parity.

Probabilities come from rotating each party into the eigenbasis of its
Bloch observable and squaring amplitudes.  The cumulative distribution is
computed once, in this module, and handed to the sampling kernel, so
counts are bit-identical whichever backend is active.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel, rng
from .bell import BellExpression, MeasurementSettings
from .quantum import (
    ATOL_UNIT,
    DIM,
    BlochVector,
    ConsistencyError,
    StateVector,
    apply_single_qubit,
)

#: Outcome product (+1/-1) for each of the 16 cells (bit parity).
CELL_SIGNS = np.array([1.0 if bin(i).count("1") % 2 == 0 else -1.0 for i in range(DIM)])


def eigenbasis_matrix(v) -> np.ndarray:
    """2x2 unitary whose columns are the +1 and -1 eigenvectors of v . sigma.

    Built from the branch with |1 + z| away from zero, so it is stable for
    every direction including the poles.
    """
    if isinstance(v, BlochVector):
        v = v.as_array()
    v = np.asarray(v, dtype=float)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > ATOL_UNIT:
        raise ValueError(f"Bloch vector norm {norm!r} is not 1 within {ATOL_UNIT}")
    x, y, z = (float(c) for c in v)
    if z >= 0.0:
        scale = 1.0 / np.sqrt(2.0 * (1.0 + z))
        plus = np.array([1.0 + z, x + 1j * y]) * scale
        minus = np.array([-(x - 1j * y), 1.0 + z]) * scale
        return np.column_stack([plus, minus])
    # For z < 0 use the -v basis; its eigenvectors swap roles for v.
    flipped = eigenbasis_matrix(-v)
    return flipped[:, ::-1].copy()


def outcome_probabilities(state: StateVector, vectors) -> np.ndarray:
    """16 Born probabilities for measuring four Bloch observables at once.

    vectors: one Bloch direction per party, A first.
    """
    vectors = list(vectors)
    if len(vectors) != 4:
        raise ValueError(f"expected 4 measurement directions, got {len(vectors)}")
    work = np.array(state.amps, dtype=complex)
    for party, v in enumerate(vectors):
        basis = eigenbasis_matrix(v)
        work = apply_single_qubit(work, party, basis.conj().T)
    probs = np.abs(work) ** 2
    total = float(probs.sum())
    if abs(total - 1.0) > 1e-9:
        raise ConsistencyError(f"outcome probabilities sum to {total!r}, not 1")
    return probs


def sample_term(state: StateVector, vectors, shots: int, seed: int) -> np.ndarray:
    """Counts over the 16 cells for one term; consumes one stream output per shot."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    cdf = np.cumsum(outcome_probabilities(state, vectors))
    return accel.sample_counts(cdf, shots, seed)


@dataclass(frozen=True)
class ShotRecord:
    """Raw sampling output: one row of 16 cell counts per expression term."""

    counts: np.ndarray
    shots_per_term: int
    seed: int

    def __post_init__(self) -> None:
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.ndim != 2 or counts.shape[1] != DIM:
            raise ValueError(f"counts must be (T, 16), got shape {counts.shape}")
        if (counts < 0).any():
            raise ValueError("counts must be nonnegative")
        sums = counts.sum(axis=1)
        if not (sums == self.shots_per_term).all():
            raise ValueError(
                f"every term must have {self.shots_per_term} shots, got row sums {sums.tolist()}"
            )
        counts = counts.copy()
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)


def sample_bell(
    state: StateVector,
    expr: BellExpression,
    settings: MeasurementSettings,
    shots_per_term: int,
    seed: int,
) -> ShotRecord:
    """Sample every term of an expression, term t on substream t of the seed."""
    blochs = settings.as_array()
    slots = expr.slots_array()
    rows = []
    for t in range(expr.n_terms):
        vectors = [blochs[slots[t, p]] for p in range(4)]
        rows.append(sample_term(state, vectors, shots_per_term, rng.substream_seed(seed, t)))
    return ShotRecord(counts=np.vstack(rows), shots_per_term=shots_per_term, seed=seed)


@dataclass(frozen=True)
class Estimate:
    """Finite-statistics estimate of an expression value."""

    value: float
    stderr: float
    shots_per_term: int


def estimate_from_record(record: ShotRecord, expr: BellExpression) -> Estimate:
    """Combine per-term outcome-product means into a value and standard error.

    Per term: mean m = sum(counts * sign) / n and sample variance
    n (1 - m^2) / (n - 1), exact for +/-1 outcomes.  Term errors combine
    in quadrature with the squared coefficients.
    """
    n = record.shots_per_term
    if n < 2:
        raise ValueError(f"need at least 2 shots per term for a standard error, got {n}")
    coeffs = expr.coeffs_array()
    if record.counts.shape[0] != expr.n_terms:
        raise ValueError(
            f"record has {record.counts.shape[0]} terms, expression has {expr.n_terms}"
        )
    value = 0.0
    var_sum = 0.0
    for t in range(expr.n_terms):
        mean = float(record.counts[t] @ CELL_SIGNS) / n
        value += coeffs[t] * mean
        var_sum += coeffs[t] ** 2 * (1.0 - mean * mean) / (n - 1)
    return Estimate(value=float(value), stderr=float(np.sqrt(var_sum)), shots_per_term=n)


def estimate_bell(
    state: StateVector,
    expr: BellExpression,
    settings: MeasurementSettings,
    shots_per_term: int,
    seed: int,
) -> Estimate:
    """sample_bell followed by estimate_from_record."""
    return estimate_from_record(
        sample_bell(state, expr, settings, shots_per_term, seed), expr
    )
