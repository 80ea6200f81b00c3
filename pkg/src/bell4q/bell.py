"""Correlator expressions over four parties, their quantum values and LHV bounds.

An expression is a signed sum of full correlators; each term picks one of
two measurement settings per party.  Settings are indexed by *slot*:
slot = 2*party + (choice - 1), ordered (a1, a2, b1, b2, c1, c2, d1, d2).

The reference expression used throughout is

    E(1,1,1,2) - E(1,2,2,2) - E(2,2,1,1) - E(2,1,2,1)

whose deterministic (LHV) bound is 2 while its algebraic bound is 4.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel
from .quantum import (
    ATOL_EXACT,
    DIM,
    BlochVector,
    ConsistencyError,
    StateVector,
    apply_pauli_string,
    observable_from_bloch,
)

N_SLOTS = 8
SLOT_NAMES = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")

#: Pauli strings fixing the eight-term even-parity stabilizer state, with
#: their expected eigenvalue sign.
STABILIZER_TABLE = (
    ("IIII", +1),
    ("XXXX", +1),
    ("YYYY", +1),
    ("ZZZZ", +1),
    ("XXII", +1),
    ("XIXI", +1),
    ("IXXI", +1),
    ("XIIX", +1),
    ("IXIX", +1),
    ("IIXX", +1),
    ("YYZZ", -1),
    ("YZYZ", -1),
    ("ZYYZ", -1),
    ("YZZY", -1),
    ("ZYZY", -1),
    ("ZZYY", -1),
)


def slot_of(party: int, choice: int) -> int:
    """Slot index of a party's measurement choice (choice is 1 or 2)."""
    if party not in range(4):
        raise ValueError(f"party must be 0..3, got {party}")
    if choice not in (1, 2):
        raise ValueError(f"choice must be 1 or 2, got {choice}")
    return 2 * party + (choice - 1)


class BellExpression:
    """Signed sum of full four-party correlators.

    Terms with identical setting choices are merged (coefficients added,
    first-seen order kept); terms whose merged coefficient is zero are
    dropped.  At least one term must survive.
    """

    def __init__(self, terms) -> None:
        merged: dict[tuple[int, int, int, int], float] = {}
        for coeff, choices in terms:
            coeff = float(coeff)
            if not np.isfinite(coeff):
                raise ValueError(f"coefficient {coeff!r} is not finite")
            choices = tuple(int(c) for c in choices)
            if len(choices) != 4 or any(c not in (1, 2) for c in choices):
                raise ValueError(f"setting choices must be four values in {{1, 2}}, got {choices}")
            merged[choices] = merged.get(choices, 0.0) + coeff
        kept = tuple((c, ch) for ch, c in merged.items() if c != 0.0)
        if not kept:
            raise ValueError("expression has no nonzero terms after merging")
        self.terms = kept

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def algebraic_cap(self) -> float:
        """sum |coefficients|: the bound no measurement outcomes can beat."""
        return float(sum(abs(c) for c, _ in self.terms))

    def coeffs_array(self) -> np.ndarray:
        return np.array([c for c, _ in self.terms], dtype=np.float64)

    def slots_array(self) -> np.ndarray:
        """(T, 4) slot indices, one row per term, party order A..D."""
        return np.array(
            [[slot_of(p, ch[p]) for p in range(4)] for _, ch in self.terms], dtype=np.int64
        )

    def __repr__(self) -> str:
        parts = " ".join(f"{c:+g}*E{ch}" for c, ch in self.terms)
        return f"BellExpression({parts})"


def reference_expression() -> BellExpression:
    """The four-term expression with coefficients (+1, -1, -1, -1)."""
    return BellExpression(
        [
            (+1.0, (1, 1, 1, 2)),
            (-1.0, (1, 2, 2, 2)),
            (-1.0, (2, 2, 1, 1)),
            (-1.0, (2, 1, 2, 1)),
        ]
    )


@dataclass(frozen=True)
class MeasurementSettings:
    """Eight unit Bloch vectors, one per slot."""

    a1: BlochVector
    a2: BlochVector
    b1: BlochVector
    b2: BlochVector
    c1: BlochVector
    c2: BlochVector
    d1: BlochVector
    d2: BlochVector

    def __post_init__(self) -> None:
        for name in SLOT_NAMES:
            vec = getattr(self, name)
            if not isinstance(vec, BlochVector):
                vec = BlochVector.from_array(vec)
                object.__setattr__(self, name, vec)
            observable_from_bloch(vec)  # unit-norm check

    def slot(self, index: int) -> BlochVector:
        return getattr(self, SLOT_NAMES[index])

    def as_array(self) -> np.ndarray:
        """(8, 3) float array in slot order."""
        return np.vstack([self.slot(i).as_array() for i in range(N_SLOTS)])

    @classmethod
    def from_array(cls, arr) -> "MeasurementSettings":
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (N_SLOTS, 3):
            raise ValueError(f"expected shape (8, 3), got {arr.shape}")
        return cls(*(BlochVector.from_array(row) for row in arr))


def reference_settings() -> MeasurementSettings:
    """Directions z for (a1, b1, c1, d1, d2) and y for (a2, b2, c2).

    Under these the reference expression's terms become the Pauli strings
    ZZZZ, ZYYZ, YYZZ, YZYZ.
    """
    z = BlochVector(0.0, 0.0, 1.0)
    y = BlochVector(0.0, 1.0, 0.0)
    return MeasurementSettings(a1=z, a2=y, b1=z, b2=y, c1=z, c2=y, d1=z, d2=z)


@dataclass(frozen=True)
class DeterministicStrategy:
    """Pre-assigned outcome signs (+1/-1), one per slot."""

    signs: tuple[int, int, int, int, int, int, int, int]

    def __post_init__(self) -> None:
        signs = tuple(int(s) for s in self.signs)
        if len(signs) != N_SLOTS or any(s not in (-1, 1) for s in signs):
            raise ValueError(f"need 8 signs in {{-1, +1}}, got {self.signs!r}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_index(cls, index: int) -> "DeterministicStrategy":
        """Strategy number `index` in lexicographic order (+1 before -1, a1 first)."""
        if index not in range(256):
            raise ValueError(f"strategy index must be 0..255, got {index}")
        return cls(tuple(-1 if (index >> (7 - i)) & 1 else 1 for i in range(N_SLOTS)))

    def evaluate(self, expr: BellExpression) -> float:
        """Expression value when every correlator factorizes into these signs."""
        total = 0.0
        for coeff, choices in expr.terms:
            prod = 1
            for p in range(4):
                prod *= self.signs[slot_of(p, choices[p])]
            total += coeff * prod
        return total


def lhv_bound_with_witness(expr: BellExpression) -> tuple[float, DeterministicStrategy]:
    """Exhaustive maximum of |value| over all 256 deterministic strategies.

    Ties keep the first (lowest-index) maximizer, so the witness is
    deterministic.
    """
    best = -1.0
    witness = None
    for index in range(256):
        strategy = DeterministicStrategy.from_index(index)
        value = abs(strategy.evaluate(expr))
        if value > best:
            best = value
            witness = strategy
    return best, witness


def lhv_bound(expr: BellExpression) -> float:
    return lhv_bound_with_witness(expr)[0]


def generic_family_value(params) -> float:
    """Closed form 2 (a + b)^2: the reference expression's value on the
    family member g_abcd(params) at the reference settings, for any c, d."""
    return 2.0 * (params.a + params.b) ** 2


def quantum_value(state: StateVector, expr: BellExpression, settings: MeasurementSettings) -> float:
    """Expectation of the expression on a state at given settings."""
    raw = accel.bell_value(
        state.amps, settings.as_array(), expr.coeffs_array(), expr.slots_array()
    )
    if abs(raw.imag) > ATOL_EXACT:
        raise ConsistencyError(f"correlator value has imaginary part {raw.imag!r}")
    return float(raw.real)


@dataclass(frozen=True)
class StabilizerCheck:
    """Result of testing one Pauli string as a +/-1 eigenoperator."""

    string: str
    expected_sign: int
    sign: int | None
    residual: float


def verify_stabilizers(state: StateVector, atol: float = ATOL_EXACT) -> list[StabilizerCheck]:
    """Test the 16 table strings on a state: S|psi> = sign |psi>.

    sign is None when neither +1 nor -1 fits within atol; residual is the
    smaller of the two deviations.
    """
    checks = []
    for string, expected in STABILIZER_TABLE:
        image = apply_pauli_string(string, state).amps
        res_plus = float(np.linalg.norm(image - state.amps))
        res_minus = float(np.linalg.norm(image + state.amps))
        if res_plus <= atol:
            sign = 1
        elif res_minus <= atol:
            sign = -1
        else:
            sign = None
        checks.append(StabilizerCheck(string, expected, sign, min(res_plus, res_minus)))
    return checks


def bell_operator_matrix(expr: BellExpression, settings: MeasurementSettings) -> np.ndarray:
    """Dense 16x16 operator of the expression at fixed settings."""
    total = np.zeros((DIM, DIM), dtype=complex)
    for coeff, choices in expr.terms:
        factor = np.eye(1, dtype=complex)
        for p in range(4):
            obs = observable_from_bloch(settings.slot(slot_of(p, choices[p])))
            factor = np.kron(factor, obs)
        total += coeff * factor
    if not np.allclose(total, total.conj().T, atol=ATOL_EXACT):
        raise ConsistencyError("operator matrix is not Hermitian")
    return total


def spectral_cap(expr: BellExpression, settings: MeasurementSettings) -> float:
    """Largest |eigenvalue| of the operator at fixed settings.

    This is the quantum maximum over states for those settings; it can be
    below the algebraic cap.
    """
    return float(np.max(np.abs(np.linalg.eigvalsh(bell_operator_matrix(expr, settings)))))
