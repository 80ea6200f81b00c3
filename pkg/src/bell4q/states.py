"""Constructors for the four-qubit states under study.

The central object is the two-parameter-pair family ``g_abcd`` whose
amplitudes are symmetric/antisymmetric combinations of four real
parameters on the even-parity kets.  The named states are either members
of that family or fixed amplitude tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quantum import ATOL_EXACT, DIM, NormalizationError, StateVector, ket_index

#: Tags accepted by :func:`named_state`, in the order they are reported.
NAMED_STATE_TAGS = ("gm", "ghz", "two-epr", "cluster", "chi", "hs", "brown", "w")


@dataclass(frozen=True)
class GabcdParams:
    """Real parameters (a, b, c, d) of the g_abcd family, unit 4-vector."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, complex):
                raise ValueError(f"parameter {name} must be real, got {value!r}")
            object.__setattr__(self, name, float(value))
        norm_sq = self.a**2 + self.b**2 + self.c**2 + self.d**2
        if abs(norm_sq - 1.0) > ATOL_EXACT:
            raise NormalizationError(
                f"a^2+b^2+c^2+d^2 = {norm_sq!r} is not 1 within {ATOL_EXACT}"
            )

    @classmethod
    def normalized(cls, a: float, b: float, c: float, d: float) -> "GabcdParams":
        """Rescale arbitrary real (a, b, c, d) to the unit sphere."""
        vec = np.array([a, b, c, d], dtype=float)
        norm = float(np.linalg.norm(vec))
        if norm < 1e-15:
            raise NormalizationError("cannot normalize zero parameters")
        return cls(*(vec / norm))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


def g_abcd(params: GabcdParams) -> StateVector:
    """Family member with amplitudes (a+-d)/2 and (b+-c)/2 on even-parity kets.

    (a+d)/2 on |0000>, |1111>;  (a-d)/2 on |0011>, |1100>;
    (b+c)/2 on |0101>, |1010>;  (b-c)/2 on |0110>, |1001>.
    """
    a, b, c, d = params.as_tuple()
    amps = np.zeros(DIM, dtype=complex)
    amps[ket_index(0, 0, 0, 0)] = amps[ket_index(1, 1, 1, 1)] = (a + d) / 2
    amps[ket_index(0, 0, 1, 1)] = amps[ket_index(1, 1, 0, 0)] = (a - d) / 2
    amps[ket_index(0, 1, 0, 1)] = amps[ket_index(1, 0, 1, 0)] = (b + c) / 2
    amps[ket_index(0, 1, 1, 0)] = amps[ket_index(1, 0, 0, 1)] = (b - c) / 2
    return StateVector(amps)


def _from_terms(terms) -> StateVector:
    amps = np.zeros(DIM, dtype=complex)
    for coeff, bits in terms:
        amps[ket_index(*bits)] += coeff
    return StateVector(amps)


def named_state(tag: str) -> StateVector:
    """Fixed states addressable by short tag (see NAMED_STATE_TAGS)."""
    s = 1.0 / np.sqrt(2.0)
    q = 1.0 / (2.0 * np.sqrt(2.0))
    if tag == "gm":
        # Family member maximizing the correlator: equal weight 1/(2*sqrt(2))
        # on all eight even-parity kets.
        return g_abcd(GabcdParams(s, s, 0.0, 0.0))
    if tag == "ghz":
        return g_abcd(GabcdParams(s, 0.0, 0.0, s))
    if tag == "two-epr":
        # Singlet-free EPR pairs on AB and CD.
        return g_abcd(GabcdParams(1.0, 0.0, 0.0, 0.0))
    if tag == "cluster":
        return _from_terms(
            [
                (0.5, (0, 0, 0, 0)),
                (0.5, (0, 0, 1, 1)),
                (0.5, (1, 1, 0, 0)),
                (-0.5, (1, 1, 1, 1)),
            ]
        )
    if tag == "chi":
        return _from_terms(
            [
                (q, (0, 0, 0, 0)),
                (q, (1, 1, 1, 1)),
                (-q, (0, 0, 1, 1)),
                (q, (1, 1, 0, 0)),
                (-q, (0, 1, 0, 1)),
                (q, (1, 0, 1, 0)),
                (q, (0, 1, 1, 0)),
                (q, (1, 0, 0, 1)),
            ]
        )
    if tag == "hs":
        w = np.exp(2j * np.pi / 3.0)
        r = 1.0 / np.sqrt(6.0)
        return _from_terms(
            [
                (r, (0, 0, 1, 1)),
                (r, (1, 1, 0, 0)),
                (r * w, (0, 1, 0, 1)),
                (r * w, (1, 0, 1, 0)),
                (r * w**2, (0, 1, 1, 0)),
                (r * w**2, (1, 0, 0, 1)),
            ]
        )
    if tag == "brown":
        # The sign of |1011> must be negative: with it the correlator at the
        # reference settings is exactly +1/sqrt(2); flipping it to + makes
        # every term expectation vanish.
        return _from_terms(
            [
                (0.5, (0, 0, 0, 0)),
                (0.5, (1, 1, 0, 1)),
                (q, (0, 0, 1, 1)),
                (q, (0, 1, 1, 0)),
                (-q, (1, 0, 1, 1)),
                (-q, (1, 1, 1, 0)),
            ]
        )
    if tag == "w":
        return _from_terms(
            [
                (0.5, (0, 0, 0, 1)),
                (0.5, (0, 0, 1, 0)),
                (0.5, (0, 1, 0, 0)),
                (0.5, (1, 0, 0, 0)),
            ]
        )
    raise ValueError(f"unknown state tag {tag!r}; expected one of {NAMED_STATE_TAGS}")
