"""Four-qubit entanglement measures and the tangle/violation relation."""

from __future__ import annotations

import cmath

import numpy as np

from .quantum import StateVector, ket_index
from .states import GabcdParams

# Index pairs of the degree-2 invariant: (a0 a15 - a7 a8) + (a3 a12 - a4 a11)
# - (a2 a13 - a5 a10) - (a1 a14 - a6 a9), indices read as |ijkl| bits.
_TANGLE_PAIRS = (
    (+1, (0, 0, 0, 0), (1, 1, 1, 1), (0, 1, 1, 1), (1, 0, 0, 0)),
    (+1, (0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 0, 0), (1, 0, 1, 1)),
    (-1, (0, 0, 1, 0), (1, 1, 0, 1), (0, 1, 0, 1), (1, 0, 1, 0)),
    (-1, (0, 0, 0, 1), (1, 1, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1)),
)


def four_tangle(state: StateVector) -> float:
    """Modulus-squared quadratic invariant, scaled to [0, 1].

    4 |(a0 a15 - a7 a8 + a3 a12 - a4 a11 - a2 a13 + a5 a10 - a1 a14 + a6 a9)^2|
    with a_i the amplitudes.  Equal to 1 on every real member of the
    g_abcd family and 0 on product states.
    """
    a = state.amps
    bracket = 0.0 + 0.0j
    for sign, first, second, third, fourth in _TANGLE_PAIRS:
        bracket += sign * (
            a[ket_index(*first)] * a[ket_index(*second)]
            - a[ket_index(*third)] * a[ket_index(*fourth)]
        )
    return float(4.0 * abs(bracket**2))


def _radicand_parts(params: GabcdParams) -> tuple[float, float]:
    a, b, c, d = params.as_tuple()
    t1 = (a * a - b * b) * (d * d - c * c)
    t2 = (a * a - d * d) * (b * b - c * c)
    return t1, t2


def _tau48_radicand(t1: float, t2: float) -> float:
    """(t1 - t2)^2 + t1 t2, which is t1^2 - t1 t2 + t2^2 >= 0 for real t1, t2."""
    return (t1 - t2) ** 2 + t1 * t2


def _tau48_from_radicand(radicand: float) -> float:
    """4 |sqrt(radicand)| with the principal complex square root.

    A negative radicand cannot arise from real parameters, but the
    complex branch keeps the formula total; its behavior is pinned by a
    regression test.
    """
    return float(4.0 * abs(cmath.sqrt(radicand)))


def genuine_four_tangle(params: GabcdParams) -> float:
    """Degree-8 invariant of a family member: 4 |sqrt((t1 - t2)^2 + t1 t2)|

    with t1 = (a^2 - b^2)(d^2 - c^2) and t2 = (a^2 - d^2)(b^2 - c^2).
    At (a, b, 0, 0) this reduces to 4 a^2 b^2.
    """
    t1, t2 = _radicand_parts(params)
    return _tau48_from_radicand(_tau48_radicand(t1, t2))


def bell_value_from_tangle(tau: float) -> float:
    """Correlator value 2 (1 + sqrt(tau)) attained by the tangle-tau family member.

    tau must lie in [0, 1]; anything else has no realizing state.
    """
    tau = float(tau)
    if not np.isfinite(tau) or tau < 0.0 or tau > 1.0:
        raise ValueError(f"tangle must lie in [0, 1], got {tau!r}")
    return 2.0 * (1.0 + np.sqrt(tau))
