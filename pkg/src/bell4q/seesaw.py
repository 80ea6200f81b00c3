"""Seesaw maximization of a correlator expression over measurement settings.

The expression value is multilinear in the eight Bloch vectors, so with
seven held fixed the optimum of the eighth is the normalized coefficient
vector (the "effective Bloch" direction).  Sweeping all slots in order
(a1 .. d2) can only increase the value; restarts from random unit vectors
guard against poor local optima.

Both signs of the expression are maximized from every restart: if the
negated expression wins, the optimum of the original expression at those
settings is the negative value, and flipping party A's two vectors turns
it back into a positive value of the original expression.  The reported
best settings therefore always satisfy
quantum_value(state, expr, best_settings) == best_value >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import accel, rng
from .bell import BellExpression, MeasurementSettings
from .quantum import StateVector


@dataclass(frozen=True)
class SeesawConfig:
    """Optimization knobs; defaults are adequate for four-term expressions."""

    restarts: int = 20
    max_iterations: int = 200
    tolerance: float = 1e-12
    seed: int = 0

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not (self.tolerance > 0.0):
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")


@dataclass(frozen=True)
class SeesawResult:
    """Best restart's outcome.

    value_trace holds the winning run's objective after each sweep
    (entry 0 is the value at the initial random settings, of the sign
    variant that won).  ``winning_sign`` is -1 when the negated
    expression won; best_settings are already flipped so best_value is
    the plain expression's value there.
    """

    best_value: float
    best_settings: MeasurementSettings
    value_trace: np.ndarray
    iterations_used: int
    converged: bool
    winning_sign: int
    restart_index: int


def initial_settings(seed: int, restart: int) -> np.ndarray:
    """(8, 3) uniform random unit vectors for one restart.

    Restart substreams are independent: restart r draws from the child
    seed substream_seed(seed, r), four stream outputs per slot.
    """
    child = rng.substream_seed(seed, restart)
    return np.vstack([rng.unit_vector3(child, 4 * slot) for slot in range(8)])


def effective_bloch(
    state: StateVector,
    expr: BellExpression,
    settings: MeasurementSettings,
    party: int,
    choice: int,
) -> np.ndarray:
    """Linear coefficient m of one slot's Bloch vector v: value = m . v + const."""
    if party not in range(4):
        raise ValueError(f"party must be 0..3, got {party}")
    if choice not in (1, 2):
        raise ValueError(f"choice must be 1 or 2, got {choice}")
    return accel.effective_bloch(
        state.amps,
        settings.as_array(),
        expr.coeffs_array(),
        expr.slots_array(),
        2 * party + (choice - 1),
    )


def seesaw(state: StateVector, expr: BellExpression, config: SeesawConfig = SeesawConfig()) -> SeesawResult:
    """Maximize |expression value| over settings; see the module docstring."""
    amps = state.amps
    coeffs = expr.coeffs_array()
    slots = expr.slots_array()

    best_value = -np.inf
    best = None
    for restart in range(config.restarts):
        init = initial_settings(config.seed, restart)
        for sign in (1.0, -1.0):
            bloch, trace, converged = accel.seesaw_sweeps(
                amps, init, sign * coeffs, slots, config.max_iterations, config.tolerance
            )
            if trace[-1] > best_value:
                best_value = float(trace[-1])
                best = (sign, restart, bloch, trace, converged)

    sign, restart, bloch, trace, converged = best
    if sign < 0:
        # Negating both of A's observables negates every term.
        bloch = bloch.copy()
        bloch[0] *= -1.0
        bloch[1] *= -1.0
    trace = trace.copy()
    trace.setflags(write=False)
    return SeesawResult(
        best_value=best_value,
        best_settings=MeasurementSettings.from_array(bloch),
        value_trace=trace,
        iterations_used=len(trace) - 1,
        converged=converged,
        winning_sign=int(sign),
        restart_index=restart,
    )
