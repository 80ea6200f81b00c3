"""Seesaw optimizer: gradient correctness, monotonicity, determinism, optima."""

import numpy as np
import pytest

import oracles
from bell4q.bell import (
    BellExpression,
    MeasurementSettings,
    lhv_bound,
    quantum_value,
    reference_expression,
    reference_settings,
)
from bell4q.quantum import StateVector
from bell4q.seesaw import SeesawConfig, SeesawResult, effective_bloch, initial_settings, seesaw
from bell4q.states import named_state


def test_config_validation():
    SeesawConfig()
    with pytest.raises(ValueError):
        SeesawConfig(restarts=0)
    with pytest.raises(ValueError):
        SeesawConfig(max_iterations=0)
    with pytest.raises(ValueError):
        SeesawConfig(tolerance=0.0)


def test_initial_settings_unit_and_per_restart_streams():
    init0 = initial_settings(0, 0)
    init1 = initial_settings(0, 1)
    assert init0.shape == (8, 3)
    assert np.max(np.abs(np.linalg.norm(init0, axis=1) - 1.0)) < 1e-12
    assert not np.array_equal(init0, init1)
    assert np.array_equal(init0, initial_settings(0, 0))


def test_effective_bloch_single_term_on_basis_state():
    expr = BellExpression([(1.0, (1, 1, 1, 1))])
    settings = reference_settings()
    state = StateVector.basis(0, 0, 0, 0)
    for party in range(4):
        m = effective_bloch(state, expr, settings, party, 1)
        # other parties measure sigma_z on |0>: coefficient is +1, so the
        # slot's value is <sigma_(x,y,z)> on |0> = (0, 0, 1)
        assert np.max(np.abs(m - np.array([0.0, 0.0, 1.0]))) < 1e-12


def test_effective_bloch_unused_slot_is_zero():
    expr = BellExpression([(1.0, (1, 1, 1, 1))])
    state = named_state("gm")
    m = effective_bloch(state, expr, reference_settings(), 0, 2)  # a2 unused
    assert np.array_equal(m, np.zeros(3))


def test_effective_bloch_is_linear_coefficient_of_value():
    rng = np.random.default_rng(30)
    expr = reference_expression()
    for _ in range(20):
        state = StateVector(oracles.random_state_amps(rng))
        arr = oracles.random_settings_array(rng)
        settings = MeasurementSettings.from_array(arr)
        party = int(rng.integers(0, 4))
        choice = int(rng.integers(1, 3))
        slot = 2 * party + choice - 1
        m = effective_bloch(state, expr, settings, party, choice)
        # value(v) = m . v + c, with c the slot-independent terms
        base = quantum_value(state, expr, settings)
        c = base - float(m @ arr[slot])
        for _ in range(5):
            v = oracles.random_unit3(rng)
            swapped = arr.copy()
            swapped[slot] = v
            value = quantum_value(state, expr, MeasurementSettings.from_array(swapped))
            assert abs(value - (float(m @ v) + c)) < 1e-10


def test_effective_bloch_stationary_at_global_optimum():
    state = named_state("gm")
    expr = reference_expression()
    settings = reference_settings()
    arr = settings.as_array()
    for party in range(4):
        for choice in (1, 2):
            m = effective_bloch(state, expr, settings, party, choice)
            v = arr[2 * party + choice - 1]
            # gradient is parallel to the current direction: cross product ~ 0
            assert np.linalg.norm(np.cross(m, v)) < 1e-9
            assert float(m @ v) > 0.0


def test_normalized_gradient_beats_random_directions():
    rng = np.random.default_rng(31)
    expr = reference_expression()
    state = StateVector(oracles.random_state_amps(rng))
    settings = MeasurementSettings.from_array(oracles.random_settings_array(rng))
    m = effective_bloch(state, expr, settings, 2, 1)
    best = float(m @ (m / np.linalg.norm(m)))
    candidates = rng.normal(size=(10_000, 3))
    candidates /= np.linalg.norm(candidates, axis=1, keepdims=True)
    assert np.max(candidates @ m) <= best + 1e-12


def test_seesaw_gm_reaches_algebraic_cap():
    result = seesaw(named_state("gm"), reference_expression(), SeesawConfig(restarts=20, seed=0))
    assert abs(result.best_value - 4.0) < 1e-6
    assert result.converged


def test_seesaw_traces_monotone():
    rng = np.random.default_rng(32)
    expr = reference_expression()
    for seed in range(5):
        state = StateVector(oracles.random_state_amps(rng))
        result = seesaw(state, expr, SeesawConfig(restarts=3, seed=seed))
        diffs = np.diff(result.value_trace)
        assert diffs.min() > -1e-12
        assert result.iterations_used == len(result.value_trace) - 1


def test_seesaw_feasibility_and_sign_handling():
    expr = reference_expression()
    for tag in ("w", "ghz", "chi"):
        state = named_state(tag)
        result = seesaw(state, expr, SeesawConfig(restarts=10, seed=3))
        assert result.best_value >= 0.0
        assert result.winning_sign in (-1, 1)
        direct = quantum_value(state, expr, result.best_settings)
        assert abs(direct - result.best_value) < 1e-12


def test_seesaw_w_state_beats_fixed_settings_value():
    result = seesaw(named_state("w"), reference_expression(), SeesawConfig(restarts=100, seed=0))
    assert result.best_value >= 2.5 - 1e-6


def test_seesaw_deterministic():
    state = named_state("chi")
    expr = reference_expression()
    config = SeesawConfig(restarts=5, seed=12345)
    r1 = seesaw(state, expr, config)
    r2 = seesaw(state, expr, config)
    assert isinstance(r1, SeesawResult)
    assert r1.best_value == r2.best_value
    assert np.array_equal(r1.value_trace, r2.value_trace)
    assert np.array_equal(r1.best_settings.as_array(), r2.best_settings.as_array())
    assert (r1.winning_sign, r1.restart_index) == (r2.winning_sign, r2.restart_index)


def test_seesaw_non_converged_flag():
    result = seesaw(
        named_state("gm"), reference_expression(),
        SeesawConfig(restarts=1, max_iterations=1, tolerance=1e-15, seed=0),
    )
    # one sweep from random settings cannot have stalled below tolerance
    assert not result.converged
    assert result.iterations_used == 1


def test_seesaw_product_states_capped_by_lhv_bound():
    rng = np.random.default_rng(33)
    expr = reference_expression()
    bound = lhv_bound(expr)
    for _ in range(50):
        state = StateVector(oracles.random_product_amps(rng))
        result = seesaw(state, expr, SeesawConfig(restarts=1, max_iterations=80, seed=7))
        assert result.best_value <= bound + 1e-6
