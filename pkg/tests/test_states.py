"""State constructors: exact amplitude tables and parameter validation."""

import numpy as np
import pytest

from bell4q.quantum import NormalizationError, StateVector, ket_index
from bell4q.states import NAMED_STATE_TAGS, GabcdParams, g_abcd, named_state

S = 1.0 / np.sqrt(2.0)
Q = 1.0 / (2.0 * np.sqrt(2.0))


def amps_from(terms):
    out = np.zeros(16, dtype=complex)
    for coeff, bits in terms:
        out[ket_index(*bits)] = coeff
    return out


def test_gabcd_params_validation():
    GabcdParams(0.5, 0.5, 0.5, 0.5)
    with pytest.raises(NormalizationError):
        GabcdParams(1.0, 1.0, 0.0, 0.0)
    with pytest.raises((TypeError, ValueError)):
        GabcdParams(1.0j, 0.0, 0.0, 0.0)


def test_gabcd_params_normalized_classmethod():
    p = GabcdParams.normalized(3.0, 4.0, 0.0, 0.0)
    assert abs(p.a - 0.6) < 1e-15 and abs(p.b - 0.8) < 1e-15
    with pytest.raises(NormalizationError):
        GabcdParams.normalized(0.0, 0.0, 0.0, 0.0)


def test_g_abcd_amplitude_layout():
    p = GabcdParams.normalized(0.1, 0.2, 0.3, 0.4)
    a, b, c, d = p.as_tuple()
    state = g_abcd(p)
    expected = amps_from([
        ((a + d) / 2, (0, 0, 0, 0)), ((a + d) / 2, (1, 1, 1, 1)),
        ((a - d) / 2, (0, 0, 1, 1)), ((a - d) / 2, (1, 1, 0, 0)),
        ((b + c) / 2, (0, 1, 0, 1)), ((b + c) / 2, (1, 0, 1, 0)),
        ((b - c) / 2, (0, 1, 1, 0)), ((b - c) / 2, (1, 0, 0, 1)),
    ])
    assert np.array_equal(state.amps, expected)


def test_g_abcd_swapping_a_d_flips_one_group():
    p1 = GabcdParams.normalized(0.3, 0.1, 0.2, 0.8)
    p2 = GabcdParams(p1.d, p1.b, p1.c, p1.a)
    s1, s2 = g_abcd(p1).amps, g_abcd(p2).amps
    flip_group = [ket_index(0, 0, 1, 1), ket_index(1, 1, 0, 0)]
    for i in range(16):
        if i in flip_group:
            assert s2[i] == -s1[i]
        else:
            assert s2[i] == s1[i]


def test_all_named_states_unit_norm():
    for tag in NAMED_STATE_TAGS:
        state = named_state(tag)
        assert isinstance(state, StateVector)
        assert abs(np.vdot(state.amps, state.amps).real - 1.0) < 1e-12


def test_gm_equals_family_member_exactly():
    assert np.array_equal(named_state("gm").amps, g_abcd(GabcdParams(S, S, 0.0, 0.0)).amps)
    # eight equal amplitudes on the even-parity kets
    gm = named_state("gm").amps
    even = [i for i in range(16) if bin(i).count("1") % 2 == 0]
    assert np.allclose(gm[even], Q, atol=1e-15)
    odd = [i for i in range(16) if bin(i).count("1") % 2 == 1]
    assert np.all(gm[odd] == 0)


def test_ghz_amplitudes():
    expected = amps_from([(S, (0, 0, 0, 0)), (S, (1, 1, 1, 1))])
    assert np.max(np.abs(named_state("ghz").amps - expected)) < 1e-15


def test_two_epr_amplitudes():
    expected = amps_from([
        (0.5, (0, 0, 0, 0)), (0.5, (0, 0, 1, 1)),
        (0.5, (1, 1, 0, 0)), (0.5, (1, 1, 1, 1)),
    ])
    assert np.max(np.abs(named_state("two-epr").amps - expected)) < 1e-15


def test_cluster_amplitudes():
    expected = amps_from([
        (0.5, (0, 0, 0, 0)), (0.5, (0, 0, 1, 1)),
        (0.5, (1, 1, 0, 0)), (-0.5, (1, 1, 1, 1)),
    ])
    assert np.array_equal(named_state("cluster").amps, expected)


def test_chi_amplitudes():
    expected = amps_from([
        (Q, (0, 0, 0, 0)), (Q, (1, 1, 1, 1)), (-Q, (0, 0, 1, 1)), (Q, (1, 1, 0, 0)),
        (-Q, (0, 1, 0, 1)), (Q, (1, 0, 1, 0)), (Q, (0, 1, 1, 0)), (Q, (1, 0, 0, 1)),
    ])
    assert np.array_equal(named_state("chi").amps, expected)


def test_hs_amplitudes():
    w = np.exp(2j * np.pi / 3)
    r = 1.0 / np.sqrt(6.0)
    expected = amps_from([
        (r, (0, 0, 1, 1)), (r, (1, 1, 0, 0)),
        (r * w, (0, 1, 0, 1)), (r * w, (1, 0, 1, 0)),
        (r * w**2, (0, 1, 1, 0)), (r * w**2, (1, 0, 0, 1)),
    ])
    assert np.max(np.abs(named_state("hs").amps - expected)) < 1e-15
    assert np.allclose(np.abs(expected[np.abs(expected) > 0]), r)


def test_brown_amplitudes():
    # |1011> carries a minus sign; see states.py for why.
    expected = amps_from([
        (0.5, (0, 0, 0, 0)), (0.5, (1, 1, 0, 1)),
        (Q, (0, 0, 1, 1)), (Q, (0, 1, 1, 0)), (-Q, (1, 0, 1, 1)), (-Q, (1, 1, 1, 0)),
    ])
    assert np.array_equal(named_state("brown").amps, expected)


def test_w_amplitudes():
    expected = amps_from([
        (0.5, (0, 0, 0, 1)), (0.5, (0, 0, 1, 0)),
        (0.5, (0, 1, 0, 0)), (0.5, (1, 0, 0, 0)),
    ])
    assert np.array_equal(named_state("w").amps, expected)


def test_unknown_tag_rejected():
    with pytest.raises(ValueError):
        named_state("bogus")
