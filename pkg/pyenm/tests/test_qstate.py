# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the one- and two-qubit state algebra."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats

from pyenm.errors import BlochOutOfBall, NotAState
from pyenm.qstate import (PauliBasis, QubitState, TwoQubitState, bell_state, binary_entropy,
                          bloch_to_density, density_to_bloch, partial_trace, partial_transpose,
                          product_state, pure_state, random_bloch_vector, random_density_matrix,
                          random_x_state, trace_distance, trace_norm, von_neumann_entropy)

radii = floats(min_value=0.0, max_value=1.0)
polar = floats(min_value=0.0, max_value=np.pi)
azimuth = floats(min_value=0.0, max_value=2 * np.pi)


def _bloch(radius, theta, phi):
    return radius * np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


@settings(max_examples=200, deadline=None)
@given(radii, polar, azimuth)
def test_bloch_density_round_trip(radius, theta, phi):
    r = _bloch(radius, theta, phi)
    state = bloch_to_density(r)
    assert np.allclose(density_to_bloch(state.rho), r, atol=1e-12)
    assert np.isclose(np.trace(state.rho).real, 1.0)
    assert np.linalg.eigvalsh(state.rho)[0] >= -1e-12


def test_bloch_out_of_ball():
    with pytest.raises(BlochOutOfBall):
        bloch_to_density([1.0, 1.0, 0.0])
    # BlochOutOfBall is also a ValueError
    with pytest.raises(ValueError):
        QubitState.from_bloch([0.0, 0.0, 1.1])


@pytest.mark.parametrize("rho", [
    np.array([[1.0, 0.0], [0.0, 1.0]]),
    np.array([[1.2, 0.0], [0.0, -0.2]]),
    np.array([[0.5, 0.5], [0.0, 0.5]]),
    np.array([[0.5, np.nan], [np.nan, 0.5]]),
])
def test_invalid_density_matrix(rho):
    with pytest.raises(NotAState):
        QubitState.from_matrix(rho)


def test_pauli_basis_is_orthonormal():
    gram = np.einsum('iab,jba->ij', PauliBasis.G, PauliBasis.G)
    assert np.allclose(gram, np.eye(4))


def test_pure_state_plus():
    plus = pure_state(np.pi / 4)
    assert np.allclose(plus.bloch, [1.0, 0.0, 0.0])
    assert plus.purity == pytest.approx(1.0)


@pytest.mark.parametrize("diag,expected", [
    ([1.0, 0.0], 0.0),
    ([0.5, 0.5], 1.0),
    ([0.75, 0.25], 0.811278124459),
])
def test_von_neumann_entropy(diag, expected):
    assert von_neumann_entropy(np.diag(diag)) == pytest.approx(expected, abs=1e-10)


def test_von_neumann_entropy_rejects_negative_eigenvalue():
    with pytest.raises(NotAState):
        von_neumann_entropy(np.diag([1.1, -0.1]))


def test_binary_entropy_is_vectorized():
    values = binary_entropy([0.0, 0.5, 1.0])
    assert np.allclose(values, [0.0, 1.0, 0.0])
    assert binary_entropy(0.25) == pytest.approx(0.811278124459)


def test_bell_state_marginals():
    bell = bell_state()
    assert np.allclose(partial_trace(bell, 'A').rho, 0.5 * np.eye(2))
    assert np.allclose(partial_trace(bell, 'B').rho, 0.5 * np.eye(2))
    assert von_neumann_entropy(bell) == pytest.approx(0.0, abs=1e-9)


def test_partial_trace_of_product_state():
    rho_a = bloch_to_density([0.3, 0.0, 0.4])
    rho_b = bloch_to_density([0.0, -0.5, 0.1])
    rho_ab = product_state(rho_a, rho_b)
    assert np.allclose(partial_trace(rho_ab, 'B').rho, rho_a.rho)
    assert np.allclose(partial_trace(rho_ab, 'A').rho, rho_b.rho)


def test_partial_trace_unknown_subsystem():
    with pytest.raises(ValueError):
        partial_trace(bell_state(), 'C')


def test_partial_transpose_of_bell_state():
    rho_tb = partial_transpose(bell_state())
    eigenvalues = np.linalg.eigvalsh(rho_tb)
    assert np.allclose(eigenvalues, [-0.5, 0.5, 0.5, 0.5])
    assert trace_norm(rho_tb) == pytest.approx(2.0)


def test_partial_transpose_is_an_involution():
    rng = np.random.default_rng(3)
    for _ in range(20):
        rho = random_density_matrix(rng)
        assert np.allclose(partial_transpose(partial_transpose(rho)), rho)
        # T_A rho = (T_B rho)^T
        assert np.allclose(partial_transpose(rho, 'A'), partial_transpose(rho, 'B').T)


def test_trace_norm_and_distance():
    assert trace_norm(np.zeros((2, 2))) == 0.0
    assert trace_norm(np.diag([1.0, -2.0])) == pytest.approx(3.0)
    up = bloch_to_density([0, 0, 1])
    down = bloch_to_density([0, 0, -1])
    # no factor one half
    assert trace_distance(up, down) == pytest.approx(2.0)


def test_subadditivity_on_random_states():
    rng = np.random.default_rng(11)
    for _ in range(100):
        rho = random_density_matrix(rng)
        s_ab = von_neumann_entropy(rho)
        s_a = von_neumann_entropy(partial_trace(rho, 'B'))
        s_b = von_neumann_entropy(partial_trace(rho, 'A'))
        assert s_ab <= s_a + s_b + 1e-9


def test_random_states_are_valid():
    rng = np.random.default_rng(5)
    for _ in range(50):
        assert np.linalg.norm(random_bloch_vector(rng)) <= 1.0
        assert np.linalg.norm(random_bloch_vector(rng, pure=True)) == pytest.approx(1.0)
        TwoQubitState.from_matrix(random_density_matrix(rng, rank=2))
        TwoQubitState.from_matrix(random_x_state(rng).rho)


def test_random_x_state_with_mixed_marginal():
    rng = np.random.default_rng(8)
    for _ in range(20):
        state = random_x_state(rng, mixed_marginal=True)
        assert np.allclose(partial_trace(state, 'B').rho, 0.5 * np.eye(2))


def test_random_generators_are_seed_deterministic():
    first = random_density_matrix(np.random.default_rng(42))
    second = random_density_matrix(np.random.default_rng(42))
    assert np.array_equal(first, second)
