# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the correlation and coherence quantifiers."""

import numpy as np
import pytest

from pyenm.correlations import (XState, classical_correlations, closed_form_trajectories,
                                correlation_limits, discord_brute_force, geometric_discord,
                                l1_coherence, mutual_information, negativity, xstate_discord)
from pyenm.covariant import CovariantRates, affine_map, choi_closed_form, covariant_generator, limit_time
from pyenm.errors import MarginalNotMixed, NotXState
from pyenm.lindblad import choi_of_map, propagate
from pyenm.qstate import (bell_state, bloch_to_density, product_state, pure_state, random_density_matrix,
                          random_x_state)

LAW_GRID = np.geomspace(1e-3, 5.0, 50)


def test_bell_state_quantifiers():
    bell = bell_state()
    assert negativity(bell) == pytest.approx(0.5)
    assert mutual_information(bell) == pytest.approx(2.0)
    assert xstate_discord(bell) == pytest.approx(1.0, abs=1e-9)
    assert geometric_discord(bell) == pytest.approx(0.5)


def test_product_state_quantifiers():
    rho = product_state(bloch_to_density([0.3, 0.0, 0.2]), bloch_to_density([0.0, 0.5, -0.1]))
    assert negativity(rho) == pytest.approx(0.0, abs=1e-12)
    assert mutual_information(rho) == pytest.approx(0.0, abs=1e-9)
    assert geometric_discord(rho) == pytest.approx(0.0, abs=1e-12)
    assert discord_brute_force(rho, 40, 40) == pytest.approx(0.0, abs=1e-8)


def test_l1_coherence():
    assert l1_coherence(pure_state(np.pi / 4)) == pytest.approx(1.0)
    assert l1_coherence(bloch_to_density([0.3, 0.4, 0.5])) == pytest.approx(0.5)
    assert l1_coherence(np.eye(2) / 2) == 0.0


def test_negativity_law_on_closed_form():
    rates = CovariantRates(a=1.0, x=0.0)
    errors = [negativity(choi_closed_form(rates, t)) - 0.5 * np.exp(-2.0 * t) for t in LAW_GRID]
    assert np.max(np.abs(errors)) < 1e-9


def test_negativity_law_on_propagated_choi_state():
    pmap = propagate(covariant_generator(CovariantRates(a=1.0, x=0.0)), grid=LAW_GRID)
    errors = [negativity(choi_of_map(pmap.at(t))) - 0.5 * np.exp(-2.0 * t) for t in LAW_GRID]
    assert np.max(np.abs(errors)) < 1e-6


@pytest.mark.parametrize("x", [0.3, -0.6])
def test_negativity_follows_longitudinal_factor(x):
    rates = CovariantRates(a=1.0, x=x)
    for t in (0.2, 1.0, 3.0):
        assert negativity(choi_closed_form(rates, t)) == pytest.approx(0.5 * np.exp(-2.0 * t), abs=1e-9)


def test_x_state_parsing():
    with pytest.raises(NotXState):
        XState.from_matrix(random_density_matrix(np.random.default_rng(0)))
    xstate = XState.from_matrix(bell_state())
    assert xstate.marginal_a == pytest.approx(0.5)
    assert np.allclose(xstate.to_matrix(), bell_state().rho)


def test_x_state_discord_falls_back_to_measurement_search():
    rho = np.diag([0.5, 0.2, 0.2, 0.1]).astype(complex)
    rho[0, 3] = rho[3, 0] = 0.2
    result = xstate_discord(rho, details=True)
    assert result.method == 'brute_force'
    assert result.witness is None
    assert result.discord == pytest.approx(discord_brute_force(rho), abs=1e-6)


def test_marginal_not_mixed_is_a_value_error():
    assert issubclass(MarginalNotMixed, ValueError)


def test_x_state_discord_matches_measurement_search():
    rng = np.random.default_rng(2024)
    for _ in range(5):
        rho = random_x_state(rng, mixed_marginal=True).rho
        result = xstate_discord(rho, details=True)
        assert result.method == 'x_state'
        assert result.witness.k + result.witness.l == pytest.approx(1.0)
        assert result.discord == pytest.approx(discord_brute_force(rho), abs=1e-6)


def test_classical_correlations_of_bell_state():
    assert classical_correlations(bell_state(), 50, 50) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("ratio,information,discord", [
    (0.0, 0.5, 0.311278),
    (0.5, 0.405639, 0.265806),
])
def test_correlation_limits(ratio, information, discord):
    limits = correlation_limits(ratio)
    assert limits.negativity == 0.0
    assert limits.mutual_information == pytest.approx(information, abs=1e-6)
    assert limits.discord == pytest.approx(discord, abs=1e-6)
    assert limits.coherence == pytest.approx(0.5 * np.sqrt(1.0 - ratio ** 2))


@pytest.mark.parametrize("ratio", [0.0, 0.3, 0.7])
def test_mutual_information_limit_of_choi_state(ratio):
    rates = CovariantRates(a=1.0, x=ratio)
    choi = choi_closed_form(rates, limit_time(rates))
    assert mutual_information(choi) == pytest.approx(correlation_limits(ratio).mutual_information, abs=1e-4)
    assert negativity(choi) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("ratio", [0.0, 0.5])
def test_discord_limit_of_choi_state(ratio):
    rates = CovariantRates(a=1.0, x=ratio)
    choi = choi_closed_form(rates, limit_time(rates))
    assert xstate_discord(choi) == pytest.approx(correlation_limits(ratio).discord, abs=1e-4)


def test_correlation_limits_range():
    with pytest.raises(ValueError):
        correlation_limits(1.5)


def test_closed_form_trajectories():
    rates = CovariantRates(a=1.0, x=0.0)
    rows = closed_form_trajectories(rates, [0.0, 0.5, 1.0], nb_of_threads=2)
    assert [row.t for row in rows] == [0.0, 0.5, 1.0]
    first = rows[0]
    assert (first.E, first.I, first.Q, first.D, first.C) == pytest.approx((0.5, 2.0, 1.0, 0.5, 1.0), abs=1e-9)
    assert rows[1].E == pytest.approx(0.183940, abs=1e-6)
    assert rows[2].C == pytest.approx(0.567668, abs=1e-6)
    assert rows[2].C == pytest.approx(affine_map(rates, 1.0).M[0, 0])


def test_closed_form_trajectories_are_thread_independent():
    rates = CovariantRates(a=1.0, x=0.4)
    grid = np.linspace(0.0, 3.0, 12)
    assert closed_form_trajectories(rates, grid, nb_of_threads=1) == \
        closed_form_trajectories(rates, grid, nb_of_threads=4)
