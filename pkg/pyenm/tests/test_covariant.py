# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the closed-form phase-covariant channels and of the optimal dephasing rate."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats

from pyenm.covariant import (OPTIMAL, CovariantRates, affine_map, asymptotic_image, channel_at,
                             channel_limit, choi_closed_form, closed_form_bloch, covariant_generator,
                             cptp_conditions, dephasing_map, first_cptp_violation, gamma_matrix,
                             integrals, limit_time, optimal_F, optimal_f)
from pyenm.errors import InfeasibleRates
from pyenm.lindblad import choi_min_eigenvalue, choi_of_map, propagate

LAW_GRID = np.geomspace(1e-3, 5.0, 50)


def test_gamma_matrix_is_hermitian():
    gamma = gamma_matrix(CovariantRates(a=1.0, x=0.4, f=-0.2), 1.0)
    assert np.allclose(gamma, gamma.conj().T)
    assert gamma[0, 1] == -0.4j


def test_invalid_dephasing_rate():
    with pytest.raises(ValueError):
        CovariantRates(f='maximal')


def test_lz_integral():
    assert integrals(CovariantRates(a=1.0, x=0.5, f=0.0), 1.0).lz == pytest.approx(-0.432332358, abs=1e-9)


@pytest.mark.parametrize("t", LAW_GRID)
def test_optimal_rate_is_minus_tanh(t):
    assert optimal_f(CovariantRates(a=1.0, x=0.0), t) == pytest.approx(-np.tanh(t), abs=1e-8)


def test_optimal_rate_with_antisymmetric_rate():
    assert optimal_f(CovariantRates(a=1.0, x=0.5), 1.0) == pytest.approx(-0.668071, abs=1e-6)


@pytest.mark.parametrize("a,x", [(1.0, 0.0), (1.0, 0.5), (2.0, 1.0)])
def test_optimal_rate_matches_finite_difference(a, x):
    rates = CovariantRates(a=a, x=x)
    for t in np.linspace(0.05, 5.0, 25):
        analytic = optimal_f(rates, t)
        numeric = optimal_f(rates, t, method='finite_difference')
        assert analytic == pytest.approx(numeric, abs=1e-6)


def test_optimal_rate_next_to_onset():
    rates = CovariantRates(a=1.0, x=0.0, onset=1.0)
    assert optimal_f(rates, 0.5) == 0.0
    assert optimal_f(rates, 1.0 + 1e-7, method='finite_difference') == pytest.approx(0.0, abs=1e-5)


def test_optimal_rate_unknown_method():
    with pytest.raises(ValueError):
        optimal_f(CovariantRates(), 1.0, method='spline')


def test_infeasible_rates():
    rates = CovariantRates(a=1.0, x=1.5)
    with pytest.raises(InfeasibleRates):
        optimal_F(rates, 1.0)
    with pytest.raises(InfeasibleRates):
        optimal_f(rates, 1.0)
    with pytest.raises(InfeasibleRates):
        asymptotic_image(rates)


@settings(max_examples=50, deadline=None)
@given(floats(min_value=0.1, max_value=3.0), floats(min_value=-1.0, max_value=1.0),
       floats(min_value=0.0, max_value=5.0))
def test_optimal_rate_saturates_complete_positivity(a, ratio, t):
    rates = CovariantRates(a=a, x=ratio * a)
    conditions = cptp_conditions(rates, t)
    assert conditions.cond_a
    assert conditions.cond_b
    assert conditions.slack_b == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("t", LAW_GRID)
def test_optimal_choi_state_is_on_the_boundary(t):
    eigenvalues = np.linalg.eigvalsh(choi_closed_form(CovariantRates(a=1.0, x=0.0), t).rho)
    assert -1e-7 <= eigenvalues[0] <= 1e-7


def test_choi_closed_form_matches_map():
    rates = CovariantRates(a=1.3, x=-0.4, f=0.2)
    for t in (0.0, 0.3, 2.0):
        assert np.allclose(choi_closed_form(rates, t).rho, choi_of_map(affine_map(rates, t)).rho)


def test_zero_dephasing_is_completely_positive():
    rates = CovariantRates(a=1.0, x=0.5, f=0.0)
    assert first_cptp_violation(rates, LAW_GRID) is None
    assert all(choi_min_eigenvalue(affine_map(rates, t)) >= -1e-12 for t in LAW_GRID)


def test_doubled_optimal_integral_is_not_completely_positive():
    rates = CovariantRates(a=1.0, x=0.0, f=OPTIMAL, f_scale=2.0)
    t = first_cptp_violation(rates, LAW_GRID)
    assert t is not None
    assert cptp_conditions(rates, t).slack_b < 0


def test_channel_at_initial_time_is_identity():
    assert channel_at(CovariantRates(a=1.0, x=0.5), 0.0) == (1.0, 1.0, 0.0)


def test_onset_shifts_the_dynamics():
    delayed = CovariantRates(a=1.0, x=0.3, onset=1.0)
    assert channel_at(delayed, 0.5) == (1.0, 1.0, 0.0)
    expected = channel_at(CovariantRates(a=1.0, x=0.3), 1.5)
    assert np.allclose(channel_at(delayed, 2.5), expected)
    assert delayed.f_at(0.5) == 0.0


@pytest.mark.parametrize("rates", [
    CovariantRates(a=1.0, x=0.5, f=OPTIMAL),
    CovariantRates(a=2.0, x=-1.0, f=0.3),
    CovariantRates(a=lambda t: 1.0 + 0.5 * np.tanh(t), x=lambda t: 0.3 * np.exp(-t), f=0.1),
])
def test_closed_form_matches_propagation(rates):
    r0 = np.array([0.6, -0.2, 0.5])
    grid = [0.25, 0.5, 1.0]
    pmap = propagate(covariant_generator(rates), r0=r0, grid=grid)
    for t, r in zip(grid, pmap.trajectory[1:]):
        assert np.allclose(r, closed_form_bloch(rates, r0, t), atol=1e-7)


def test_dephasing_map():
    assert np.allclose(dephasing_map(1.0).M, np.diag([np.exp(-1.0), np.exp(-1.0), 1.0]))


@pytest.mark.parametrize("a,x,f", [(1.0, 0.0, 0.0), (1.0, 0.5, -0.3), (2.0, -1.0, 0.7), (0.5, 0.2, 1.5)])
@pytest.mark.parametrize("t", [0.1, 1.0, 3.0])
def test_channel_splits_into_optimal_channel_and_dephasing(a, x, f, t):
    rates = CovariantRates(a=a, x=x, f=f)
    optimal = rates.with_f(OPTIMAL)
    split = dephasing_map(integrals(rates, t).F - integrals(optimal, t).F).compose(affine_map(optimal, t))
    channel = affine_map(rates, t)
    assert np.allclose(split.M, channel.M, atol=1e-8)
    assert np.allclose(split.v, channel.v, atol=1e-8)


def test_rates_beyond_feasibility_lose_positivity_early():
    rates = CovariantRates(a=1.0, x=1.5, f=0.0)
    grid = np.linspace(0.0, 4.0, 41)
    first = first_cptp_violation(rates, grid)
    assert first is not None and first < 2.0 / 0.5
    assert not cptp_conditions(rates, first).cond_a
    assert np.linalg.eigvalsh(choi_closed_form(rates, first).rho)[0] < 0


def test_limits():
    rates = CovariantRates(a=2.0, x=1.0)
    assert limit_time(rates) == pytest.approx(15.0)
    alpha, beta, c = channel_limit(rates)
    image = asymptotic_image(rates)
    assert image.radius == pytest.approx(np.sqrt(0.75) / 2)
    assert image.center == pytest.approx(-0.5)
    assert alpha == pytest.approx(image.radius, abs=1e-8)
    assert beta == pytest.approx(0.0, abs=1e-12)
    assert -c == pytest.approx(image.center, abs=1e-8)


def test_limit_time_needs_positive_rate():
    with pytest.raises(InfeasibleRates):
        limit_time(CovariantRates(a=0.0))
