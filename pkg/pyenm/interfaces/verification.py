# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM property suites and their interfaces.

A suite is a named list of checks. Every check receives the random generator
of its suite, seeded from ``(seed, suite index)``, and returns whether it passed
together with a short detail string. An exception raised by a check marks that
check as failed and does not stop the suite.

"""

import functools
from collections import OrderedDict

import numpy as np

from nipype import logging
from nipype.interfaces.base import traits, TraitedSpec, BaseInterface, BaseInterfaceInputSpec

from pyenm.correlations import (correlation_limits, discord_brute_force, geometric_discord,
                                mutual_information, negativity, xstate_discord)
from pyenm.covariant import (OPTIMAL, CovariantRates, affine_map, channel_at, choi_closed_form,
                             covariant_generator, cptp_conditions, first_cptp_violation, limit_time,
                             optimal_f, asymptotic_image)
from pyenm.errors import ConfigError
from pyenm.interfaces.trajectories import TableOutputSpec
from pyenm.lindblad import (DecoherenceMatrix, apply_local_channel, choi_min_eigenvalue, choi_of_map,
                            divisibility_profile, intermediate_map, is_cp_divisible, product_state_distance,
                            propagate, trace_distance_profile, verify_proposition1)
from pyenm.metrology import (PhaseEstimationSetup, bloch_derivative, bloch_trajectory, qfi_covariant,
                             qfi_finite_difference)
from pyenm.qstate import (bell_state, binary_entropy, bloch_to_density, density_to_bloch, partial_trace,
                          partial_transpose, product_state, random_bloch_vector, random_density_matrix,
                          random_x_state, trace_norm, von_neumann_entropy)
from pyenm.tomography import (OpticalModel, enm_channel_from_optics, f_matrix, f_matrix_from_states, kappa,
                              process_spectrum, spectrum_moduli)

IFLOGGER = logging.getLogger('nipype.interface')

SUITES = OrderedDict()

RANDOM_INSTANCES = 100

VERIFY_COLUMNS = ['suite', 'check', 'passed', 'detail']


def check(suite, name):
    """Register the decorated function as check ``name`` of ``suite``."""
    def decorator(func):
        SUITES.setdefault(suite, []).append((name, func))
        return func
    return decorator


def _within(errors, tol):
    errors = np.abs(np.asarray(errors, dtype=float))
    worst = float(np.max(errors)) if errors.size else 0.0
    return bool(worst <= tol), 'n={}, max error {:.3e} (tol {:.0e})'.format(errors.size, worst, tol)


def _optimal(a=1.0, x=0.0):
    return CovariantRates(a=a, x=x, f=OPTIMAL)


LAW_GRID = np.geomspace(1e-3, 5.0, 50)


########################
#  states
########################

@check('states', 'bloch_round_trip')
def _bloch_round_trip(rng):
    errors = []
    for _ in range(RANDOM_INSTANCES):
        r = random_bloch_vector(rng)
        errors.append(np.max(np.abs(density_to_bloch(bloch_to_density(r).rho) - r)))
    return _within(errors, 1e-12)


@check('states', 'density_round_trip')
def _density_round_trip(rng):
    errors = []
    for _ in range(RANDOM_INSTANCES):
        rho = random_density_matrix(rng, dim=2)
        errors.append(np.max(np.abs(bloch_to_density(density_to_bloch(rho)).rho - rho)))
    return _within(errors, 1e-12)


@check('states', 'entropy_subadditivity')
def _entropy_subadditivity(rng):
    violations = []
    for _ in range(RANDOM_INSTANCES):
        rho = random_density_matrix(rng, rank=int(rng.integers(1, 5)))
        s_a = von_neumann_entropy(partial_trace(rho, 'B'))
        s_b = von_neumann_entropy(partial_trace(rho, 'A'))
        s_ab = von_neumann_entropy(rho)
        violations.append(max(0.0, s_ab - s_a - s_b, abs(s_a - s_b) - s_ab))
    return _within(violations, 1e-9)


@check('states', 'partial_transpose')
def _partial_transpose(rng):
    errors = []
    for _ in range(RANDOM_INSTANCES):
        rho = random_density_matrix(rng)
        rho_tb = partial_transpose(rho)
        errors.append(max(abs(np.trace(rho_tb) - 1.0),
                          np.max(np.abs(rho_tb - rho_tb.conj().T)),
                          np.max(np.abs(partial_transpose(rho_tb) - rho)),
                          max(0.0, negativity(rho) - 0.5)))
    return _within(errors, 1e-12)


########################
#  negativity_law
########################

@check('negativity_law', 'propagated_choi_negativity')
def _propagated_choi_negativity(rng):
    pmap = propagate(covariant_generator(_optimal()), grid=LAW_GRID)
    errors = [negativity(choi_of_map(pmap.at(t))) - 0.5 * np.exp(-2.0 * t) for t in LAW_GRID]
    return _within(errors, 1e-6)


@check('negativity_law', 'closed_form_choi_negativity')
def _closed_form_choi_negativity(rng):
    errors = []
    for a, x in ((1.0, 0.0), (1.0, 0.5), (2.0, -1.0)):
        rates = _optimal(a, x)
        errors += [negativity(choi_closed_form(rates, t)) - 0.5 * np.exp(-2.0 * a * t) for t in LAW_GRID]
    return _within(errors, 1e-8)


########################
#  optimal_rate
########################

@check('optimal_rate', 'tanh_law')
def _tanh_law(rng):
    rates = _optimal()
    return _within([optimal_f(rates, t) + np.tanh(t) for t in LAW_GRID], 1e-8)


@check('optimal_rate', 'closed_form_vs_finite_difference')
def _closed_form_vs_finite_difference(rng):
    errors = []
    for a, x in ((1.0, 0.0), (1.0, 0.5), (2.0, 1.0)):
        rates = _optimal(a, x)
        errors += [optimal_f(rates, t) - optimal_f(rates, t, method='finite_difference')
                   for t in np.linspace(0.05, 3.0, 20)]
    return _within(errors, 1e-6)


@check('optimal_rate', 'time_dependent_rates')
def _time_dependent_rates(rng):
    general = CovariantRates(a=lambda t: 1.0, x=lambda t: 0.5)
    constant = _optimal(1.0, 0.5)
    return _within([optimal_f(general, t) - optimal_f(constant, t) for t in (0.1, 0.5, 1.0, 2.0)], 1e-7)


########################
#  saturation
########################

@check('saturation', 'propagated_choi_min_eigenvalue')
def _propagated_choi_min_eigenvalue(rng):
    pmap = propagate(covariant_generator(_optimal()), grid=LAW_GRID)
    return _within([choi_min_eigenvalue(pmap.at(t)) for t in LAW_GRID], 1e-7)


@check('saturation', 'closed_form_slack')
def _closed_form_slack(rng):
    errors = []
    for x in (0.0, 0.5, -0.8):
        for t in LAW_GRID:
            conditions = cptp_conditions(_optimal(1.0, x), t)
            errors.append(abs(conditions.slack_b) if conditions.cond_a else np.inf)
    return _within(errors, 1e-9)


@check('saturation', 'doubled_integral_not_cp')
def _doubled_integral_not_cp(rng):
    grid = np.linspace(0.0, 3.0, 31)
    admissible = first_cptp_violation(_optimal(), grid)
    doubled = first_cptp_violation(_optimal().with_f(OPTIMAL, f_scale=2.0), grid)
    return (admissible is None and doubled is not None,
            'first violation: optimal {}, doubled integral {}'.format(admissible, doubled))


########################
#  limits
########################

def _limit_choi(ratio):
    rates = _optimal(1.0, ratio)
    return choi_closed_form(rates, limit_time(rates))


@check('limits', 'mutual_information_limit')
def _mutual_information_limit(rng):
    return _within([mutual_information(_limit_choi(r)) - 0.5 * binary_entropy(0.5 * (1.0 + r))
                    for r in (0.0, 0.3, 0.7)], 1e-4)


@check('limits', 'discord_limit')
def _discord_limit(rng):
    errors = [xstate_discord(_limit_choi(r)) - correlation_limits(r).discord for r in (0.0, 0.5)]
    errors.append(correlation_limits(0.0).discord - 0.311278)
    errors.append(correlation_limits(0.5).discord - 0.265806)
    return _within(errors, 1e-4)


@check('limits', 'discord_limit_brute_force')
def _discord_limit_brute_force(rng):
    return _within([discord_brute_force(_limit_choi(r)) - correlation_limits(r).discord
                    for r in (0.0, 0.5)], 1e-4)


@check('limits', 'entanglement_breaking_limit')
def _entanglement_breaking_limit(rng):
    choi = _limit_choi(0.0)
    e, i, q = negativity(choi), mutual_information(choi), xstate_discord(choi)
    return (e < 1e-6 and i > 0.49 and q > 0.31,
            'E={:.3e}, I={:.6f}, Q={:.6f}'.format(e, i, q))


@check('limits', 'asymptotic_image')
def _asymptotic_image(rng):
    errors = []
    for ratio in (0.0, 0.5):
        rates = _optimal(1.0, ratio)
        image = asymptotic_image(rates)
        channel = affine_map(rates, limit_time(rates))
        for _ in range(20):
            r = channel.apply(random_bloch_vector(rng, pure=True))
            errors.append(max(0.0, np.hypot(r[0], r[1]) - image.radius))
            errors.append(r[2] - image.center)
    return _within(errors, 1e-9)


########################
#  coherence
########################

@check('coherence', 'propagated_coherence')
def _propagated_coherence(rng):
    grid = np.linspace(0.0, 5.0, 41)
    errors = []
    for x in (0.0, 0.5):
        rates = _optimal(1.0, x)
        trajectory = propagate(covariant_generator(rates), r0=[1.0, 0.0, 0.0], grid=grid).trajectory
        errors += [np.hypot(r[0], r[1]) - channel_at(rates, t).alpha for t, r in zip(grid, trajectory)]
    return _within(errors, 1e-7)


@check('coherence', 'closed_form_coherence')
def _closed_form_coherence(rng):
    errors = []
    for x in (0.0, 0.5, 0.9):
        rates = _optimal(1.0, x)
        for t in LAW_GRID:
            e = np.exp(-2.0 * t)
            expected = 0.5 * np.sqrt((1.0 + e) ** 2 - x ** 2 * (1.0 - e) ** 2)
            errors.append(channel_at(rates, t).alpha - expected)
    return _within(errors, 1e-12)


@check('coherence', 'asymptotic_coherence')
def _asymptotic_coherence(rng):
    errors = []
    for x in (0.0, 0.5, 0.9):
        rates = _optimal(1.0, x)
        alpha = channel_at(rates, limit_time(rates)).alpha
        errors.append(alpha - correlation_limits(x).coherence if alpha > 0 else np.inf)
    return _within(errors, 1e-5)


########################
#  qfi
########################

def _qfi_samples(rng, count=20):
    return [(rng.uniform(0.2, 3.0), rng.uniform(0.1, 5.0)) for _ in range(count)]


@check('qfi', 'finite_difference_agreement')
def _finite_difference_agreement(rng):
    errors = []
    for t, omega in _qfi_samples(rng):
        setup = PhaseEstimationSetup(omega=omega, rates=_optimal(1.0, 0.5))
        analytic = qfi_covariant(setup, t)
        numeric = qfi_finite_difference(setup, t, step=1e-5, propagated=True)
        errors.append((numeric - analytic) / analytic)
    return _within(errors, 1e-4)


@check('qfi', 'tangent_derivative')
def _tangent_derivative(rng):
    errors = []
    for t, omega in _qfi_samples(rng):
        setup = PhaseEstimationSetup(omega=omega, rates=_optimal(1.0, 0.5))
        errors.append(bloch_trajectory(setup, t) @ bloch_derivative(setup, t))
    return _within(errors, 1e-9)


@check('qfi', 'omega_independence')
def _omega_independence(rng):
    errors = []
    for t in (0.5, 1.0, 2.0):
        values = [qfi_covariant(PhaseEstimationSetup(omega=omega, rates=_optimal(1.0, 0.5)), t)
                  for omega in (0.1, 1.0, 10.0)]
        errors.append(max(values) - min(values))
    return _within(errors, 1e-9)


@check('qfi', 'coherence_law')
def _qfi_coherence_law(rng):
    setup = PhaseEstimationSetup(rates=_optimal(1.0, 0.5))
    return _within([qfi_covariant(setup, t) - (t * channel_at(setup.rates, t).alpha) ** 2
                    for t in LAW_GRID], 1e-12)


@check('qfi', 'long_time_growth')
def _long_time_growth(rng):
    setup = PhaseEstimationSetup(rates=_optimal())
    t = limit_time(setup.rates)
    return _within([qfi_covariant(setup, t) / t ** 2 - 0.25], 1e-6)


########################
#  proposition1
########################

@functools.lru_cache(maxsize=1)
def _depolarizing_rows():
    return verify_proposition1(DecoherenceMatrix.constant(0.5 * np.eye(3)), bell_state(),
                               [0.5, 1.0, 2.0, 4.0], c=0.5)


@check('proposition1', 'product_distance_bound')
def _product_distance_bound(rng):
    rows = _depolarizing_rows()
    return (all(row.holds for row in rows),
            ', '.join('t={:g}: {:.4e} <= {:.4e}'.format(row.t, row.distance, row.bound) for row in rows))


@check('proposition1', 'witness_state')
def _witness_state(rng):
    rows = _depolarizing_rows()
    errors = [row.witness_distance - 1.5 * np.exp(-row.t) for row in rows]
    errors += [max(0.0, row.witness_distance - row.bound) for row in rows]
    return _within(errors, 1e-6)


@check('proposition1', 'initial_distance')
def _initial_distance(rng):
    distance, _, _ = product_state_distance(bell_state())
    return (abs(distance - np.sqrt(2.0)) <= 1e-6,
            'distance of the Bell state to product states {:.6f}'.format(distance))


########################
#  eternal_nm
########################

@check('eternal_nm', 'intermediate_maps_not_cp')
def _intermediate_maps_not_cp(rng):
    pmap = propagate(covariant_generator(_optimal()), grid=[0.5, 0.6, 1.0, 1.1, 2.0, 2.1])
    values = [intermediate_map(pmap, s, s + 0.1)[1] for s in (0.5, 1.0, 2.0)]
    return (all(v < -1e-4 for v in values),
            'Choi min eigenvalues {}'.format(', '.join('{:.4e}'.format(v) for v in values)))


@check('eternal_nm', 'first_violation')
def _first_violation(rng):
    grid = np.linspace(0.0, 3.0, 31)
    divisible, first = is_cp_divisible(covariant_generator(_optimal()), grid)
    return (not divisible and first == grid[1],
            'CP-divisible: {}, first violation: {}'.format(divisible, first))


@check('eternal_nm', 'negative_rate')
def _negative_rate(rng):
    rates = _optimal(1.0, 0.5)
    values = [rates.f_at(t) for t in np.geomspace(1e-3, 10.0, 50)]
    return all(v < 0 for v in values), 'largest rate {:.3e}'.format(max(values))


########################
#  spectrum
########################

@check('spectrum', 'moduli_law')
def _moduli_law(rng):
    errors = []
    for s in np.linspace(0.0, 10.0, 101):
        errors += list(process_spectrum(s).moduli - spectrum_moduli(s))
    return _within(errors, 1e-10)


@check('spectrum', 'reference_exponent')
def _reference_exponent(rng):
    sample = process_spectrum(0.91)
    errors = list(sample.moduli - np.array([1.0, 0.701262, 0.701262, 0.402524]))
    errors.append(sample.product - 0.197949)
    return _within(errors, 1e-6)


@check('spectrum', 'monotonicity')
def _spectrum_monotonicity(rng):
    samples = [process_spectrum(s) for s in np.linspace(0.0, 4.0, 100)]
    moduli = np.array([sample.moduli for sample in samples])
    products = np.array([sample.product for sample in samples])
    increases = np.concatenate([np.diff(moduli, axis=0).ravel(), np.diff(products)])
    return _within(np.clip(increases, 0.0, None), 1e-12)


@check('spectrum', 'optics_match_covariant_channel')
def _optics_match_covariant_channel(rng):
    model = OpticalModel()
    rates = _optimal()
    errors = []
    for s in np.linspace(0.0, 4.0, 9):
        t = model.time_for_exponent(s)
        optics = choi_of_map(enm_channel_from_optics(model, t))
        errors.append(trace_norm(optics.rho - choi_closed_form(rates, 0.5 * s).rho))
        errors.append(abs(kappa(model, t)) - np.exp(-s))
    return _within(errors, 1e-9)


@check('spectrum', 'tomographic_reconstruction')
def _tomographic_reconstruction(rng):
    errors = []
    for _ in range(20):
        channel = affine_map(_optimal(rng.uniform(0.1, 2.0), 0.0), rng.uniform(0.0, 3.0))
        direct = f_matrix(channel).F
        errors.append(np.max(np.abs(f_matrix_from_states(channel).F - direct)))
        errors.append(direct[0, 0] - 1.0)
    return _within(errors, 1e-12)


########################
#  dominance
########################

@check('dominance', 'optimal_rate_dominates')
def _optimal_rate_dominates(rng):
    deficits = []
    for x in (0.0, 0.5):
        optimal = _optimal(1.0, x)
        alternatives = [optimal.with_f(0.0), optimal.with_f(1.0), optimal.with_f(OPTIMAL, f_scale=0.5)]
        for t in np.linspace(0.05, 3.0, 30):
            best = choi_closed_form(optimal, t)
            best_qfi = qfi_covariant(PhaseEstimationSetup(rates=optimal), t)
            for rates in alternatives:
                other = choi_closed_form(rates, t)
                deficits.append(min(0.0, negativity(best) - negativity(other)))
                deficits.append(min(0.0, mutual_information(best) - mutual_information(other)))
                deficits.append(min(0.0, best_qfi - qfi_covariant(PhaseEstimationSetup(rates=rates), t)))
    return _within(deficits, 1e-9)


########################
#  local_noise
########################

@check('local_noise', 'monotonicity_under_local_channels')
def _monotonicity_under_local_channels(rng):
    increases = []
    for _ in range(RANDOM_INSTANCES):
        rho = random_density_matrix(rng)
        a = rng.uniform(0.1, 2.0)
        rates = CovariantRates(a=a, x=rng.uniform(-1.0, 1.0) * a, f=OPTIMAL if rng.uniform() < 0.5 else 0.0)
        channel = affine_map(rates, rng.uniform(0.05, 3.0))
        noisy = apply_local_channel(channel, rho, 'A')
        increases.append(max(0.0, negativity(noisy) - negativity(rho)))
        increases.append(max(0.0, mutual_information(noisy) - mutual_information(rho)))
    return _within(increases, 1e-9)


########################
#  discord_oracle
########################

@check('discord_oracle', 'x_state_vs_brute_force')
def _x_state_vs_brute_force(rng):
    errors = []
    for _ in range(RANDOM_INSTANCES):
        state = random_x_state(rng, mixed_marginal=True)
        errors.append(xstate_discord(state) - discord_brute_force(state))
    return _within(errors, 1e-5)


@check('discord_oracle', 'reference_states')
def _reference_states(rng):
    product = product_state(np.diag([0.7, 0.3]), np.diag([0.4, 0.6]))
    errors = [xstate_discord(bell_state()) - 1.0,
              xstate_discord(np.eye(4) / 4.0),
              xstate_discord(product),
              geometric_discord(bell_state()) - 0.5,
              geometric_discord(np.eye(4) / 4.0),
              geometric_discord(product)]
    return _within(errors, 1e-9)


@check('discord_oracle', 'fallback_without_mixed_marginal')
def _fallback_without_mixed_marginal(rng):
    methods = []
    errors = []
    for _ in range(5):
        state = random_x_state(rng)
        result = xstate_discord(state, details=True)
        methods.append(result.method)
        errors.append(result.discord - discord_brute_force(state))
    passed, detail = _within(errors, 1e-9)
    return passed and set(methods) == {'brute_force'}, detail


########################
#  divisibility
########################

def _random_psd_gamma(rng, shift=0.05):
    g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    return 0.2 * g @ g.conj().T + shift * np.eye(3)


@check('divisibility', 'markovian_generator')
def _markovian_generator(rng):
    grid = np.linspace(0.0, 2.0, 21)
    errors = []
    for _ in range(5):
        gen = DecoherenceMatrix.constant(_random_psd_gamma(rng))
        divisible, _ = is_cp_divisible(gen, grid)
        errors.append(0.0 if divisible else np.inf)
        errors.append(min(0.0, float(np.min(divisibility_profile(propagate(gen, grid=grid))))))
    return _within(errors, 1e-8)


@check('divisibility', 'enm_profile_negative')
def _enm_profile_negative(rng):
    profile = divisibility_profile(propagate(covariant_generator(_optimal()), grid=np.linspace(0.0, 2.0, 21)))
    # the first step starts at t = 0 and is the channel itself
    return bool(np.all(profile[1:] < -1e-6)), 'largest Choi min eigenvalue {:.3e}'.format(np.max(profile[1:]))


@check('divisibility', 'gamma_positivity')
def _gamma_positivity(rng):
    gamma = _random_psd_gamma(rng, shift=0.0)
    eigenvalues, vectors = np.linalg.eigh(gamma)
    indefinite = gamma - (eigenvalues[0] + 0.1) * np.outer(vectors[:, 0], vectors[:, 0].conj())
    positive, _ = is_cp_divisible(DecoherenceMatrix.constant(gamma), [0.0, 1.0])
    negative, first = is_cp_divisible(DecoherenceMatrix.constant(indefinite), [0.0, 1.0])
    return positive and not negative and first == 0.0, 'PSD: {}, indefinite: {}'.format(positive, negative)


########################
#  contraction
########################

@check('contraction', 'trace_distance_non_increasing')
def _trace_distance_non_increasing(rng):
    grid = np.linspace(0.0, 3.0, 31)
    generators = [DecoherenceMatrix.constant(_random_psd_gamma(rng)),
                  covariant_generator(_optimal()),
                  covariant_generator(_optimal(1.0, 0.5))]
    increases = []
    for gen in generators:
        pmap = propagate(gen, grid=grid)
        for _ in range(10):
            rho = bloch_to_density(random_bloch_vector(rng))
            sigma = bloch_to_density(random_bloch_vector(rng))
            increases += list(np.clip(np.diff(trace_distance_profile(pmap, rho, sigma)), 0.0, None))
    return _within(increases, 1e-9)


SUITE_NAMES = tuple(SUITES)


def select_suites(suite):
    """Return the suite names selected by ``suite`` (a name or ``all``)."""
    if suite == 'all':
        return list(SUITE_NAMES)
    names = [name.strip() for name in suite.split(',')]
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ConfigError('Unknown suite(s) {}; available: all, {}'.format(
            ', '.join(unknown), ', '.join(SUITE_NAMES)))
    return names


def run_suite(name, seed):
    """Run every check of a suite and return rows ``[suite, check, passed, detail]``."""
    rng = np.random.default_rng([seed, SUITE_NAMES.index(name)])
    rows = []
    for check_name, func in SUITES[name]:
        try:
            passed, detail = func(rng)
        except Exception as e:
            passed, detail = False, '{}: {}'.format(type(e).__name__, e)
        if not passed:
            IFLOGGER.warning('Check %s/%s failed: %s', name, check_name, detail)
        rows.append([name, check_name, bool(passed), detail])
    return rows


#######################
#  Property suite
#######################

class PropertySuiteInputSpec(BaseInterfaceInputSpec):
    """Class used to represent inputs of the PropertySuite interface."""

    suite = traits.Str(desc='Name of the property suite', mandatory=True)
    seed = traits.Int(0, desc='Seed of the randomized checks', usedefault=True)


class PropertySuiteOutputSpec(TraitedSpec):
    """Class used to represent outputs of the PropertySuite interface."""

    checks = traits.List(traits.List, desc='Rows [suite, check, passed, detail]')


class PropertySuite(BaseInterface):
    """Runs one property suite.

    Example
    ----------
    >>> from pyenm.interfaces.verification import PropertySuite
    >>> suite = PropertySuite()
    >>> suite.inputs.suite = 'spectrum'
    >>> suite.inputs.seed = 7
    >>> suite.run()  # doctest: +SKIP

    """

    input_spec = PropertySuiteInputSpec
    output_spec = PropertySuiteOutputSpec

    m_checks = []

    def _run_interface(self, runtime):
        select_suites(self.inputs.suite)
        self.m_checks = run_suite(self.inputs.suite, self.inputs.seed)
        return runtime

    def _list_outputs(self):
        outputs = self._outputs().get()
        outputs['checks'] = self.m_checks
        return outputs


#######################
#  Summary
#######################

class VerificationSummaryInputSpec(BaseInterfaceInputSpec):
    """Class used to represent inputs of the VerificationSummary interface."""

    input_checks = traits.List(traits.List, desc='Rows of all suites in suite order', mandatory=True)


class VerificationSummaryOutputSpec(TableOutputSpec):
    """Class used to represent outputs of the VerificationSummary interface."""

    failures = traits.List(traits.Str, desc='Failed checks as "suite/check"')


class VerificationSummary(BaseInterface):
    """Gathers the rows of the property suites into one table."""

    input_spec = VerificationSummaryInputSpec
    output_spec = VerificationSummaryOutputSpec

    m_rows = []
    m_failures = []

    def _run_interface(self, runtime):
        self.m_rows = [list(row) for row in self.inputs.input_checks]
        self.m_failures = ['{}/{}'.format(row[0], row[1]) for row in self.m_rows if not row[2]]
        IFLOGGER.info('%d checks, %d failed', len(self.m_rows), len(self.m_failures))
        return runtime

    def _list_outputs(self):
        outputs = self._outputs().get()
        outputs['columns'] = list(VERIFY_COLUMNS)
        outputs['rows'] = self.m_rows
        outputs['failures'] = self.m_failures
        return outputs
