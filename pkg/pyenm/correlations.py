# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Correlation and coherence quantifiers of two-qubit states.

Negativity, quantum mutual information, l1-norm of coherence, quantum discord
(closed form for X-states, projective-measurement search otherwise) and
geometric discord. Measurements for the discord act on qubit B, which for a
Choi state is the channel output.

"""

from collections import namedtuple
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize, minimize_scalar
from scipy.special import xlogy

from nipype import logging

from pyenm.covariant import channel_at, choi_closed_form
from pyenm.errors import MarginalNotMixed, NotXState
from pyenm.interfaces.utils import parallel_map
from pyenm.qstate import (PSD_TOL, SIGMA, as_matrix, binary_entropy, partial_trace,
                          partial_transpose, trace_norm, von_neumann_entropy)

LOGGER = logging.getLogger('nipype.utils')

# Tolerance on the maximally mixed A marginal required by the X-state closed form
MARGINAL_TOL = 1e-9

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0
BRUTE_FORCE_CHUNK = 2000

DiscordWitness = namedtuple('DiscordWitness', ['theta', 'theta_prime', 'k', 'l'])
DiscordResult = namedtuple('DiscordResult', ['discord', 'classical', 'mutual_information', 'witness', 'method'])
CorrelationLimits = namedtuple('CorrelationLimits', ['negativity', 'mutual_information', 'discord', 'coherence'])
CorrelationRow = namedtuple('CorrelationRow', ['t', 'E', 'I', 'Q', 'D', 'C'])


########################
#  Entanglement and coherence
########################

def negativity(rho):
    """Negativity E = (||rho^T_B||_1 - 1) / 2.

    Examples
    --------
    >>> from pyenm.qstate import bell_state
    >>> round(negativity(bell_state()), 12)
    0.5

    """
    return max(0.0, 0.5 * (trace_norm(partial_transpose(as_matrix(rho))) - 1.0))


def mutual_information(rho):
    """Quantum mutual information I = S(rho_A) + S(rho_B) - S(rho) in bits."""
    rho = as_matrix(rho)
    value = (von_neumann_entropy(partial_trace(rho, 'B'))
             + von_neumann_entropy(partial_trace(rho, 'A'))
             - von_neumann_entropy(rho))
    return max(0.0, value)


def l1_coherence(rho):
    """Sum of the moduli of the off-diagonal entries, sqrt(r1^2 + r2^2) for a qubit."""
    rho = np.atleast_2d(as_matrix(rho))
    return float(np.sum(np.abs(rho)) - np.sum(np.abs(np.diag(rho))))


def geometric_discord(rho):
    """Geometric discord ``(|x|^2 + ||T||^2 - lambda_max(x x^T + T T^T)) / 4``.

    ``x_i = Tr[(sigma_i x 1) rho]`` and ``T_ij = Tr[(sigma_i x sigma_j) rho]``.
    """
    rho = as_matrix(rho)
    tensor = rho.reshape(2, 2, 2, 2)
    x = np.real(np.einsum('iba,ajbj->i', SIGMA[1:], tensor))
    T = np.real(np.einsum('iba,jdc,acbd->ij', SIGMA[1:], SIGMA[1:], tensor))
    K = np.outer(x, x) + T @ T.T
    lambda_max = np.linalg.eigvalsh(K)[-1]
    return float(max(0.0, 0.25 * (x @ x + np.sum(T ** 2) - lambda_max)))


########################
#  X-states
########################

@dataclass(frozen=True)
class XState:
    """Two-qubit state with non-zero entries on the diagonal and anti-diagonal only.

    Attributes
    ----------
    diag <tuple>
        (rho_11, rho_22, rho_33, rho_44)

    anti <tuple>
        (rho_14, rho_23)

    """

    diag: tuple
    anti: tuple

    @classmethod
    def from_matrix(cls, rho, tol=PSD_TOL):
        rho = as_matrix(rho).reshape(4, 4)
        mask = np.ones((4, 4), dtype=bool)
        mask[np.arange(4), np.arange(4)] = False
        mask[np.arange(4), 3 - np.arange(4)] = False
        if np.max(np.abs(rho[mask])) > tol:
            raise NotXState('State has entries outside the diagonal and anti-diagonal')
        diag = tuple(float(v) for v in np.real(np.diag(rho)))
        anti = (complex(rho[0, 3]), complex(rho[1, 2]))
        if abs(sum(diag) - 1.0) > tol or min(diag) < -tol:
            raise NotXState('Diagonal {} is not a probability vector'.format(diag))
        if (abs(anti[0]) > np.sqrt(max(diag[0] * diag[3], 0.0)) + tol
                or abs(anti[1]) > np.sqrt(max(diag[1] * diag[2], 0.0)) + tol):
            raise NotXState('Anti-diagonal entries violate positivity')
        return cls(diag=diag, anti=anti)

    def to_matrix(self):
        rho = np.diag(np.asarray(self.diag, dtype=complex))
        rho[0, 3], rho[1, 2] = self.anti
        rho[3, 0], rho[2, 1] = np.conj(self.anti[0]), np.conj(self.anti[1])
        return rho

    @property
    def marginal_a(self):
        return self.diag[0] + self.diag[1]


def _two_level_entropy(p, q, z):
    # Entropy of [[p, z], [z*, q]] / (p + q) and its larger eigenvalue
    total = p + q
    if total <= 0:
        return 0.0, 1.0
    radius = np.sqrt((p - q) ** 2 + 4.0 * z ** 2) / total
    theta = 0.5 * (1.0 + min(radius, 1.0))
    return binary_entropy(theta), theta


def _xstate_conditional_entropy(xstate, k):
    r11, r22, r33, r44 = xstate.diag
    z = np.sqrt(max(k * (1.0 - k), 0.0)) * (abs(xstate.anti[0]) + abs(xstate.anti[1]))
    l = 1.0 - k
    p_plus = k * (r11 + r33) + l * (r22 + r44)
    p_minus = l * (r11 + r33) + k * (r22 + r44)
    s_plus, theta = _two_level_entropy(k * r11 + l * r22, k * r33 + l * r44, z)
    s_minus, theta_prime = _two_level_entropy(l * r11 + k * r22, l * r33 + k * r44, z)
    return p_plus * s_plus + p_minus * s_minus, theta, theta_prime


def _xstate_minimum(xstate):
    if abs(xstate.marginal_a - 0.5) > MARGINAL_TOL:
        raise MarginalNotMixed('A marginal is diag({:.12g}, {:.12g})'.format(
            xstate.marginal_a, 1.0 - xstate.marginal_a))
    candidates = [1.0, 0.0, 0.5] + list(np.linspace(0.0, 1.0, 101))
    values = [_xstate_conditional_entropy(xstate, k)[0] for k in candidates]
    best_k = candidates[int(np.argmin(values))]
    res = minimize_scalar(lambda k: _xstate_conditional_entropy(xstate, k)[0],
                          bounds=(max(0.0, best_k - 0.01), min(1.0, best_k + 0.01)),
                          method='bounded', options={'xatol': 1e-10})
    if res.success and res.fun < min(values):
        best_k = float(res.x)
    value, theta, theta_prime = _xstate_conditional_entropy(xstate, best_k)
    return value, DiscordWitness(theta=theta, theta_prime=theta_prime, k=best_k, l=1.0 - best_k)


def xstate_discord(rho, details=False):
    """Quantum discord of an X-state, measuring qubit B.

    The conditional entropy after a projective measurement on B depends on the
    measurement only through ``k = cos^2(theta / 2)`` (``l = 1 - k``). The cases
    (k, l) = (1, 0), (0, 1) and (1/2, 1/2) are evaluated, completed by a scan of
    [0, 1] and a bounded refinement. States whose A marginal is not maximally
    mixed go to :func:`discord_brute_force`.

    Parameters
    ----------
    rho <XState, TwoQubitState or numpy.ndarray>
        X-state

    details <bool>
        If True, return a :class:`DiscordResult` instead of the discord value

    Examples
    --------
    >>> from pyenm.qstate import bell_state
    >>> round(xstate_discord(bell_state()), 6)
    1.0

    """
    xstate = rho if isinstance(rho, XState) else XState.from_matrix(rho)
    matrix = xstate.to_matrix()
    info = mutual_information(matrix)
    try:
        conditional, witness = _xstate_minimum(xstate)
        method = 'x_state'
    except MarginalNotMixed as e:
        LOGGER.info('%s; using the projective-measurement search', e)
        conditional, angles = _brute_force_minimum(matrix)
        witness = None
        method = 'brute_force'
    classical = von_neumann_entropy(partial_trace(matrix, 'B')) - conditional
    discord = max(0.0, info - classical)
    if details:
        return DiscordResult(discord=discord, classical=classical, mutual_information=info,
                             witness=witness, method=method)
    return discord


########################
#  Projective measurements on B
########################

def _conditional_operators(rho):
    tensor = as_matrix(rho).reshape(2, 2, 2, 2)
    rho_a = np.einsum('abcb->ac', tensor)
    # M_j = Tr_B[(1 x sigma_j) rho]
    m = np.einsum('jyb,abcy->jac', SIGMA[1:], tensor)
    return rho_a, m


def _directions(theta, phi):
    return np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1)


def _conditional_entropy(rho_a, m, n):
    """Conditional entropy (bits) for measurement directions ``n`` of shape (k, 3)."""
    n = np.atleast_2d(n)
    nm = np.einsum('kj,jac->kac', n, m)
    total = 0.0
    for sign in (1.0, -1.0):
        op = 0.5 * (rho_a[None] + sign * nm)
        a = np.real(op[:, 0, 0])
        d = np.real(op[:, 1, 1])
        p = a + d
        radius = np.sqrt(0.25 * (a - d) ** 2 + np.abs(op[:, 0, 1]) ** 2)
        lam = np.clip(np.stack([0.5 * p + radius, 0.5 * p - radius]), 0.0, None)
        total = total + (xlogy(p, p) - np.sum(xlogy(lam, lam), axis=0))
    return total / np.log(2.0)


def _brute_force_minimum(rho, n_theta=200, n_phi=200, nb_of_threads=0):
    rho_a, m = _conditional_operators(rho)
    # cos(theta) uniform with golden-ratio offsets
    theta = np.arccos(1.0 - 2.0 * (np.arange(n_theta) + GOLDEN) / n_theta)
    phi = 2.0 * np.pi * (np.arange(n_phi) + GOLDEN ** 2) / n_phi
    grid = np.stack(np.meshgrid(theta, phi, indexing='ij'), axis=-1).reshape(-1, 2)
    axes = np.array([[0.0, 0.0], [0.5 * np.pi, 0.0], [0.5 * np.pi, 0.5 * np.pi]])
    grid = np.concatenate([axes, grid])

    chunks = [grid[i:i + BRUTE_FORCE_CHUNK] for i in range(0, len(grid), BRUTE_FORCE_CHUNK)]
    values = np.concatenate(parallel_map(
        lambda chunk: _conditional_entropy(rho_a, m, _directions(chunk[:, 0], chunk[:, 1])),
        chunks, nb_of_threads))
    best = int(np.argmin(values))

    def objective(angles):
        return float(_conditional_entropy(rho_a, m, _directions(angles[0], angles[1]))[0])

    res = minimize(objective, grid[best], method='Nelder-Mead',
                   options={'xatol': 1e-9, 'fatol': 1e-12, 'maxiter': 4000})
    if res.fun < values[best]:
        return float(res.fun), tuple(res.x)
    return float(values[best]), tuple(grid[best])


def classical_correlations(rho, n_theta=200, n_phi=200, nb_of_threads=0):
    """Classical correlations ``S(rho_A) - min sum_k p_k S(rho_A|k)`` for measurements on B."""
    rho = as_matrix(rho)
    conditional, _ = _brute_force_minimum(rho, n_theta, n_phi, nb_of_threads)
    return von_neumann_entropy(partial_trace(rho, 'B')) - conditional


def discord_brute_force(rho, n_theta=200, n_phi=200, nb_of_threads=0):
    """Quantum discord by search over projective measurements on B.

    A ``n_theta x n_phi`` grid of measurement directions is scanned in
    parallel chunks; the best direction is refined with Nelder-Mead.
    """
    rho = as_matrix(rho)
    classical = classical_correlations(rho, n_theta, n_phi, nb_of_threads)
    return max(0.0, mutual_information(rho) - classical)


########################
#  Covariant channel correlations
########################

def correlation_limits(ratio):
    """Limits t -> infinity of the Choi-state quantifiers of the optimal channel.

    Parameters
    ----------
    ratio <float>
        x / a, with |x / a| <= 1

    Examples
    --------
    >>> limits = correlation_limits(0.0)
    >>> round(limits.mutual_information, 6), round(limits.discord, 6)
    (0.5, 0.311278)

    """
    if abs(ratio) > 1:
        raise ValueError('|x/a| must not exceed 1, got {}'.format(ratio))
    radius = np.sqrt(1.0 - ratio ** 2)
    info = 0.5 * binary_entropy(0.5 * (1.0 + ratio))
    discord = info + binary_entropy(0.5 * (1.0 + 0.5 * radius)) - 1.0
    return CorrelationLimits(negativity=0.0, mutual_information=float(info),
                             discord=float(max(0.0, discord)), coherence=float(0.5 * radius))


def _correlation_row(rates, t, c0):
    choi = choi_closed_form(rates, t)
    result = xstate_discord(choi, details=True)
    return CorrelationRow(t=float(t), E=negativity(choi), I=result.mutual_information,
                          Q=result.discord, D=geometric_discord(choi),
                          C=c0 * channel_at(rates, t).alpha)


def closed_form_trajectories(rates, grid, c0=1.0, nb_of_threads=0):
    """Correlations of the closed-form Choi state along a time grid.

    Parameters
    ----------
    rates <CovariantRates>
        Channel rates

    grid <array-like>
        Time points

    c0 <float>
        Initial l1-coherence of the probe state

    nb_of_threads <int>
        Number of worker threads

    Returns
    -------
    list of CorrelationRow
        ``(t, E, I, Q, D, C)`` in grid order

    """
    grid = np.asarray(grid, dtype=float)
    return parallel_map(lambda t: _correlation_row(rates, t, c0), grid, nb_of_threads)
