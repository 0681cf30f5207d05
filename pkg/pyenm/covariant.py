# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Closed-form phase-covariant qubit channels.

The decoherence matrix

.. code-block:: text

    gamma(t) = [[a(t), -i x(t), 0   ],
                [i x(t), a(t),  0   ],
                [0,      0,     f(t)]]

generates the channel ``r1,2 -> alpha r1,2`` and ``r3 -> beta r3 + l_z`` with

.. code-block:: text

    A(t) = int_T^t a,   F(t) = int_T^t f,   l_z(t) = -2 int_T^t x(s) exp(-2 (A(t) - A(s))) ds
    alpha = exp(-A - F),   beta = exp(-2 A),   c = -l_z

The channel is completely positive iff ``exp(-2A) + |l_z| <= 1`` and
``4 alpha^2 + l_z^2 <= (1 + beta)^2``. The rate ``f`` saturating the second
condition is the correlation-optimal, eternally non-Markovian choice.

"""

import functools
import numbers
from collections import namedtuple
from dataclasses import dataclass
from typing import Any, Callable, Union

import numpy as np
from scipy.integrate import quad

from nipype import logging

from pyenm.errors import InfeasibleRates, QuadratureFailed
from pyenm.lindblad import AffineMap, DecoherenceMatrix
from pyenm.qstate import PSD_TOL, TwoQubitState

LOGGER = logging.getLogger('nipype.utils')

OPTIMAL = 'optimal'

# Limits t -> infinity are evaluated at LIMIT_FACTOR / a and checked at CHECK_FACTOR / a
LIMIT_FACTOR = 30.0
CHECK_FACTOR = 40.0

QUAD_ABS_ERROR = 1e-10

RateIntegrals = namedtuple('RateIntegrals', ['A', 'F', 'lz'])
CovariantChannelAt = namedtuple('CovariantChannelAt', ['alpha', 'beta', 'c'])
CPTPConditions = namedtuple('CPTPConditions', ['cond_a', 'cond_b', 'slack_b'])
AsymptoticImage = namedtuple('AsymptoticImage', ['radius', 'center'])


########################
#  Rates
########################

@dataclass(frozen=True, eq=False)
class CovariantRates:
    """Rates ``a``, ``x`` and ``f`` of a phase-covariant decoherence matrix.

    Attributes
    ----------
    a <float or callable>
        Transverse rate, a(t) >= 0

    x <float or callable>
        Antisymmetric rate driving the longitudinal shift

    f <'optimal', float or callable>
        Dephasing rate. ``'optimal'`` selects the correlation-optimal rate,
        scaled in its integral by ``f_scale``

    onset <float>
        Time at which the dynamics is switched on; all rates vanish before it

    f_scale <float>
        Factor applied to the optimal integral F (ignored unless ``f='optimal'``)

    Examples
    --------
    >>> from pyenm.covariant import CovariantRates, optimal_f
    >>> rates = CovariantRates(a=1.0, x=0.0)
    >>> round(optimal_f(rates, 1.0), 6)
    -0.761594

    """

    a: Union[float, Callable[[float], float]] = 1.0
    x: Union[float, Callable[[float], float]] = 0.0
    f: Any = OPTIMAL
    onset: float = 0.0
    f_scale: float = 1.0

    def __post_init__(self):
        if not (self.f == OPTIMAL if isinstance(self.f, str) else
                isinstance(self.f, numbers.Real) or callable(self.f)):
            raise ValueError('f must be "optimal", a number or a callable, got {!r}'.format(self.f))

    @property
    def is_constant(self):
        return isinstance(self.a, numbers.Real) and isinstance(self.x, numbers.Real)

    @property
    def is_optimal(self):
        return isinstance(self.f, str)

    def a_at(self, t):
        return _rate_value(self.a, t) if t >= self.onset else 0.0

    def x_at(self, t):
        return _rate_value(self.x, t) if t >= self.onset else 0.0

    def f_at(self, t):
        if t < self.onset:
            return 0.0
        if self.is_optimal:
            return self.f_scale * optimal_f(self, t)
        return _rate_value(self.f, t)

    def with_f(self, f, f_scale=1.0):
        """Return the same (a, x, onset) with another dephasing rate."""
        return CovariantRates(a=self.a, x=self.x, f=f, onset=self.onset, f_scale=f_scale)


def _rate_value(rate, t):
    return float(rate(t)) if callable(rate) else float(rate)


def _quad(func, lower, upper):
    if upper <= lower:
        return 0.0
    value, error = quad(func, lower, upper, epsabs=1e-13, epsrel=1e-12, limit=200)
    if not np.isfinite(value) or error > QUAD_ABS_ERROR:
        raise QuadratureFailed('Integral on [{}, {}] reached error {:.3e}'.format(lower, upper, error))
    return value


def gamma_matrix(rates, t):
    """Assemble the covariant decoherence matrix at time ``t``."""
    a = rates.a_at(t)
    x = rates.x_at(t)
    f = rates.f_at(t)
    return np.array([[a, -1j * x, 0],
                     [1j * x, a, 0],
                     [0, 0, f]], dtype=complex)


def covariant_generator(rates, omega=0.0):
    """Return the :class:`~pyenm.lindblad.DecoherenceMatrix` of covariant rates."""
    return DecoherenceMatrix(functools.partial(gamma_matrix, rates), omega)


########################
#  Integrals
########################

@functools.lru_cache(maxsize=8192)
def _a_integral(rates, t):
    elapsed = t - rates.onset
    if elapsed <= 0:
        return 0.0
    if isinstance(rates.a, numbers.Real):
        return float(rates.a) * elapsed
    return _quad(rates.a_at, rates.onset, t)


def _lz_integral(rates, t):
    elapsed = t - rates.onset
    if elapsed <= 0:
        return 0.0
    if rates.is_constant:
        a, x = float(rates.a), float(rates.x)
        if a == 0:
            return -2.0 * x * elapsed
        return -(x / a) * (-np.expm1(-2.0 * a * elapsed))
    a_t = _a_integral(rates, t)
    return -2.0 * _quad(lambda s: rates.x_at(s) * np.exp(-2.0 * (a_t - _a_integral(rates, s))),
                        rates.onset, t)


def _f_integral(rates, t):
    elapsed = t - rates.onset
    if elapsed <= 0:
        return 0.0
    if rates.is_optimal:
        return rates.f_scale * optimal_F(rates, t)
    if isinstance(rates.f, numbers.Real):
        return float(rates.f) * elapsed
    return _quad(rates.f_at, rates.onset, t)


def integrals(rates, t):
    """Return the :class:`RateIntegrals` ``(A, F, l_z)`` at time ``t``.

    Constant rates use exact antiderivatives; otherwise adaptive quadrature
    with absolute error below 1e-10 is used.

    Examples
    --------
    >>> integrals(CovariantRates(a=1.0, x=0.5, f=0.0), 1.0).lz  # doctest: +ELLIPSIS
    -0.432332...

    """
    return RateIntegrals(A=_a_integral(rates, t), F=_f_integral(rates, t), lz=_lz_integral(rates, t))


########################
#  Optimal rate
########################

def optimal_F(rates, t):
    """Integral F(t) of the rate that saturates complete positivity.

    .. code-block:: text

        F = -(1/2) [2 A + ln(((1 + exp(-2A))^2 - l_z^2) / 4)]

    Parameters
    ----------
    rates <CovariantRates>
        Only ``a``, ``x`` and ``onset`` are used

    t <float>
        Time

    """
    if t <= rates.onset:
        return 0.0
    if abs(rates.x_at(t)) > rates.a_at(t) * (1 + 1e-12):
        raise InfeasibleRates('|x(t)| = {:.6g} exceeds a(t) = {:.6g} at t = {}'.format(
            abs(rates.x_at(t)), rates.a_at(t), t))
    A = _a_integral(rates, t)
    lz = _lz_integral(rates, t)
    beta = np.exp(-2.0 * A)
    argument = ((1.0 + beta) ** 2 - lz ** 2) / 4.0
    if argument <= 0:
        raise InfeasibleRates('No completely positive dephasing exists at t = {}'.format(t))
    return -0.5 * (2.0 * A + np.log(argument))


def optimal_f(rates, t, method='analytic'):
    """Correlation-optimal dephasing rate f(t).

    For constant ``a`` and ``x`` the closed form

    .. code-block:: text

        f = -(1/2) a (1 - x^2/a^2) sinh(2at) / (cosh^2(at) - (x^2/a^2) sinh^2(at))

    is evaluated in its overflow-free tanh form. For general rates the analytic
    derivative of :func:`optimal_F` is used, with ``dl_z/dt = -2a l_z - 2x``.

    Parameters
    ----------
    rates <CovariantRates>
        Rates providing ``a``, ``x`` and ``onset``

    t <float>
        Time

    method <'analytic' or 'finite_difference'>
        ``'finite_difference'`` differentiates :func:`optimal_F` numerically with
        step ``1e-6 max(1, t)`` (centered, one-sided next to the onset)

    """
    if method == 'finite_difference':
        h = 1e-6 * max(1.0, t)
        if t - h < rates.onset:
            return (-3.0 * optimal_F(rates, t) + 4.0 * optimal_F(rates, t + h)
                    - optimal_F(rates, t + 2.0 * h)) / (2.0 * h)
        return (optimal_F(rates, t + h) - optimal_F(rates, t - h)) / (2.0 * h)
    if method != 'analytic':
        raise ValueError('Unknown method {!r}'.format(method))
    if t <= rates.onset:
        return 0.0
    a = rates.a_at(t)
    x = rates.x_at(t)
    if abs(x) > a * (1 + 1e-12):
        raise InfeasibleRates('|x(t)| = {:.6g} exceeds a(t) = {:.6g} at t = {}'.format(abs(x), a, t))
    if rates.is_constant:
        if a == 0:
            return 0.0
        ratio2 = (x / a) ** 2
        if ratio2 >= 1.0:
            return 0.0
        th = np.tanh(a * (t - rates.onset))
        return -a * (1.0 - ratio2) * th / (1.0 - ratio2 * th ** 2)
    A = _a_integral(rates, t)
    lz = _lz_integral(rates, t)
    beta = np.exp(-2.0 * A)
    g = (1.0 + beta) ** 2 - lz ** 2
    if g <= 0:
        raise InfeasibleRates('No completely positive dephasing exists at t = {}'.format(t))
    return -a + (2.0 * a * beta * (1.0 + beta) - 2.0 * lz * (a * lz + x)) / g


########################
#  Channel at time t
########################

def channel_at(rates, t):
    """Return the :class:`CovariantChannelAt` coefficients ``(alpha, beta, c)``."""
    A, F, lz = integrals(rates, t)
    return CovariantChannelAt(alpha=float(np.exp(-A - F)), beta=float(np.exp(-2.0 * A)), c=float(-lz))


def affine_map(rates, t):
    """Return the channel at time ``t`` as an :class:`~pyenm.lindblad.AffineMap`."""
    alpha, beta, c = channel_at(rates, t)
    return AffineMap(M=np.diag([alpha, alpha, beta]), v=np.array([0.0, 0.0, -c]))


def closed_form_bloch(rates, r0, t):
    """Bloch vector at time ``t`` from the closed-form solution.

    Examples
    --------
    >>> r = closed_form_bloch(CovariantRates(a=1.0, x=0.0, f=0.0), [1, 0, 1], 1.0)
    >>> np.allclose(r, [np.exp(-1), 0, np.exp(-2)])
    True

    """
    return affine_map(rates, t).apply(r0)


def dephasing_map(G):
    """Pure-dephasing channel with integrated rate ``G`` (transverse factor exp(-G))."""
    return AffineMap(M=np.diag([np.exp(-G), np.exp(-G), 1.0]), v=np.zeros(3))


def cptp_conditions(rates, t):
    """Evaluate both complete-positivity conditions at time ``t``.

    Returns
    -------
    CPTPConditions
        ``cond_a`` for ``exp(-2A) + |l_z| <= 1``, ``cond_b`` for
        ``4 alpha^2 + l_z^2 <= (1 + beta)^2`` and ``slack_b``, the right-hand
        side minus the left-hand side of the latter

    """
    alpha, beta, c = channel_at(rates, t)
    cond_a = beta + abs(c) <= 1.0 + PSD_TOL
    slack_b = (1.0 + beta) ** 2 - (4.0 * alpha ** 2 + c ** 2)
    return CPTPConditions(cond_a=bool(cond_a), cond_b=bool(slack_b >= -PSD_TOL), slack_b=float(slack_b))


def first_cptp_violation(rates, grid):
    """Return the first grid time where a complete-positivity condition fails, or None."""
    for t in np.asarray(grid, dtype=float):
        conditions = cptp_conditions(rates, t)
        if not (conditions.cond_a and conditions.cond_b):
            return float(t)
    return None


def choi_closed_form(rates, t):
    """Closed-form Choi state of the covariant channel at time ``t``.

    .. code-block:: text

        Omega_t = 1/4 [[1+beta, 0, 0, 2 alpha],
                       [0, 1-beta, 0, 0],
                       [0, 0, 1-beta, 0],
                       [2 alpha, 0, 0, 1+beta]] - (c/4) diag(1, -1, 1, -1)

    """
    alpha, beta, c = channel_at(rates, t)
    rho = 0.25 * np.array([[1 + beta, 0, 0, 2 * alpha],
                           [0, 1 - beta, 0, 0],
                           [0, 0, 1 - beta, 0],
                           [2 * alpha, 0, 0, 1 + beta]], dtype=complex)
    rho -= 0.25 * c * np.diag([1.0, -1.0, 1.0, -1.0])
    return TwoQubitState(rho=rho)


########################
#  Long-time behavior
########################

def limit_time(rates):
    """Time standing in for t -> infinity, ``30 / a`` after the onset."""
    a = rates.a_at(rates.onset)
    if a <= 0:
        raise InfeasibleRates('Limits need a > 0')
    return rates.onset + LIMIT_FACTOR / a


def channel_limit(rates):
    """Channel coefficients at :func:`limit_time`, checked against ``40 / a``."""
    limit = channel_at(rates, limit_time(rates))
    check = channel_at(rates, rates.onset + CHECK_FACTOR / rates.a_at(rates.onset))
    if max(abs(p - q) for p, q in zip(limit, check)) > 1e-8:
        LOGGER.warning('Channel has not converged at t = %g: %s vs %s', limit_time(rates), limit, check)
    return limit


def asymptotic_image(rates):
    """Disk to which the Bloch ball is mapped for t -> infinity under the optimal rate.

    Returns
    -------
    AsymptoticImage
        ``radius = sqrt(1 - (x/a)^2) / 2`` and ``center = -x/a`` on the z axis

    """
    if not rates.is_constant:
        raise ValueError('asymptotic_image needs constant a and x')
    a, x = float(rates.a), float(rates.x)
    if abs(x) > a:
        raise InfeasibleRates('|x| = {} exceeds a = {}'.format(abs(x), a))
    ratio = x / a
    return AsymptoticImage(radius=0.5 * np.sqrt(1.0 - ratio ** 2), center=-ratio)
