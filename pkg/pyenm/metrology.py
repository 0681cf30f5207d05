# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Quantum Fisher information of a phase imprinted by H = (omega / 2) sigma_z.

The phase-covariant channel commutes with rotations about z, so the probe at
time ``t`` is the channel output rotated by ``omega t`` and its derivative with
respect to ``omega`` is ``t ROTATION r``.

"""

from dataclasses import dataclass, field

import numpy as np

from pyenm.covariant import CovariantRates, closed_form_bloch, covariant_generator
from pyenm.errors import BlochOutOfBall, SingularPureState, ZeroInformation
from pyenm.lindblad import ROTATION, propagate
from pyenm.qstate import PSD_TOL, QubitState, pure_state

# Fisher information below this value carries no information
MIN_FISHER = 1e-300


def _plus_state():
    return pure_state(np.pi / 4)


@dataclass(frozen=True, eq=False)
class PhaseEstimationSetup:
    """Probe, dynamics and true value of the phase rate to estimate.

    Attributes
    ----------
    omega <float>
        Rate omega of the Hamiltonian (omega / 2) sigma_z

    rates <CovariantRates>
        Rates of the phase-covariant noise

    initial <QubitState>
        Probe state, |+> by default (l1-coherence 1)

    """

    omega: float = 1.0
    rates: CovariantRates = field(default_factory=CovariantRates)
    initial: QubitState = field(default_factory=_plus_state)

    @property
    def initial_coherence(self):
        return float(np.hypot(self.initial.bloch[0], self.initial.bloch[1]))


def _rotation(angle):
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def bloch_trajectory(setup, t, omega=None):
    """Bloch vector of the probe at time ``t`` (``omega`` defaults to ``setup.omega``)."""
    omega = setup.omega if omega is None else omega
    return _rotation(omega * t) @ closed_form_bloch(setup.rates, setup.initial.bloch, t)


def bloch_derivative(setup, t, omega=None):
    """Derivative of :func:`bloch_trajectory` with respect to omega, ``t ROTATION r``."""
    return t * ROTATION @ bloch_trajectory(setup, t, omega)


def qfi_bloch(r, dr):
    """Quantum Fisher information of a qubit from its Bloch vector and derivative.

    .. code-block:: text

        F = |dr|^2 + (r . dr)^2 / (1 - |r|^2)

    For pure states the second term is dropped, which requires ``r . dr = 0``.

    Examples
    --------
    >>> qfi_bloch([0, 0, 0], [2, 0, 0])
    4.0

    """
    r = np.asarray(r, dtype=float)
    dr = np.asarray(dr, dtype=float)
    norm2 = float(r @ r)
    if norm2 > 1.0 + PSD_TOL:
        raise BlochOutOfBall('Bloch vector has norm {:.12g} > 1'.format(np.sqrt(norm2)))
    overlap = float(r @ dr)
    if 1.0 - norm2 <= 1e-12:
        if abs(overlap) > 1e-9:
            raise SingularPureState('Pure state with r . dr = {:.3e}'.format(overlap))
        return float(dr @ dr)
    return float(dr @ dr + overlap ** 2 / (1.0 - norm2))


def qfi_covariant(setup, t):
    """Quantum Fisher information of omega at time ``t``, equal to ``t^2 C(t)^2``.

    Examples
    --------
    >>> from pyenm.covariant import CovariantRates
    >>> setup = PhaseEstimationSetup(rates=CovariantRates(a=1.0, x=0.0))
    >>> round(qfi_covariant(setup, 1.0), 6)
    0.322247

    """
    return qfi_bloch(bloch_trajectory(setup, t), bloch_derivative(setup, t))


def qfi_finite_difference(setup, t, step=1e-6, propagated=False):
    """Quantum Fisher information with a centered finite difference in omega.

    Parameters
    ----------
    setup <PhaseEstimationSetup>
        Estimation setup

    t <float>
        Time

    step <float>
        Step in omega

    propagated <bool>
        If True, the Bloch vectors are obtained by integrating the master
        equation with the Hamiltonian included instead of the closed form

    """
    if propagated:
        def trajectory(omega):
            gen = covariant_generator(setup.rates, omega)
            pmap = propagate(gen, r0=setup.initial.bloch, grid=[t], rtol=1e-12, atol=1e-14,
                             method='DOP853')
            return pmap.trajectory[-1]
    else:
        def trajectory(omega):
            return bloch_trajectory(setup, t, omega)
    r = trajectory(setup.omega)
    dr = (trajectory(setup.omega + step) - trajectory(setup.omega - step)) / (2.0 * step)
    return qfi_bloch(r, dr)


def cramer_rao(fisher):
    """Quantum Cramer-Rao bound ``1 / F`` on the variance of omega.

    Examples
    --------
    >>> cramer_rao(4.0)
    0.25

    """
    if np.isinf(fisher):
        return 0.0
    if not fisher > MIN_FISHER:
        raise ZeroInformation('Fisher information {!r} carries no information'.format(fisher))
    return 1.0 / float(fisher)
