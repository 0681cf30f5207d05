# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM trajectory interfaces.

Each interface evaluates one family of quantities of the covariant dynamics on
a time grid and returns its table as ``columns`` and ``rows``.

"""

import numpy as np

from nipype import logging
from nipype.interfaces.base import traits, TraitedSpec, BaseInterface, BaseInterfaceInputSpec

from pyenm.correlations import closed_form_trajectories, l1_coherence
from pyenm.covariant import (CovariantRates, channel_at, choi_closed_form, covariant_generator,
                             cptp_conditions)
from pyenm.errors import ZeroInformation
from pyenm.interfaces.utils import parse_f_mode, time_grid
from pyenm.lindblad import propagate
from pyenm.metrology import PhaseEstimationSetup, cramer_rao, qfi_covariant
from pyenm.qstate import QubitState

IFLOGGER = logging.getLogger('nipype.interface')


class TrajectoryInputSpec(BaseInterfaceInputSpec):
    """Class used to represent the rates and time grid shared by trajectory interfaces."""

    a = traits.Float(1.0, desc='Transverse rate a', usedefault=True)
    x = traits.Float(0.0, desc='Antisymmetric rate x', usedefault=True)
    f_mode = traits.Str('optimal', desc='Dephasing rate: optimal, zero, constant:<v> or expr:<e>',
                        usedefault=True)
    onset = traits.Float(0.0, desc='Onset time of the dynamics', usedefault=True)
    t_min = traits.Float(0.0, desc='First time point', usedefault=True)
    t_max = traits.Float(5.0, desc='Last time point', usedefault=True)
    points = traits.Int(100, desc='Number of time points', usedefault=True)
    spacing = traits.Enum('linear', 'log', desc='Spacing of the time grid', usedefault=True)
    nb_of_threads = traits.Int(0, desc='Number of worker threads (0: automatic)', usedefault=True)


class TableOutputSpec(TraitedSpec):
    """Class used to represent the table produced by a PyENM interface."""

    columns = traits.List(traits.Str, desc='Column names')
    rows = traits.List(traits.List, desc='Rows in grid order')


class _TrajectoryInterface(BaseInterface):

    output_spec = TableOutputSpec

    m_columns = []
    m_rows = []

    def _rates(self):
        return CovariantRates(a=self.inputs.a, x=self.inputs.x,
                              f=parse_f_mode(self.inputs.f_mode), onset=self.inputs.onset)

    def _grid(self):
        return time_grid(self.inputs.t_min, self.inputs.t_max, self.inputs.points, self.inputs.spacing)

    def _list_outputs(self):
        outputs = self._outputs().get()
        outputs['columns'] = list(self.m_columns)
        outputs['rows'] = self.m_rows
        return outputs


#######################
#  Bloch trajectory
#######################

class BlochTrajectoryInputSpec(TrajectoryInputSpec):
    """Class used to represent inputs of the BlochTrajectory interface."""

    r0 = traits.List(traits.Float, [1.0, 0.0, 0.0], minlen=3, maxlen=3,
                     desc='Initial Bloch vector', usedefault=True)
    omega = traits.Float(1.0, desc='Rate omega of the Hamiltonian (omega / 2) sigma_z', usedefault=True)


class BlochTrajectory(_TrajectoryInterface):
    """Propagates a Bloch vector with the master equation of the covariant rates.

    Example
    ----------
    >>> from pyenm.interfaces.trajectories import BlochTrajectory
    >>> trajectory = BlochTrajectory()
    >>> trajectory.inputs.t_max = 3.0
    >>> trajectory.inputs.points = 50
    >>> trajectory.run()  # doctest: +SKIP

    """

    input_spec = BlochTrajectoryInputSpec

    m_columns = ['t', 'r1', 'r2', 'r3', 'purity']

    def _run_interface(self, runtime):
        r0 = QubitState.from_bloch(self.inputs.r0).bloch
        grid = self._grid()
        pmap = propagate(covariant_generator(self._rates(), self.inputs.omega), r0=r0, grid=grid)
        # propagate prepends t = 0 to grids starting later
        trajectory = pmap.trajectory[-len(grid):]
        self.m_rows = [[t, r[0], r[1], r[2], 0.5 * (1.0 + r @ r)] for t, r in zip(grid, trajectory)]
        return runtime


#######################
#  Choi trajectory
#######################

class ChoiTrajectory(_TrajectoryInterface):
    """Evaluates the channel coefficients and its complete-positivity margins.

    ``min_eig`` is the smallest eigenvalue of the Choi state and ``slack_b`` the
    slack of ``4 alpha^2 + c^2 <= (1 + beta)^2``, zero for the optimal rate.
    """

    input_spec = TrajectoryInputSpec

    m_columns = ['t', 'alpha', 'beta', 'c', 'min_eig', 'slack_b']

    def _run_interface(self, runtime):
        rates = self._rates()
        rows = []
        for t in self._grid():
            alpha, beta, c = channel_at(rates, t)
            min_eig = np.linalg.eigvalsh(choi_closed_form(rates, t).rho)[0]
            rows.append([t, alpha, beta, c, min_eig, cptp_conditions(rates, t).slack_b])
        self.m_rows = rows
        return runtime


#######################
#  Correlations
#######################

class CorrelationTrajectories(_TrajectoryInterface):
    """Computes negativity, mutual information, discord, geometric discord and coherence.

    The first four are evaluated on the Choi state of the channel, the
    coherence is that of the channel output for the input |+>.

    Example
    ----------
    >>> from pyenm.interfaces.trajectories import CorrelationTrajectories
    >>> correlations = CorrelationTrajectories()
    >>> correlations.inputs.a = 1.0
    >>> correlations.inputs.x = 0.5
    >>> correlations.run()  # doctest: +SKIP

    """

    input_spec = TrajectoryInputSpec

    m_columns = ['t', 'E', 'I', 'Q', 'D', 'C']

    def _run_interface(self, runtime):
        rows = closed_form_trajectories(self._rates(), self._grid(),
                                        nb_of_threads=self.inputs.nb_of_threads)
        self.m_rows = [list(row) for row in rows]
        IFLOGGER.debug('Computed %d correlation rows', len(rows))
        return runtime


#######################
#  Coherence
#######################

class CoherenceTrajectoryInputSpec(TrajectoryInputSpec):
    """Class used to represent inputs of the CoherenceTrajectory interface."""

    r0 = traits.List(traits.Float, [1.0, 0.0, 0.0], minlen=3, maxlen=3,
                     desc='Initial Bloch vector', usedefault=True)


class CoherenceTrajectory(_TrajectoryInterface):
    """Compares the propagated l1-norm of coherence with ``C(0) alpha(t)``."""

    input_spec = CoherenceTrajectoryInputSpec

    m_columns = ['t', 'C', 'C_closed']

    def _run_interface(self, runtime):
        rates = self._rates()
        initial = QubitState.from_bloch(self.inputs.r0)
        c0 = l1_coherence(initial)
        grid = self._grid()
        pmap = propagate(covariant_generator(rates), r0=initial.bloch, grid=grid)
        trajectory = pmap.trajectory[-len(grid):]
        # l1-coherence of a qubit is the transverse Bloch length
        self.m_rows = [[t, float(np.hypot(r[0], r[1])), c0 * channel_at(rates, t).alpha]
                       for t, r in zip(grid, trajectory)]
        return runtime


#######################
#  Fisher information
#######################

class FisherInformationTrajectoryInputSpec(TrajectoryInputSpec):
    """Class used to represent inputs of the FisherInformationTrajectory interface."""

    omega = traits.Float(1.0, desc='True value of omega', usedefault=True)
    r0 = traits.List(traits.Float, [1.0, 0.0, 0.0], minlen=3, maxlen=3,
                     desc='Bloch vector of the probe', usedefault=True)


class FisherInformationTrajectory(_TrajectoryInterface):
    """Quantum Fisher information of omega and the Cramer-Rao bound along the grid.

    The bound is infinite (``null`` in JSON) where the Fisher information vanishes.
    """

    input_spec = FisherInformationTrajectoryInputSpec

    m_columns = ['t', 'F', 'bound']

    def _run_interface(self, runtime):
        setup = PhaseEstimationSetup(omega=self.inputs.omega, rates=self._rates(),
                                     initial=QubitState.from_bloch(self.inputs.r0))
        rows = []
        for t in self._grid():
            fisher = qfi_covariant(setup, t)
            try:
                bound = cramer_rao(fisher)
            except ZeroInformation:
                bound = np.inf
            rows.append([t, fisher, bound])
        self.m_rows = rows
        return runtime
