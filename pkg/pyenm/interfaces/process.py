# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM process tomography interface."""

import numpy as np

from nipype.interfaces.base import traits, BaseInterface, BaseInterfaceInputSpec

from pyenm.interfaces.trajectories import TableOutputSpec
from pyenm.interfaces.utils import parallel_map
from pyenm.tomography import process_spectrum


class ProcessSpectrumInputSpec(BaseInterfaceInputSpec):
    """Class used to represent inputs of the ProcessSpectrum interface."""

    s_max = traits.Float(4.0, desc='Largest decoherence exponent', usedefault=True)
    points = traits.Int(100, desc='Number of exponents on [0, s_max]', usedefault=True)
    nb_of_threads = traits.Int(0, desc='Number of worker threads (0: automatic)', usedefault=True)


class ProcessSpectrum(BaseInterface):
    """Eigenvalue moduli of the process matrix of the simulated optical channel.

    The moduli are sorted in decreasing order; ``product`` is their product.

    Example
    ----------
    >>> from pyenm.interfaces.process import ProcessSpectrum
    >>> spectrum = ProcessSpectrum()
    >>> spectrum.inputs.s_max = 4.0
    >>> spectrum.inputs.points = 10
    >>> spectrum.run()  # doctest: +SKIP

    """

    input_spec = ProcessSpectrumInputSpec
    output_spec = TableOutputSpec

    m_columns = ['s', 'l1', 'l2', 'l3', 'l4', 'product']
    m_rows = []

    def _run_interface(self, runtime):
        exponents = np.linspace(0.0, self.inputs.s_max, self.inputs.points)
        samples = parallel_map(process_spectrum, exponents, self.inputs.nb_of_threads)
        self.m_rows = [[sample.s] + list(sample.moduli) + [sample.product] for sample in samples]
        return runtime

    def _list_outputs(self):
        outputs = self._outputs().get()
        outputs['columns'] = list(self.m_columns)
        outputs['rows'] = self.m_rows
        return outputs
