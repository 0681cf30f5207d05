# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Module for the verification pipeline running the property suites."""

import os
import shutil

from nipype import config, logging
from nipype.interfaces.utility import Merge
from nipype.pipeline import Node, Workflow

import pyenm.interfaces.verification as verification
from pyenm.interfaces.utils import return_valid_nb_of_threads

# Get pyenm version
from pyenm.info import __version__


class VerificationPipeline:
    """Class used to represent the workflow of the verification pipeline.

    Attributes
    -----------
    work_dir <string>
        Base directory of the nipype workflow (required)

    suites <list<string>>
        Names of the property suites to run, in output order

    seed <int>
        Seed of the randomized checks (default is 0)

    wf <nipype.pipeline.Workflow>
        Nipype workflow of the verification pipeline

    Examples
    --------
    >>> from pyenm.pipelines.verification import VerificationPipeline
    >>> pipeline = VerificationPipeline('/tmp/enm', suites=['spectrum', 'limits'], seed=7)
    >>> pipeline.create_workflow()  # doctest: +SKIP
    >>> rows, failures = pipeline.run(number_of_cores=2)  # doctest: +SKIP

    """

    work_dir = None
    suites = None
    seed = None
    wf = None

    def __init__(self, work_dir, suites='all', seed=0):
        """Constructor of VerificationPipeline class instance."""
        self.work_dir = work_dir
        self.suites = verification.select_suites(suites) if isinstance(suites, str) else list(suites)
        for name in self.suites:
            verification.select_suites(name)
        self.seed = seed

    def create_workflow(self):
        """Create the Nipype workflow of the verification pipeline.

        Every suite runs in its own node; a merge node gathers their rows in
        suite order and feeds the summary node.

        """
        wf_base_dir = os.path.join(self.work_dir, 'nipype', 'seed-{}'.format(self.seed))
        if not os.path.exists(wf_base_dir):
            os.makedirs(wf_base_dir)

        # Always recompute the suites
        shutil.rmtree(os.path.join(wf_base_dir, 'verification_pipeline'), ignore_errors=True)

        # Workflow name cannot begin with a number (otherwise ValueError)
        self.wf = Workflow(name='verification_pipeline', base_dir=wf_base_dir)

        if os.path.isfile(os.path.join(wf_base_dir, 'pypeline.log')):
            os.unlink(os.path.join(wf_base_dir, 'pypeline.log'))

        config.update_config({'logging': {'log_directory': os.path.join(wf_base_dir),
                                          'log_to_file': True},
                              'execution': {
                                  'remove_unnecessary_outputs': False,
                                  'stop_on_first_crash': False,
                                  'stop_on_first_rerun': False,
                                  'crashfile_format': 'txt',
                                  'crashdump_dir': wf_base_dir,
                                  'write_provenance': False}
                              })
        logging.update_logging(config)
        wflogger = logging.getLogger('nipype.workflow')
        wflogger.info('PyENM %s verification of suites %s', __version__, ', '.join(self.suites))

        merge = Node(interface=Merge(len(self.suites)), name='merge_checks')
        summary = Node(interface=verification.VerificationSummary(), name='summary')

        for index, name in enumerate(self.suites):
            suite = Node(interface=verification.PropertySuite(), name='suite_{}'.format(name))
            suite.inputs.suite = name
            suite.inputs.seed = self.seed
            self.wf.connect(suite, 'checks', merge, 'in{}'.format(index + 1))

        self.wf.connect(merge, 'out', summary, 'input_checks')

    def run(self, number_of_cores=1):
        """Execute the workflow of the verification pipeline.

        Parameters
        ----------
        number_of_cores <int>
            Number of cores / CPUs used by the workflow

        Returns
        -------
        (list, list)
            Rows ``[suite, check, passed, detail]`` and the failed checks

        """
        if self.wf is None:
            self.create_workflow()
        number_of_cores = return_valid_nb_of_threads(number_of_cores)
        if number_of_cores > 1:
            res = self.wf.run(plugin='MultiProc', plugin_args={'n_procs': number_of_cores})
        else:
            res = self.wf.run()

        summary = [node for node in res.nodes() if node.name == 'summary'][0]
        outputs = summary.result.outputs
        return outputs.rows, outputs.failures
