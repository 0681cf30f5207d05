# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""This module defines the ``enmtoolkit`` script that computes tables of the covariant dynamics."""

import sys
import tempfile

from nipype import logging

from pyenm.config import RunConfig
from pyenm.errors import ConfigError, InfeasibleRates, PyENMError, VerificationFailed
from pyenm.interfaces.process import ProcessSpectrum
from pyenm.interfaces.trajectories import (BlochTrajectory, ChoiTrajectory, CoherenceTrajectory,
                                           CorrelationTrajectories, FisherInformationTrajectory)
from pyenm.interfaces.utils import format_table, setup_logging
from pyenm.interfaces.verification import VERIFY_COLUMNS
from pyenm.parser import get_parser
from pyenm.pipelines.verification import VerificationPipeline

COMMAND_INTERFACES = {
    'trajectory': BlochTrajectory,
    'choi': ChoiTrajectory,
    'correlations': CorrelationTrajectories,
    'coherence': CoherenceTrajectory,
    'qfi': FisherInformationTrajectory,
    'spectrum': ProcessSpectrum,
}

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_INFEASIBLE_RATES = 2
EXIT_VERIFICATION_FAILED = 3


def _run_verification(config, sink):
    if config.work_dir:
        pipeline = VerificationPipeline(config.work_dir, suites=config.suite, seed=config.seed)
        rows, failures = pipeline.run(number_of_cores=config.nb_of_threads)
    else:
        with tempfile.TemporaryDirectory(prefix='enm-') as work_dir:
            pipeline = VerificationPipeline(work_dir, suites=config.suite, seed=config.seed)
            rows, failures = pipeline.run(number_of_cores=config.nb_of_threads)
    sink.write(format_table(VERIFY_COLUMNS, rows, config.output_format))
    if failures:
        raise VerificationFailed(failures)


def run(config, sink=None):
    """Execute one ``enmtoolkit`` command and write its table to ``sink``.

    Parameters
    ----------
    config <pyenm.config.RunConfig>
        Configuration of the run

    sink <file-like>
        Stream receiving the table (default is ``sys.stdout``)

    Returns
    -------
    exit_code : int
        0 on success

    Raises
    ------
    ConfigError, InfeasibleRates
        If the configuration is invalid

    VerificationFailed
        If a property check of the ``verify`` command fails. The table is
        written before the exception is raised.

    """
    sink = sys.stdout if sink is None else sink
    config.validate()

    if config.command == 'verify':
        _run_verification(config, sink)
        return EXIT_SUCCESS

    iface = COMMAND_INTERFACES[config.command]()
    accepted = set(iface.inputs.copyable_trait_names())
    for name in config.editable_traits():
        if name in accepted:
            setattr(iface.inputs, name, getattr(config, name))
    res = iface.run()
    sink.write(format_table(res.outputs.columns, res.outputs.rows, config.output_format))
    return EXIT_SUCCESS


def main(argv=None):
    """Main function of the ``enmtoolkit`` script.

    Returns
    -------
    exit_code : {0, 1, 2, 3}
        An exit code given to `sys.exit()` that can be:

            * '0' in case of successful completion

            * '1' in case of an invalid configuration

            * '2' if the rates admit no completely positive dynamics

            * '3' if a verification check failed
    """
    try:
        parser = get_parser()
        args = vars(parser.parse_args(argv))
    except ConfigError as e:
        print(f'enmtoolkit: error: {e}', file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_SUCCESS

    param_file = args.pop('param_file', None)
    try:
        config = RunConfig.from_sources(args, param_file=param_file)
        setup_logging(config.verbose)
        exit_code = run(config)
    except ConfigError as e:
        print(f'enmtoolkit: error: {e}', file=sys.stderr)
        exit_code = EXIT_CONFIG_ERROR
    except InfeasibleRates as e:
        print(f'enmtoolkit: infeasible rates: {e}', file=sys.stderr)
        exit_code = EXIT_INFEASIBLE_RATES
    except VerificationFailed as e:
        print(f'enmtoolkit: {e}', file=sys.stderr)
        exit_code = EXIT_VERIFICATION_FAILED
    except PyENMError as e:
        print(f'enmtoolkit: {type(e).__name__}: {e}', file=sys.stderr)
        exit_code = EXIT_CONFIG_ERROR
    except RuntimeError as e:
        # Nipype reports crashed nodes as RuntimeError
        logging.getLogger('nipype.workflow').error('Workflow failed: %s', e)
        exit_code = EXIT_VERIFICATION_FAILED if args.get('command') == 'verify' else EXIT_CONFIG_ERROR

    return exit_code


if __name__ == '__main__':
    sys.exit(main())
