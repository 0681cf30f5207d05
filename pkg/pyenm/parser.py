# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM Commandline Parser."""

import argparse

from pyenm.errors import ConfigError
from pyenm.info import __version__
from pyenm.info import __release_date__


class ENMArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`~pyenm.errors.ConfigError` instead of exiting."""

    def error(self, message):
        raise ConfigError(message)


def _add_rates_arguments(p):
    p.add_argument('--a', type=float,
                   help='Transverse rate a of the covariant decoherence matrix (Default: 1)')
    p.add_argument('--x', type=float,
                   help='Antisymmetric rate x of the covariant decoherence matrix (Default: 0)')
    p.add_argument('--f', dest='f_mode',
                   help='Dephasing rate f: "optimal" (correlation-optimal rate), "zero", '
                        '"constant:<value>" or "expr:<expression of t>" using numbers, t, '
                        '+ - * / ^, exp, tanh, sinh, cosh and parentheses (Default: optimal)')
    p.add_argument('--onset', type=float,
                   help='Time at which the dynamics is switched on (Default: 0)')


def _add_grid_arguments(p):
    p.add_argument('--t-min', dest='t_min', type=float, help='First time point (Default: 0)')
    p.add_argument('--t-max', dest='t_max', type=float, help='Last time point (Default: 5)')
    p.add_argument('--points', type=int, help='Number of grid points (Default: 100)')
    p.add_argument('--spacing', choices=['linear', 'log'],
                   help='Spacing of the time grid. A log grid starting at 0 continues at 1e-4 '
                        '(Default: linear)')


def get_parser():
    """Create and return the parser object of the ``enmtoolkit`` commandline.

    Options that are not given are absent from the parsed namespace, so that
    they do not override values of the parameter file.
    """
    common = ENMArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument('--format', dest='output_format', choices=['csv', 'json'],
                        help='Output format written to stdout (Default: csv)')
    common.add_argument('--param_file', type=str,
                        help='Path to a JSON file of run parameters. '
                             'Explicit commandline flags take precedence.')
    common.add_argument('--nb_of_threads', type=int,
                        help='Specify number of worker threads and processes, '
                             'capped by the ENM_THREADS environment variable '
                             '(Default: 0, meaning it will be determined automatically)')
    common.add_argument('--verbose', action='store_true',
                        help='Print debug messages on stderr')

    p = ENMArgumentParser(prog='enmtoolkit',
                          description='Eternally non-Markovian qubit dynamics: trajectories, '
                                      'correlations, Fisher information, process spectra '
                                      'and verification suites.')
    p.add_argument('-v', '--version',
                   action='version',
                   version=f'PyENM version {__version__} (Released: {__release_date__})')
    subparsers = p.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    sub = subparsers.add_parser('trajectory', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Bloch vector and purity propagated by the master equation')
    _add_rates_arguments(sub)
    _add_grid_arguments(sub)
    sub.add_argument('--r0', type=float, nargs=3, metavar=('R1', 'R2', 'R3'),
                     help='Initial Bloch vector (Default: 1 0 0)')
    sub.add_argument('--omega', type=float,
                     help='Rate omega of the Hamiltonian (omega / 2) sigma_z (Default: 1)')

    sub = subparsers.add_parser('choi', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Channel coefficients, Choi minimal eigenvalue and '
                                     'complete-positivity slack')
    _add_rates_arguments(sub)
    _add_grid_arguments(sub)

    sub = subparsers.add_parser('correlations', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Negativity, mutual information, discord, geometric discord '
                                     'and coherence of the Choi state')
    _add_rates_arguments(sub)
    _add_grid_arguments(sub)

    sub = subparsers.add_parser('coherence', parents=[common], argument_default=argparse.SUPPRESS,
                                help='l1-norm of coherence, propagated and closed form')
    _add_rates_arguments(sub)
    _add_grid_arguments(sub)
    sub.add_argument('--r0', type=float, nargs=3, metavar=('R1', 'R2', 'R3'),
                     help='Initial Bloch vector (Default: 1 0 0)')

    sub = subparsers.add_parser('qfi', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Quantum Fisher information of omega and Cramer-Rao bound')
    _add_rates_arguments(sub)
    _add_grid_arguments(sub)
    sub.add_argument('--omega', type=float,
                     help='True value of omega (Default: 1)')
    sub.add_argument('--r0', type=float, nargs=3, metavar=('R1', 'R2', 'R3'),
                     help='Bloch vector of the probe (Default: 1 0 0)')

    sub = subparsers.add_parser('spectrum', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Process-matrix eigenvalue moduli of the optical channel')
    sub.add_argument('--s-max', dest='s_max', type=float,
                     help='Largest decoherence exponent (Default: 4)')
    sub.add_argument('--points', type=int, help='Number of exponents from 0 to s-max (Default: 100)')

    sub = subparsers.add_parser('verify', parents=[common], argument_default=argparse.SUPPRESS,
                                help='Run the property suites and exit nonzero on any failure')
    sub.add_argument('--suite', type=str,
                     help='Suite name or "all" (Default: all)')
    sub.add_argument('--seed', type=int,
                     help='Seed of the randomized suites (Default: 0)')
    sub.add_argument('--work_dir', type=str,
                     help='Directory of the nipype workflow (Default: a temporary directory)')
    return p
