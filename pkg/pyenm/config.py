# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Run configuration of the ``enmtoolkit`` commandline."""

import json
import os

from traits.api import Bool, Enum, Float, HasStrictTraits, Int, List, Str, TraitError

from pyenm.errors import ConfigError, InfeasibleRates
from pyenm.interfaces.utils import parse_f_mode, time_grid
from pyenm.interfaces.verification import select_suites

COMMANDS = ('trajectory', 'choi', 'correlations', 'coherence', 'qfi', 'spectrum', 'verify')


class RunConfig(HasStrictTraits):
    """Class used to represent the configuration of one ``enmtoolkit`` run.

    Values come from the trait defaults, then from an optional JSON parameter
    file whose keys are trait names, then from explicit commandline flags.

    Attributes
    ----------
    command <string>
        One of ``trajectory``, ``choi``, ``correlations``, ``coherence``, ``qfi``,
        ``spectrum`` and ``verify``

    a, x <float>
        Constant rates of the covariant decoherence matrix

    f_mode <string>
        ``optimal``, ``zero``, ``constant:<value>`` or ``expr:<expression of t>``

    t_min, t_max, points, spacing
        Time grid (``spacing`` is ``linear`` or ``log``)

    s_max <float>
        Largest decoherence exponent of the ``spectrum`` command

    seed <int>
        Seed of the randomized verification suites

    Examples
    --------
    >>> cfg = RunConfig(command='correlations', t_max=3.0, points=50)
    >>> cfg.validate()

    """

    command = Enum(*COMMANDS)
    a = Float(1.0)
    x = Float(0.0)
    f_mode = Str('optimal')
    onset = Float(0.0)
    t_min = Float(0.0)
    t_max = Float(5.0)
    points = Int(100)
    spacing = Enum('linear', 'log')
    s_max = Float(4.0)
    omega = Float(1.0)
    r0 = List(Float, [1.0, 0.0, 0.0], minlen=3, maxlen=3)
    output_format = Enum('csv', 'json')
    seed = Int(0)
    suite = Str('all')
    nb_of_threads = Int(0)
    work_dir = Str('')
    verbose = Bool(False)

    @classmethod
    def from_sources(cls, flags, param_file=None):
        """Build a configuration from a parameter file and explicit flags.

        Parameters
        ----------
        flags <dict>
            Trait values given explicitly on the commandline

        param_file <string>
            Path to a JSON object of trait values (optional)

        """
        config = cls()
        if param_file:
            if not os.path.isfile(param_file):
                raise ConfigError('Parameter file {} does not exist'.format(param_file))
            with open(param_file, 'r') as f:
                try:
                    params = json.load(f)
                except ValueError as e:
                    raise ConfigError('Cannot read {}: {}'.format(param_file, e))
            if not isinstance(params, dict):
                raise ConfigError('Parameter file must contain a JSON object')
            config.update(params)
        config.update(flags)
        return config

    def update(self, values):
        unknown = set(values) - set(self.editable_traits())
        if unknown:
            raise ConfigError('Unknown parameters: {}'.format(', '.join(sorted(unknown))))
        try:
            self.trait_set(**values)
        except TraitError as e:
            raise ConfigError(str(e))

    def validate(self):
        """Check the run invariants.

        Raises
        ------
        ConfigError
            On an invalid time range, f mode, suite or thread count

        InfeasibleRates
            If the optimal rate is requested with |x| > a

        """
        if self.command == 'spectrum':
            if self.s_max <= 0 or self.points < 2:
                raise ConfigError('spectrum needs s_max > 0 and points >= 2')
        else:
            time_grid(self.t_min, self.t_max, self.points, self.spacing)
        if self.onset < 0:
            raise ConfigError('onset must be non-negative, got {}'.format(self.onset))
        if self.nb_of_threads < 0:
            raise ConfigError('nb_of_threads must be non-negative, got {}'.format(self.nb_of_threads))
        if self.command == 'verify':
            select_suites(self.suite)
        f = parse_f_mode(self.f_mode)
        if self.a < 0:
            raise InfeasibleRates('a must be non-negative, got {}'.format(self.a))
        if f == 'optimal' and abs(self.x) > self.a:
            raise InfeasibleRates('The optimal rate requires |x| <= a, got x={}, a={}'.format(self.x, self.a))
