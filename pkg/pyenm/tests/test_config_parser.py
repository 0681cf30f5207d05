# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the commandline parser and of the run configuration."""

import json

import pytest

from pyenm.config import COMMANDS, RunConfig
from pyenm.errors import ConfigError, InfeasibleRates
from pyenm.parser import get_parser


def _parse(argv):
    return vars(get_parser().parse_args(argv))


def test_parser_correlations():
    args = _parse('correlations --a 1 --x 0 --f optimal --t-max 3 --points 50 --format csv'.split())
    assert args == {'command': 'correlations', 'a': 1.0, 'x': 0.0, 'f_mode': 'optimal',
                    't_max': 3.0, 'points': 50, 'output_format': 'csv'}


def test_parser_omits_missing_options():
    assert _parse(['spectrum']) == {'command': 'spectrum'}
    assert _parse(['verify', '--suite', 'spectrum', '--seed', '7']) == \
        {'command': 'verify', 'suite': 'spectrum', 'seed': 7}


def test_parser_vectors_and_flags():
    args = _parse(['qfi', '--r0', '0', '1', '0', '--omega', '2.5', '--verbose', '--spacing', 'log'])
    assert args['r0'] == [0.0, 1.0, 0.0]
    assert args['omega'] == 2.5
    assert args['verbose'] is True
    assert args['spacing'] == 'log'


@pytest.mark.parametrize("argv", [
    [],
    ['plot'],
    ['correlations', '--a', 'one'],
    ['spectrum', '--t-max', '3'],
    ['choi', '--format', 'xml'],
])
def test_parser_errors(argv):
    with pytest.raises(ConfigError):
        get_parser().parse_args(argv)


def test_parser_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        get_parser().parse_args(['--version'])
    assert excinfo.value.code == 0
    assert 'PyENM version' in capsys.readouterr().out


def test_every_command_has_a_subparser():
    for command in COMMANDS:
        assert _parse([command])['command'] == command


def test_config_defaults():
    config = RunConfig(command='trajectory')
    config.validate()
    assert config.f_mode == 'optimal'
    assert list(config.r0) == [1.0, 0.0, 0.0]
    assert config.output_format == 'csv'


def test_param_file_and_flag_precedence(tmp_path):
    param_file = tmp_path / 'params.json'
    param_file.write_text(json.dumps({'a': 2.0, 'x': 0.5, 't_max': 10.0, 'output_format': 'json'}))
    config = RunConfig.from_sources({'command': 'choi', 't_max': 4.0}, param_file=str(param_file))
    assert config.a == 2.0
    assert config.x == 0.5
    assert config.t_max == 4.0
    assert config.output_format == 'json'


@pytest.mark.parametrize("content", ['{"a": ', '[1, 2]', '{"colour": "red"}', '{"points": "many"}'])
def test_invalid_param_file(tmp_path, content):
    param_file = tmp_path / 'params.json'
    param_file.write_text(content)
    with pytest.raises(ConfigError):
        RunConfig.from_sources({'command': 'choi'}, param_file=str(param_file))


def test_missing_param_file(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig.from_sources({'command': 'choi'}, param_file=str(tmp_path / 'missing.json'))


@pytest.mark.parametrize("values", [
    {'t_min': -1.0},
    {'t_min': 2.0, 't_max': 1.0},
    {'points': 1},
    {'f_mode': 'maximal'},
    {'f_mode': 'expr:sin(t)'},
    {'onset': -0.5},
    {'nb_of_threads': -2},
])
def test_validate_config_errors(values):
    config = RunConfig(command='correlations', **values)
    with pytest.raises(ConfigError):
        config.validate()


def test_validate_spectrum_range():
    RunConfig(command='spectrum', t_max=-1.0).validate()
    with pytest.raises(ConfigError):
        RunConfig(command='spectrum', s_max=0.0).validate()


@pytest.mark.parametrize("values", [{'a': 1.0, 'x': 1.5}, {'a': -1.0, 'x': 0.0, 'f_mode': 'zero'}])
def test_validate_infeasible_rates(values):
    with pytest.raises(InfeasibleRates):
        RunConfig(command='choi', **values).validate()


def test_non_optimal_rate_allows_large_x():
    RunConfig(command='choi', a=1.0, x=1.5, f_mode='zero').validate()
