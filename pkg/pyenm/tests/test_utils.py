# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""Tests of the grids, rate expressions, worker counts and table rendering."""

import csv
import io
import json
import logging as stdlib_logging
import multiprocessing
import sys

import numpy as np
import pytest

from pyenm.errors import ConfigError
from pyenm.interfaces.utils import (format_table, parallel_map, parse_f_mode, parse_rate_expression,
                                    return_valid_nb_of_threads, setup_logging, time_grid)


def test_linear_time_grid():
    assert np.allclose(time_grid(0, 3, 4), [0.0, 1.0, 2.0, 3.0])


def test_log_time_grid_starting_at_zero():
    grid = time_grid(0.0, 5.0, 50, 'log')
    assert grid.size == 50
    assert grid[0] == 0.0
    assert grid[1] == pytest.approx(1e-4)
    assert grid[-1] == pytest.approx(5.0)
    assert np.all(np.diff(grid) > 0)


def test_log_time_grid():
    assert np.allclose(time_grid(1e-3, 1.0, 4, 'log'), [1e-3, 1e-2, 1e-1, 1.0])


@pytest.mark.parametrize("t_min,t_max,points,spacing", [
    (-1.0, 1.0, 10, 'linear'),
    (1.0, 1.0, 10, 'linear'),
    (0.0, 1.0, 1, 'linear'),
    (0.0, 1.0, 10, 'cubic'),
])
def test_invalid_time_grid(t_min, t_max, points, spacing):
    with pytest.raises(ConfigError):
        time_grid(t_min, t_max, points, spacing)


@pytest.mark.parametrize("text,t,expected", [
    ('-tanh(t)', 1.0, -np.tanh(1.0)),
    ('0.5*exp(-t^2)', 2.0, 0.5 * np.exp(-4.0)),
    ('(sinh(t) + cosh(t)) / 2', 0.3, 0.5 * np.exp(0.3)),
    ('2', 7.0, 2.0),
])
def test_rate_expression(text, t, expected):
    assert parse_rate_expression(text)(t) == pytest.approx(expected)


@pytest.mark.parametrize("text", ['', 'sin(t)', 't; import os', '__import__("os")', 'x*t', 'exp(t', 'T'])
def test_invalid_rate_expression(text):
    with pytest.raises(ConfigError):
        parse_rate_expression(text)


def test_f_modes():
    assert parse_f_mode('optimal') == 'optimal'
    assert parse_f_mode('zero') == 0.0
    assert parse_f_mode('constant:-0.25') == -0.25
    assert parse_f_mode('expr:-t')(2.0) == pytest.approx(-2.0)
    for text in ('constant:abc', 'linear', 'expr:cos(t)'):
        with pytest.raises(ConfigError):
            parse_f_mode(text)


def test_valid_nb_of_threads(monkeypatch):
    monkeypatch.delenv('ENM_THREADS', raising=False)
    cores = multiprocessing.cpu_count()
    assert return_valid_nb_of_threads(0) == cores
    assert return_valid_nb_of_threads(1) == 1
    assert return_valid_nb_of_threads(cores + 5) == cores
    with pytest.raises(ConfigError):
        return_valid_nb_of_threads(-1)


def test_threads_environment_cap(monkeypatch):
    monkeypatch.setenv('ENM_THREADS', '1')
    assert return_valid_nb_of_threads(0) == 1
    assert return_valid_nb_of_threads(8) == 1
    monkeypatch.setenv('ENM_THREADS', 'many')
    with pytest.raises(ConfigError):
        return_valid_nb_of_threads(0)


def test_parallel_map_keeps_order():
    items = list(range(50))
    assert parallel_map(lambda i: i * i, items, nb_of_threads=4) == [i * i for i in items]
    assert parallel_map(lambda i: i, [], nb_of_threads=4) == []


def test_csv_table():
    text = format_table(['t', 'E', 'ok'], [[0.0, 0.5, True], [1.0 / 3.0, np.inf, False]])
    assert text == 't,E,ok\n0,0.5,true\n0.333333333333,inf,false\n'
    assert text.endswith('\n') and not text.endswith('\n\n')


def test_json_table():
    text = format_table(['t', 'bound', 'name'], [[np.float64(0.1), np.inf, 'states']], 'json')
    assert json.loads(text) == [{'t': 0.1, 'bound': None, 'name': 'states'}]
    assert text.endswith(']\n')


def test_unknown_table_format():
    with pytest.raises(ConfigError):
        format_table(['t'], [[0.0]], 'xml')


def test_setup_logging_uses_stderr():
    setup_logging(verbose=True)
    handlers = [h for h in stdlib_logging.getLogger('nipype').handlers
                if type(h) is stdlib_logging.StreamHandler]
    assert all(h.stream is sys.stderr for h in handlers)
    assert stdlib_logging.getLogger('nipype.workflow').level == stdlib_logging.DEBUG
    setup_logging(verbose=False)
    assert stdlib_logging.getLogger('nipype.workflow').level == stdlib_logging.WARNING


def test_log_time_grid_with_two_points():
    assert np.allclose(time_grid(0.0, 3.0, 2, 'log'), [0.0, 3.0])


def test_csv_table_quotes_cells_with_commas():
    text = format_table(['suite', 'check', 'passed', 'detail'],
                        [['limits', 'discord_limit', True, 'n=4, max error 1e-07 (tol 1e-04)']])
    rows = list(csv.reader(io.StringIO(text)))
    assert [len(row) for row in rows] == [4, 4]
    assert rows[1][3] == 'n=4, max error 1e-07 (tol 1e-04)'
