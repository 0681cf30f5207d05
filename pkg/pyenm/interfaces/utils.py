# Copyright © 2026 The PyENM developers
#
#  This software is distributed under the open-source license Modified BSD.

"""PyENM utils functions."""

import csv
import io
import json
import logging as stdlib_logging
import math
import multiprocessing
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from tokenize import TokenError

import numpy as np
import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from nipype import config, logging

from pyenm.errors import ConfigError

IFLOGGER = logging.getLogger('nipype.interface')

# Environment variable capping the number of workers
THREADS_ENV = 'ENM_THREADS'

# Start of log-spaced grids that begin at t = 0
LOG_GRID_START = 1e-4

SIGNIFICANT_DIGITS = 12

_ALLOWED_FUNCTIONS = {'exp': sympy.exp, 'tanh': sympy.tanh, 'sinh': sympy.sinh, 'cosh': sympy.cosh}
_EXPRESSION_CHARACTERS = re.compile(r'^[0-9a-z.+\-*/^()\s]*$')
_IDENTIFIER = re.compile(r'[a-z_]+')


########################
#  Logging
########################

def setup_logging(verbose=False):
    """Set the nipype logging levels and send every stream handler to stderr.

    Parameters
    ----------
    verbose <bool>
        ``DEBUG`` messages if True, only ``WARNING`` and above otherwise

    """
    level = 'DEBUG' if verbose else 'WARNING'
    config.update_config({'logging': {'workflow_level': level,
                                      'interface_level': level,
                                      'utils_level': level,
                                      'log_to_file': False},
                          'execution': {'check_version': False}})
    logging.update_logging(config)
    for handler in stdlib_logging.getLogger('nipype').handlers:
        if type(handler) is stdlib_logging.StreamHandler:
            handler.setStream(sys.stderr)


########################
#  Workers
########################

def return_valid_nb_of_threads(nb_of_threads=0):
    """Function that checks and returns a valid number of worker threads.

    The number of cores available, and the ``ENM_THREADS`` environment variable
    when it is set, cap the requested value. A value of 0 selects the cap.

    Parameters
    ----------
    nb_of_threads <int>
        Number of threads initially requested (0 means determined automatically)

    Returns
    -------
    nb_of_threads <int>
        Valid number of threads

    Examples
    --------
    >>> return_valid_nb_of_threads(1)
    1

    """
    nb_of_cores = multiprocessing.cpu_count()
    cap = nb_of_cores
    env_value = os.environ.get(THREADS_ENV)
    if env_value:
        try:
            cap = max(1, min(cap, int(env_value)))
        except ValueError:
            raise ConfigError('{} must be an integer, got {!r}'.format(THREADS_ENV, env_value))

    if nb_of_threads < 0:
        raise ConfigError('Number of threads must be non-negative, got {}'.format(nb_of_threads))
    if nb_of_threads == 0:
        return cap
    if nb_of_threads > cap:
        IFLOGGER.warning('Value of %d set by "--nb_of_threads" is bigger than the number of '
                         'workers available (%d) and will be reset.', nb_of_threads, cap)
        return cap
    return nb_of_threads


def parallel_map(func, items, nb_of_threads=0):
    """Apply ``func`` to every item with a thread pool, keeping the input order.

    Parameters
    ----------
    func <callable>
        Function of one item

    items <iterable>
        Items to process

    nb_of_threads <int>
        Requested number of threads, validated by :func:`return_valid_nb_of_threads`

    """
    items = list(items)
    workers = min(return_valid_nb_of_threads(nb_of_threads), max(1, len(items)))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


########################
#  Grids and rates
########################

def time_grid(t_min, t_max, points, spacing='linear'):
    """Return ``points`` ascending times on [t_min, t_max].

    Log-spaced grids that start at 0 keep t = 0 as first point followed by
    ``points - 1`` log-spaced times from 1e-4.

    Examples
    --------
    >>> time_grid(0, 3, 4)
    array([0., 1., 2., 3.])

    """
    if points < 2 or t_min < 0 or t_max <= t_min:
        raise ConfigError('Invalid time range: t_min={}, t_max={}, points={}'.format(t_min, t_max, points))
    if spacing == 'linear':
        return np.linspace(t_min, t_max, points)
    if spacing == 'log':
        if t_min == 0 and points == 2:
            return np.array([0.0, float(t_max)])
        if t_min == 0:
            return np.concatenate([[0.0], np.geomspace(min(LOG_GRID_START, t_max / 2), t_max, points - 1)])
        return np.geomspace(t_min, t_max, points)
    raise ConfigError('Unknown spacing {!r}'.format(spacing))


def parse_rate_expression(text):
    """Compile a rate expression of the time ``t``.

    The grammar is restricted to numbers, ``t``, ``+ - * / ^``, parentheses,
    and the functions ``exp``, ``tanh``, ``sinh`` and ``cosh``.

    Parameters
    ----------
    text <string>
        Expression such as ``-tanh(t)`` or ``0.5*exp(-t^2)``

    Returns
    -------
    callable
        Function of a float time returning a float

    Examples
    --------
    >>> rate = parse_rate_expression('-tanh(t)')
    >>> round(rate(1.0), 6)
    -0.761594

    """
    text = text.strip()
    if not text or not _EXPRESSION_CHARACTERS.match(text):
        raise ConfigError('Invalid rate expression {!r}'.format(text))
    unknown = set(_IDENTIFIER.findall(text)) - set(_ALLOWED_FUNCTIONS) - {'t'}
    if unknown:
        raise ConfigError('Unknown names in rate expression: {}'.format(', '.join(sorted(unknown))))

    t = sympy.Symbol('t', real=True)
    local_dict = dict(_ALLOWED_FUNCTIONS, t=t)
    try:
        expr = parse_expr(text, local_dict=local_dict,
                          transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise ConfigError('Cannot parse rate expression {!r}: {}'.format(text, e))
    if not expr.free_symbols <= {t}:
        raise ConfigError('Rate expression {!r} depends on {}'.format(text, expr.free_symbols - {t}))

    compiled = sympy.lambdify(t, expr, modules='numpy')

    def rate(time):
        return float(compiled(time))

    return rate


def parse_f_mode(text):
    """Translate an ``--f`` value into the ``f`` argument of CovariantRates.

    Accepted values are ``optimal``, ``zero``, ``constant:<value>`` and
    ``expr:<expression>``.
    """
    if text == 'optimal':
        return 'optimal'
    if text == 'zero':
        return 0.0
    mode, _, value = text.partition(':')
    if mode == 'constant':
        try:
            return float(value)
        except ValueError:
            raise ConfigError('Invalid constant rate {!r}'.format(value))
    if mode == 'expr':
        return parse_rate_expression(value)
    raise ConfigError('Invalid f mode {!r} (expected optimal, zero, constant:<v> or expr:<e>)'.format(text))


########################
#  Tables
########################

def _round(value):
    value = float(value)
    if not math.isfinite(value):
        return None
    return float('{:.{}g}'.format(value, SIGNIFICANT_DIGITS))


def _csv_cell(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return '{:.{}g}'.format(value, SIGNIFICANT_DIGITS)


def _json_cell(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    return _round(value)


def format_table(columns, rows, output_format='csv'):
    """Render rows as CSV or JSON text ending with exactly one newline.

    Parameters
    ----------
    columns <list<string>>
        Column names, used as CSV header and JSON keys

    rows <list<list>>
        Row values in column order (floats, bools or strings)

    output_format <'csv' or 'json'>
        Output format. Numbers keep 12 significant digits.

    Examples
    --------
    >>> format_table(['t', 'E'], [[0.0, 0.5]])
    't,E\\n0,0.5\\n'

    """
    if output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(columns)
        writer.writerows([_csv_cell(value) for value in row] for row in rows)
        return buffer.getvalue()
    if output_format == 'json':
        records = [dict(zip(columns, [_json_cell(value) for value in row])) for row in rows]
        return json.dumps(records, indent=2) + '\n'
    raise ConfigError('Unknown output format {!r}'.format(output_format))
