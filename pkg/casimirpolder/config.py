# Copyright (C) 2024-2026 The python-casimirpolder developers
#
# This file is part of python-casimirpolder.
#
# It is subject to the license terms in the LICENSE file found in the top-level
# directory of this distribution.
#
# No part of python-casimirpolder, including this file, may be copied, modified,
# propagated, or distributed except according to the terms contained in the
# LICENSE file.

"""Run configuration

A config file is a list of key = value lines grouped under [section]
headers; everything after a # is a comment. Example:

    [system]
    preset = c60-hydrogen
    r = 0.5

    [sweep]
    variable = temperature
    min = 1
    max = 1e6
    count = 61
    spacing = log

    [output]
    quantities = free_energy, entropy
    format = csv
    path = fig2.csv

    [control]
    rel_tol = 1e-8

In [system], r and Q are accepted instead of separation and plasma_omega;
they are converted with the radius. Command line flags override file keys.
The environment variable CASIMIRPOLDER_THREADS sets the default number of
worker threads.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import os

import numpy as np

import casimirpolder
from casimirpolder.core import CasimirError, ConfigError, ImmutableRecord
from casimirpolder.matsubara import SeriesControl
from casimirpolder.model import POLARIZABILITY_MODES, SINGLE_OSCILLATOR, PhysicalSystem

log = logging.getLogger(__name__)

THREADS_ENV = 'CASIMIRPOLDER_THREADS'

SWEEP_VARIABLES = ('temperature', 'separation', 'radius', 'plasma_omega', 'tau')
SPACINGS = {'lin': 'linear', 'linear': 'linear', 'log': 'log'}
QUANTITIES = ('free_energy', 'breakdown', 'entropy', 'sigma', 'regimes')
FORMATS = ('csv', 'json')

_SYSTEM_KEYS = ('preset', 'radius', 'plasma_omega', 'Q', 'omega_a', 'alpha0',
                'separation', 'r', 'temperature', 'polarizability')
_SWEEP_KEYS = ('variable', 'min', 'max', 'count', 'spacing')
_OUTPUT_KEYS = ('quantities', 'format', 'path', 'sigma_r')
_CONTROL_KEYS = ('rel_tol', 'abs_floor', 'l_max_cap', 'n_max_cap', 'threads')

SECTIONS = {'system': _SYSTEM_KEYS,
            'sweep': _SWEEP_KEYS,
            'output': _OUTPUT_KEYS,
            'control': _CONTROL_KEYS}


class SweepAxis(ImmutableRecord):
    """One swept variable: count values from minimum to maximum"""
    __slots__ = ['variable', 'minimum', 'maximum', 'count', 'spacing']

    def values(self):
        if self.count == 1:
            return np.array([self.minimum])
        if self.spacing == 'log':
            return np.geomspace(self.minimum, self.maximum, self.count)
        return np.linspace(self.minimum, self.maximum, self.count)


class RunConfig(ImmutableRecord):
    """Everything a run or verify needs

    system         - PhysicalSystem at the unswept values
    polarizability - 'single_oscillator' or 'static'
    sweep          - SweepAxis
    quantities     - tuple drawn from QUANTITIES
    sigma_r        - r values of the sigma curves, () for the system's own
    control        - SeriesControl
    output_format  - 'csv' or 'json'
    output_path    - file to write, None for stdout
    """
    __slots__ = ['system', 'polarizability', 'sweep', 'quantities', 'sigma_r',
                 'control', 'output_format', 'output_path']


def parse_sweep(text):
    """var:min:max:count:lin|log into a dict of [sweep] keys"""
    parts = text.split(':')
    if len(parts) != 5:
        raise ConfigError('sweep must look like var:min:max:count:lin|log, got %r' % text,
                          'sweep')
    return dict(zip(_SWEEP_KEYS, parts))


def read_config_file(path):
    """{section: {key: value}} from a key = value file

    Keys before the first header belong to [system]. Unknown sections and
    keys raise ConfigError with the dotted field path.
    """
    sections = {name: {} for name in SECTIONS}
    current = 'system'
    try:
        with open(path, 'r') as fd:
            lines = fd.readlines()
    except IOError as err:
        raise ConfigError('can not read config %r: %s' % (path, err), 'config')
    for number, line in enumerate(lines, 1):
        if '#' in line:
            line = line[:line.index('#')]
        line = line.strip()
        if not line:
            continue
        if line.startswith('[') and line.endswith(']'):
            current = line[1:-1].strip()
            if current not in SECTIONS:
                raise ConfigError('unknown section [%s] at line %d' % (current, number),
                                  current)
            continue
        if '=' not in line:
            raise ConfigError('expected key = value at line %d' % number,
                              '%s.line%d' % (current, number))
        k, v = line.split('=', 1)
        k = k.strip()
        if k not in SECTIONS[current]:
            raise ConfigError('unknown key %r' % k, '%s.%s' % (current, k))
        sections[current][k] = v.strip()
    return sections


def _number(section, key, value, kind=float):
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError('%s.%s must be a number, got %r' % (section, key, value),
                          '%s.%s' % (section, key))


def _list(value):
    return [item.strip() for item in value.split(',') if item.strip()]


def _build_system(values):
    preset = values.get('preset', casimirpolder.params.NAME)
    try:
        p = casimirpolder.PRESETS[preset]
    except KeyError:
        raise ConfigError('Unknown preset %r' % preset, 'system.preset')

    radius = _number('system', 'radius', values.get('radius', p.RADIUS))
    if 'Q' in values and 'plasma_omega' in values:
        raise ConfigError('give either Q or plasma_omega', 'system.Q')
    if 'r' in values and 'separation' in values:
        raise ConfigError('give either r or separation', 'system.r')
    plasma_omega = _number('system', 'plasma_omega',
                           values.get('plasma_omega', p.PLASMA_OMEGA))
    if 'Q' in values:
        plasma_omega = _number('system', 'Q', values['Q']) / radius
    separation = _number('system', 'separation', values.get('separation', p.SEPARATION))
    if 'r' in values:
        separation = _number('system', 'r', values['r']) * radius

    mode = values.get('polarizability', SINGLE_OSCILLATOR)
    if mode not in POLARIZABILITY_MODES:
        raise ConfigError('Unknown polarizability %r' % mode, 'system.polarizability')
    try:
        system = PhysicalSystem(
            radius=radius, plasma_omega=plasma_omega,
            omega_a=_number('system', 'omega_a', values.get('omega_a', p.OMEGA_A)),
            alpha0=_number('system', 'alpha0', values.get('alpha0', p.ALPHA0)),
            separation=separation,
            temperature=_number('system', 'temperature',
                                values.get('temperature', p.TEMPERATURE)))
    except CasimirError as err:
        raise ConfigError(str(err), 'system.%s' % (getattr(err, 'name', None) or ''))
    return system, mode


def _build_sweep(values, system):
    variable = values.get('variable', 'temperature')
    if variable not in SWEEP_VARIABLES:
        raise ConfigError('Unknown sweep variable %r' % variable, 'sweep.variable')
    if 'min' in values:
        minimum = _number('sweep', 'min', values['min'])
    elif variable == 'tau':
        raise ConfigError('a tau sweep needs sweep.min', 'sweep.min')
    else:
        minimum = getattr(system, variable)
    maximum = _number('sweep', 'max', values['max']) if 'max' in values else minimum
    count = _number('sweep', 'count', values.get('count', 1), int)
    if count < 1:
        raise ConfigError('sweep.count must be at least 1, got %d' % count, 'sweep.count')
    spacing = SPACINGS.get(values.get('spacing', 'lin'))
    if spacing is None:
        raise ConfigError('sweep.spacing must be lin or log', 'sweep.spacing')
    if spacing == 'log' and not (minimum > 0.0 and maximum > 0.0):
        raise ConfigError('a log sweep needs positive bounds', 'sweep.min')
    if maximum < minimum:
        raise ConfigError('sweep.max is below sweep.min', 'sweep.max')
    return SweepAxis(variable=variable, minimum=minimum, maximum=maximum, count=count,
                     spacing=spacing)


def _build_control(values):
    kwargs = {}
    for key, kind in (('rel_tol', float), ('abs_floor', float), ('l_max_cap', int),
                      ('n_max_cap', int), ('threads', int)):
        if key in values:
            kwargs[key] = _number('control', key, values[key], kind)
    if 'threads' not in kwargs and os.environ.get(THREADS_ENV):
        kwargs['threads'] = _number('environment', THREADS_ENV, os.environ[THREADS_ENV], int)
    try:
        return SeriesControl(**kwargs)
    except CasimirError as err:
        raise ConfigError(str(err), 'control.%s' % (getattr(err, 'name', None) or ''))


def build_config(sections):
    """RunConfig from {section: {key: value}} with string or numeric values"""
    for section, values in sections.items():
        if section not in SECTIONS:
            raise ConfigError('unknown section [%s]' % section, section)
        for key in values:
            if key not in SECTIONS[section]:
                raise ConfigError('unknown key %r' % key, '%s.%s' % (section, key))

    system, mode = _build_system(sections.get('system', {}))
    sweep = _build_sweep(sections.get('sweep', {}), system)
    output = sections.get('output', {})

    quantities = tuple(_list(output.get('quantities', 'free_energy')))
    for q in quantities:
        if q not in QUANTITIES:
            raise ConfigError('Unknown output quantity %r' % q, 'output.quantities')
    if not quantities:
        raise ConfigError('no output quantities requested', 'output.quantities')
    sigma_r = tuple(_number('output', 'sigma_r', v) for v in _list(output.get('sigma_r', '')))
    if any(r < 0.0 for r in sigma_r):
        raise ConfigError('sigma_r values must be non-negative', 'output.sigma_r')
    if sweep.variable == 'tau' and quantities != ('sigma',):
        raise ConfigError('a tau sweep only produces sigma', 'output.quantities')

    output_format = output.get('format', 'csv')
    if output_format not in FORMATS:
        raise ConfigError('Unknown output format %r' % output_format, 'output.format')

    config = RunConfig(system=system, polarizability=mode, sweep=sweep,
                       quantities=quantities, sigma_r=sigma_r,
                       control=_build_control(sections.get('control', {})),
                       output_format=output_format,
                       output_path=output.get('path') or None)
    log.debug('configuration: %r', config)
    return config


def load_config(path=None, overrides=None):
    """RunConfig from an optional file and {section: {key: value}} overrides"""
    sections = read_config_file(path) if path else {name: {} for name in SECTIONS}
    for section, values in (overrides or {}).items():
        sections.setdefault(section, {}).update(values)
    return build_config(sections)


__all__ = (
    'THREADS_ENV',
    'SWEEP_VARIABLES',
    'QUANTITIES',
    'FORMATS',
    'SECTIONS',
    'SweepAxis',
    'RunConfig',
    'parse_sweep',
    'read_config_file',
    'build_config',
    'load_config',
)
