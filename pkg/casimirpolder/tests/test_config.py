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

from __future__ import absolute_import, division, print_function, unicode_literals
import os
import shutil
import tempfile
import unittest
from unittest import mock

import numpy as np

import casimirpolder
from casimirpolder.config import *
from casimirpolder.core import ConfigError

DATA = os.path.join(os.path.dirname(casimirpolder.__file__), 'data')


class ConfigFileTestCase(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def write(self, text):
        path = os.path.join(self.dir, 'run.conf')
        with open(path, 'w') as fd:
            fd.write(text)
        return path


class Test_read_config_file(ConfigFileTestCase):
    def test_sections_and_comments(self):
        path = self.write('temperature = 77   # before any header\n'
                          '\n'
                          '[sweep]\n'
                          'variable=separation\n'
                          '  count = 5 \n'
                          '# whole line comment\n'
                          '[control]\n'
                          'rel_tol = 1e-6\n')
        sections = read_config_file(path)
        self.assertEqual(sections['system'], {'temperature': '77'})
        self.assertEqual(sections['sweep'], {'variable': 'separation', 'count': '5'})
        self.assertEqual(sections['control'], {'rel_tol': '1e-6'})
        self.assertEqual(sections['output'], {})

    def test_errors_name_the_field(self):
        for text, field in (('[system]\nradiu = 1\n', 'system.radiu'),
                            ('[plot]\n', 'plot'),
                            ('[sweep]\nvariable\n', 'sweep.line2')):
            with self.assertRaises(ConfigError) as cm:
                read_config_file(self.write(text))
            self.assertEqual(cm.exception.field, field)

    def test_missing_file(self):
        with self.assertRaises(ConfigError) as cm:
            read_config_file(os.path.join(self.dir, 'absent.conf'))
        self.assertEqual(cm.exception.field, 'config')

    def test_bundled_configs(self):
        wide = load_config(os.path.join(DATA, 'fig2.conf'))
        self.assertEqual(wide.sweep.count, 61)
        self.assertEqual(wide.sweep.spacing, 'log')
        self.assertEqual(wide.quantities, ('free_energy', 'entropy'))
        self.assertAlmostEqual(wide.system.r, 0.5, places=12)
        sigma = load_config(os.path.join(DATA, 'fig3.conf'))
        self.assertEqual(sigma.sweep.variable, 'tau')
        self.assertEqual(sigma.sigma_r, (0.0, 0.05, 0.1))
        self.assertEqual(sigma.polarizability, 'static')


class Test_build_config(ConfigFileTestCase):
    def test_defaults(self):
        config = load_config()
        self.assertEqual(config.system, casimirpolder.preset_system())
        self.assertEqual(config.sweep.variable, 'temperature')
        self.assertEqual(config.sweep.count, 1)
        np.testing.assert_array_equal(config.sweep.values(), [config.system.temperature])
        self.assertEqual(config.quantities, ('free_energy',))
        self.assertEqual(config.output_format, 'csv')
        self.assertIsNone(config.output_path)

    def test_reduced_parameters(self):
        config = load_config(overrides={'system': {'radius': '1e-6', 'r': '0.25', 'Q': '2'}})
        self.assertAlmostEqual(config.system.separation, 2.5e-7, delta=1e-20)
        self.assertAlmostEqual(config.system.plasma_omega, 2e6, delta=1e-6)

    def test_conflicting_keys(self):
        with self.assertRaises(ConfigError) as cm:
            load_config(overrides={'system': {'Q': '1', 'plasma_omega': '1e9'}})
        self.assertEqual(cm.exception.field, 'system.Q')
        with self.assertRaises(ConfigError) as cm:
            load_config(overrides={'system': {'r': '1', 'separation': '1e-9'}})
        self.assertEqual(cm.exception.field, 'system.r')

    def test_invalid_values(self):
        for overrides, field in (
                ({'system': {'temperature': '-5'}}, 'system.temperature'),
                ({'system': {'radius': 'big'}}, 'system.radius'),
                ({'system': {'preset': 'mainnet'}}, 'system.preset'),
                ({'system': {'polarizability': 'drude'}}, 'system.polarizability'),
                ({'sweep': {'variable': 'pressure'}}, 'sweep.variable'),
                ({'sweep': {'min': '0', 'max': '10', 'count': '3', 'spacing': 'log'}},
                 'sweep.min'),
                ({'sweep': {'min': '10', 'max': '1', 'count': '3'}}, 'sweep.max'),
                ({'sweep': {'count': '0'}}, 'sweep.count'),
                ({'sweep': {'spacing': 'cubic'}}, 'sweep.spacing'),
                ({'output': {'quantities': 'free_energy, pressure'}}, 'output.quantities'),
                ({'output': {'format': 'xml'}}, 'output.format'),
                ({'output': {'sigma_r': '0.1, -1'}}, 'output.sigma_r'),
                ({'control': {'rel_tol': '2'}}, 'control.rel_tol'),
                ({'control': {'threads': 'many'}}, 'control.threads')):
            with self.assertRaises(ConfigError) as cm:
                load_config(overrides=overrides)
            self.assertEqual(cm.exception.field, field, msg=repr(overrides))

    def test_tau_sweep(self):
        with self.assertRaises(ConfigError) as cm:
            load_config(overrides={'sweep': {'variable': 'tau', 'min': '0.1', 'max': '1',
                                             'count': '3'}})
        self.assertEqual(cm.exception.field, 'output.quantities')
        with self.assertRaises(ConfigError) as cm:
            load_config(overrides={'sweep': {'variable': 'tau'},
                                   'output': {'quantities': 'sigma'}})
        self.assertEqual(cm.exception.field, 'sweep.min')

    def test_overrides_win(self):
        path = self.write('[system]\ntemperature = 77\n[control]\nthreads = 3\n')
        config = load_config(path, {'system': {'temperature': 4.2}})
        self.assertEqual(config.system.temperature, 4.2)
        self.assertEqual(config.control.threads, 3)

    def test_threads_from_environment(self):
        with mock.patch.dict(os.environ, {THREADS_ENV: '4'}):
            self.assertEqual(load_config().control.threads, 4)
            config = load_config(overrides={'control': {'threads': '2'}})
            self.assertEqual(config.control.threads, 2)
        with mock.patch.dict(os.environ, {THREADS_ENV: 'x'}):
            with self.assertRaises(ConfigError):
                load_config()


class Test_sweep_axis(unittest.TestCase):
    def test_parse_sweep(self):
        self.assertEqual(parse_sweep('separation:1e-9:1e-6:4:log'),
                         {'variable': 'separation', 'min': '1e-9', 'max': '1e-6',
                          'count': '4', 'spacing': 'log'})
        with self.assertRaises(ConfigError):
            parse_sweep('temperature:1:2')

    def test_values(self):
        axis = SweepAxis(variable='temperature', minimum=1.0, maximum=100.0, count=3,
                         spacing='log')
        np.testing.assert_allclose(axis.values(), [1.0, 10.0, 100.0], rtol=1e-14)
        axis = axis.replace(spacing='linear')
        np.testing.assert_allclose(axis.values(), [1.0, 50.5, 100.0], rtol=1e-14)
