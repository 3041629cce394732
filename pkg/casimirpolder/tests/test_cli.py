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
import contextlib
import csv
import io
import json
import os
import shutil
import tempfile
import unittest

import casimirpolder
from casimirpolder import cli
from casimirpolder.config import load_config

DATA = os.path.join(os.path.dirname(casimirpolder.__file__), 'data')


def run_main(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def path(self, name):
        return os.path.join(self.dir, name)

    def read(self, name):
        with io.open(self.path(name), encoding='utf-8') as fd:
            return fd.read()


class Test_run(CliTestCase):
    def test_empty_sphere(self):
        code, _, _ = run_main(['run', '--Q', '0', '--output', self.path('out.csv')])
        self.assertEqual(code, 0)
        rows = list(csv.DictReader(io.StringIO(self.read('out.csv'))))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['variable'], 'temperature')
        self.assertEqual(float(rows[0]['free_energy']), 0.0)
        self.assertEqual(rows[0]['error'], '')

    def test_header(self):
        code, out, _ = run_main(['run', '--Q', '0'])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], ','.join(cli.COLUMNS))

    def test_json_matches_schema_columns(self):
        code, _, _ = run_main(['run', '--Q', '0', '--format', 'json',
                               '--sweep', 'separation:1e-10:1e-9:3:log',
                               '--output', self.path('out.json')])
        self.assertEqual(code, 0)
        document = json.loads(self.read('out.json'))
        with io.open(os.path.join(DATA, 'sweep_result.schema.json'), encoding='utf-8') as fd:
            schema = json.load(fd)
        self.assertEqual(document['columns'], schema['properties']['columns']['const'])
        self.assertEqual(document['format'], 'casimirpolder-sweep')
        self.assertEqual(document['version'], casimirpolder.__version__)
        self.assertEqual(len(document['rows']), 3)
        for row in document['rows']:
            self.assertEqual(len(row), len(cli.COLUMNS))
            self.assertEqual(row[0], 'separation')
        self.assertEqual(document['sweep']['count'], 3)

    def test_threads_and_determinism(self):
        argv = ['run', '--sweep', 'temperature:100:1000:3:log',
                '--quantities', 'sigma,regimes']
        code, first, _ = run_main(argv + ['--threads', '1'])
        self.assertEqual(code, 0)
        _, second, _ = run_main(argv + ['--threads', '2'])
        _, third, _ = run_main(argv + ['--threads', '2'])
        self.assertEqual(first, second)
        self.assertEqual(second, third)

    def test_output_files_identical(self):
        argv = ['run', '--sweep', 'temperature:100:1000:3:log',
                '--quantities', 'free_energy,breakdown,entropy,sigma,regimes']
        for name in ('first.csv', 'second.csv'):
            code, _, _ = run_main(argv + ['--output', self.path(name)])
            self.assertEqual(code, 0)
        with io.open(self.path('first.csv'), 'rb') as fd:
            first = fd.read()
        with io.open(self.path('second.csv'), 'rb') as fd:
            second = fd.read()
        self.assertTrue(first)
        self.assertEqual(first, second)

    def test_tau_sweep(self):
        code, out, _ = run_main(['run', '--config', os.path.join(DATA, 'fig3.conf'),
                                 '--sweep', 'tau:0.1:10:5:log', '--output', ''])
        self.assertEqual(code, 0)
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual(len(rows), 15)
        self.assertEqual(sorted(set(float(row['r']) for row in rows)), [0.0, 0.05, 0.1])
        self.assertTrue(all(row['variable'] == 'tau' and row['sigma'] for row in rows))

    def test_failed_points(self):
        config = load_config(overrides={'system': {'temperature': '0'},
                                        'output': {'quantities': 'entropy'}})
        result = cli.sweep(config)
        self.assertEqual(result.rows[0]['error'], 'domain')
        self.assertEqual(result.error_codes, ['domain'])
        self.assertEqual(result.exit_code, 1)

    def test_zero_temperature_energy(self):
        config = load_config(overrides={'system': {'temperature': '0'}})
        row = cli.evaluate_point(config, 0.0)
        self.assertEqual(row['error'], '')
        self.assertLess(row['free_energy'], 0.0)
        self.assertIsNone(row['n_max'])

    def test_unwritable_output(self):
        code, _, err = run_main(['run', '--Q', '0',
                                 '--output', self.path('missing/out.csv')])
        self.assertEqual(code, 3)
        self.assertIn('io', err)

    def test_invalid_input(self):
        code, _, err = run_main(['run', '--temperature', '-5'])
        self.assertEqual(code, 1)
        self.assertIn('system.temperature', err)
        code, _, _ = run_main(['run', '--sweep', 'temperature:1'])
        self.assertEqual(code, 1)
        code, _, _ = run_main([])
        self.assertEqual(code, 1)


class Test_format(unittest.TestCase):
    def test_cells(self):
        result = cli.SweepResult(columns=('variable', 'value', 'l_max', 'low_T_slack'),
                                 rows=({'variable': 'temperature', 'value': 0.1,
                                        'l_max': None, 'low_T_slack': float('inf')},))
        self.assertEqual(cli.format_csv(result), 'variable,value,l_max,low_T_slack\n'
                                                 'temperature,0.1,,inf\n')
        document = json.loads(cli.format_json(result))
        self.assertEqual(document['rows'], [['temperature', 0.1, None, None]])


class Test_presets_and_verify(CliTestCase):
    def test_presets(self):
        code, out, _ = run_main(['presets'])
        self.assertEqual(code, 0)
        for name in casimirpolder.PRESETS:
            self.assertIn(name, out)

    def test_verify_empty_sphere(self):
        code, out, _ = run_main(['verify', '--Q', '0'])
        self.assertEqual(code, 0)
        names = [line.split()[0] for line in out.splitlines()]
        self.assertIn('wronskian', names)
        self.assertIn('representation_equivalence', names)
        self.assertNotIn('FAIL', out)

    def test_verify_checks(self):
        config = load_config(overrides={'system': {'temperature': '30000'}})
        checks = {check.name: check for check in cli.verify(config)}
        for name in ('wronskian', 'jost_at_least_one', 'zero_mode_series',
                     'representation_equivalence', 'entropy_routes'):
            self.assertTrue(checks[name].passed, msg='%s: %s' % (name, checks[name].detail))
        # 30000 K is outside both temperature regimes; the checks move into them
        for name in ('regime_low_T', 'regime_high_T'):
            self.assertEqual(checks[name].status, cli.PASS, msg=checks[name].detail)
            self.assertIn('at T=', checks[name].detail)
        self.assertNotIn('regime_coverage', checks)

    def test_skipped_is_not_passed(self):
        # r/Q = 10 for the default system, far from the short distance regime
        config = load_config()
        checks = {check.name: check for check in cli.verify(config)}
        short = checks['regime_short_distance']
        self.assertEqual(short.status, cli.SKIP)
        self.assertFalse(short.passed)
        self.assertFalse(short.failed)
        self.assertIn('outside the regime', short.detail)
        # 300 K is inside the low temperature regime as configured
        self.assertEqual(checks['regime_low_T'].status, cli.PASS)
        self.assertNotIn('at T=', checks['regime_low_T'].detail)

    def test_verify_prints_status(self):
        code, out, _ = run_main(['verify'])
        self.assertEqual(code, 0)
        statuses = dict(line.split()[:2] for line in out.splitlines())
        self.assertEqual(statuses['regime_short_distance'], 'SKIP')
        self.assertEqual(statuses['regime_high_T'], 'PASS')
