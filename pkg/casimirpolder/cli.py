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

"""Command line front end

    casimirpolder run     [--config PATH] [flags]   sweep and write a table
    casimirpolder verify  [--config PATH] [flags]   consistency checks
    casimirpolder presets                           list preset systems

Exit status: 0 success, 1 invalid input, 2 convergence trouble or a failed
check, 3 output not writable.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

import numpy as np

import casimirpolder
from casimirpolder import abel_plana, asymptotics, entropy, matsubara
from casimirpolder.config import FORMATS, QUANTITIES, load_config, parse_sweep
from casimirpolder.core import (
    CasimirError,
    ConfigError,
    ImmutableRecord,
    OutputError,
    RegimeError,
    RegimeWarning,
)
from casimirpolder.core import specfun
from casimirpolder.model import effective_temperatures, reduce

log = logging.getLogger(__name__)

# The CSV header is part of the output contract; columns only get appended.
COLUMNS = (
    'variable', 'value', 'r', 'temperature',
    'free_energy', 'te_share', 'tm_share', 'truncation_bound', 'l_max', 'n_max',
    'E0', 'F1', 'F2',
    'entropy_analytic', 'S1', 'S2', 'entropy_fd',
    'sigma',
    'low_T', 'low_T_slack', 'high_T', 'high_T_slack',
    'short_distance', 'short_distance_slack',
    'error',
)

_REGIMES = (
    ('low_T', asymptotics.low_temperature_energy),
    ('high_T', asymptotics.high_temperature_energy),
    ('short_distance', asymptotics.short_distance_energy),
)


class SweepResult(ImmutableRecord):
    """Rows of a run, one dict per sweep point, keyed by COLUMNS"""
    __slots__ = ['columns', 'rows']

    @property
    def error_codes(self):
        codes = set()
        for row in self.rows:
            if row['error']:
                codes.update(row['error'].split(';'))
        return sorted(codes)

    @property
    def exit_code(self):
        return max([CasimirError.SUBCLS_BY_CODE.get(code, CasimirError).EXIT_CODE
                    for code in self.error_codes] or [0])


PASS = 'PASS'
FAIL = 'FAIL'
SKIP = 'SKIP'

# Regime checks move the temperature this far inside a regime
REGIME_DEPTH = 0.01


class Check(ImmutableRecord):
    """Outcome of one verify check, status PASS, FAIL or SKIP"""
    __slots__ = ['name', 'status', 'detail']

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL


def _empty_row(variable, value):
    row = dict.fromkeys(COLUMNS)
    row['variable'] = variable
    row['value'] = float(value)
    row['error'] = ''
    return row


def _fail(row, err):
    log.warning('%s=%r: %s', row['variable'], row['value'], err)
    codes = [c for c in row['error'].split(';') if c]
    if err.ERROR_CODE not in codes:
        codes.append(err.ERROR_CODE)
    row['error'] = ';'.join(codes)


def _fill_energy(row, system, pol, ctrl):
    if system.temperature == 0.0:
        E0 = abel_plana.zero_temperature_energy(system, pol, ctrl)
        row.update(free_energy=E0, te_share=None, tm_share=None,
                   truncation_bound=abs(E0) * ctrl.rel_tol)
        return
    result = matsubara.free_energy(system, pol, ctrl)
    row.update(free_energy=result.total, te_share=result.te_share, tm_share=result.tm_share,
               truncation_bound=result.truncation_bound, l_max=result.l_max_used,
               n_max=result.n_max_used)


def _fill_breakdown(row, system, pol, ctrl):
    parts = abel_plana.free_energy(system, pol, ctrl)
    row.update(E0=parts.E0, F1=parts.F1, F2=parts.F2)


def _fill_entropy(row, system, pol, ctrl):
    try:
        analytic = entropy.entropy_analytic(system, pol, ctrl)
        row.update(entropy_analytic=analytic.total, S1=analytic.s1, S2=analytic.s2)
    except CasimirError as err:
        _fail(row, err)
    row['entropy_fd'] = entropy.entropy_fd(system, pol, ctrl).total


def _fill_regimes(row, system, pol, ctrl):
    for name, law in _REGIMES:
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', RegimeWarning)
            try:
                if name == 'low_T':
                    result = law(system, pol, ctrl)
                else:
                    result = law(system, pol)
            except RegimeError as err:
                row[name + '_slack'] = max([s for _, s in err.validity] or [None])
                continue
            except CasimirError as err:
                _fail(row, err)
                continue
        row[name] = result.value
        row[name + '_slack'] = result.slack


def _fill(row, fill, *args):
    try:
        fill(row, *args)
    except CasimirError as err:
        _fail(row, err)


def evaluate_point(config, value, ctrl=None):
    """One row of the sweep at the given value of the swept variable"""
    ctrl = ctrl or config.control
    variable = config.sweep.variable
    row = _empty_row(variable, value)
    try:
        system = config.system.replace(**{variable: float(value)})
        point = reduce(system)
    except CasimirError as err:
        _fail(row, err)
        return row
    pol = system.polarizability(config.polarizability)
    row.update(r=point.r, temperature=system.temperature)

    if 'free_energy' in config.quantities:
        _fill(row, _fill_energy, system, pol, ctrl)
    if 'breakdown' in config.quantities:
        _fill(row, _fill_breakdown, system, pol, ctrl)
    if 'entropy' in config.quantities:
        _fill(row, _fill_entropy, system, pol, ctrl)
    if 'sigma' in config.quantities:
        try:
            curve = entropy.sigma_curve(point.r, [point.tau], ctrl)
            row['sigma'] = curve.sigma_values[0]
        except CasimirError as err:
            _fail(row, err)
    if 'regimes' in config.quantities:
        _fill(row, _fill_regimes, system, pol, ctrl)
    return row


def _sigma_rows(config):
    taus = config.sweep.values()
    rs = config.sigma_r or (config.system.r,)
    rows = []
    for r in rs:
        try:
            curve = entropy.sigma_curve(r, taus, config.control)
        except CasimirError as err:
            for tau in taus:
                row = _empty_row('tau', tau)
                row['r'] = float(r)
                _fail(row, err)
                rows.append(row)
            continue
        for tau, sigma in zip(curve.tau_grid, curve.sigma_values):
            row = _empty_row('tau', tau)
            row.update(r=float(r), sigma=sigma)
            rows.append(row)
    return rows


def sweep(config):
    """SweepResult of a configuration without writing anything

    Points are evaluated on control.threads workers; rows come back in sweep
    order.
    """
    if config.sweep.variable == 'tau':
        return SweepResult(columns=COLUMNS, rows=tuple(_sigma_rows(config)))
    values = config.sweep.values()
    threads = config.control.threads
    if threads > 1 and len(values) > 1:
        inner = config.control.replace(threads=1)
        with ThreadPoolExecutor(max_workers=threads) as executor:
            rows = list(executor.map(lambda v: evaluate_point(config, v, inner), values))
    else:
        rows = [evaluate_point(config, v) for v in values]
    return SweepResult(columns=COLUMNS, rows=tuple(rows))


def _plain(value):
    """numpy scalars as Python numbers"""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def _json_value(value):
    # JSON has no infinities; an infinite slack means the regime does not apply
    value = _plain(value)
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def _cell(value):
    value = _plain(value)
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def format_csv(result):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([_cell(row[c]) for c in result.columns])
    return out.getvalue()


def format_json(result, config=None):
    document = {
        'format': 'casimirpolder-sweep',
        'version': casimirpolder.__version__,
        'columns': list(result.columns),
        'rows': [[_json_value(row[c]) for c in result.columns] for row in result.rows],
    }
    if config is not None:
        document['sweep'] = config.sweep.to_dict()
    return json.dumps(document, indent=1, allow_nan=False) + '\n'


def write_result(result, config):
    text = (format_json(result, config) if config.output_format == 'json'
            else format_csv(result))
    if config.output_path is None:
        sys.stdout.write(text)
        return
    try:
        with io.open(config.output_path, 'w', encoding='utf-8', newline='') as fd:
            fd.write(text)
    except (IOError, OSError) as err:
        raise OutputError('can not write %r: %s' % (config.output_path, err),
                          config.output_path)
    log.info('wrote %d rows to %s', len(result.rows), config.output_path)


def run(config):
    """Sweep, write the output, and return the SweepResult"""
    result = sweep(config)
    write_result(result, config)
    return result


def _relative(a, b):
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale > 0.0 else 0.0


def _check(name, test):
    try:
        status, detail = test()
    except CasimirError as err:
        return Check(name=name, status=FAIL, detail='%s: %s' % (err.ERROR_CODE, err))
    if status is True or status is False:
        status = PASS if status else FAIL
    return Check(name=name, status=status, detail=detail)


def verify(config):
    """Consistency checks at the configuration's unswept system, a list of Check"""
    system = config.system
    ctrl = config.control
    pol = system.polarizability(config.polarizability)
    point = reduce(system)
    tolerance = max(1e-6, ctrl.rel_tol)
    degraded = ' (degraded tolerance)' if tolerance > 1e-6 else ''
    checks = []

    def wronskians():
        worst = 0.0
        for l in (1, 5, 20, 100, 1000):
            for x in (1e-3, 0.1, 1.0, 10.0, 100.0):
                worst = max(worst, abs(specfun.riccati_ik(l, x).wronskian() + 1.0))
        return worst <= 1e-10, 'max |W + 1| = %.3g' % worst

    def jost():
        lowest = min(min(matsubara.jost_te(l, x, point.Q), matsubara.jost_tm(l, x, point.Q))
                     for l in (1, 2, 10) for x in (0.01, 0.1, 1.0, 10.0))
        return lowest >= 1.0, 'min f = %r' % lowest

    def zero_mode():
        T = max(system.temperature, 1.0)
        closed = matsubara.zero_mode(point, system.alpha0, T, system.radius)
        summed = matsubara.zero_mode_series(point, system.alpha0, T, system.radius, ctrl)
        err = _relative(closed, summed)
        return err <= max(1e-9, ctrl.rel_tol), 'relative difference %.3g' % err

    def representations():
        series = matsubara.free_energy(system, pol, ctrl).total
        parts = abel_plana.free_energy(system, pol, ctrl).total
        err = _relative(series, parts)
        return err <= tolerance, 'relative difference %.3g, tolerance %.0e%s' % (
            err, tolerance, degraded)

    def entropy_routes():
        a = entropy.entropy_analytic(system, pol, ctrl).total
        b = entropy.entropy_fd(system, pol, ctrl).total
        err = _relative(a, b)
        limit = max(1e-4, ctrl.rel_tol)
        return err <= limit, 'relative difference %.3g, tolerance %.0e' % (err, limit)

    checks.append(_check('wronskian', wronskians))
    if point.Q > 0.0:
        checks.append(_check('jost_at_least_one', jost))
        checks.append(_check('zero_mode_series', zero_mode))
    if system.temperature > 0.0 and not pol.is_static:
        checks.append(_check('representation_equivalence', representations))
        checks.append(_check('entropy_routes', entropy_routes))

    for name, law, limit in (('low_T', asymptotics.low_temperature_energy, 1e-2),
                             ('high_T', asymptotics.high_temperature_energy, 1e-3),
                             ('short_distance', asymptotics.short_distance_energy, 5e-2)):
        checks.append(_check('regime_' + name,
                             lambda law=law, limit=limit, name=name:
                             _regime_check(name, law, limit, system, pol, ctrl)))
    if all(check.status == SKIP for check in checks if check.name.startswith('regime_')):
        checks.append(Check(name='regime_coverage', status=FAIL,
                            detail='no asymptotic regime reached'))
    return checks


def _regime_law(name, law, system, pol, ctrl):
    """law at system, or None with the largest slack when outside the regime"""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', RegimeWarning)
        try:
            result = law(system, pol, ctrl) if name == 'low_T' else law(system, pol)
        except RegimeError as err:
            return None, max([s for _, s in err.validity] or [float('inf')])
    if caught:
        return None, result.slack
    return result, result.slack


def _regime_temperature(name, system):
    """A temperature REGIME_DEPTH inside the low_T or high_T regime, else None"""
    temps = effective_temperatures(system)
    if name == 'low_T':
        T_far = temps.T_R * system.radius / (system.radius + system.separation)
        bounds = [temps.T_omega, temps.T_R, T_far]
        Q = reduce(system).Q
        if Q > 0.0:
            bounds.append(Q * temps.T_R)
        return REGIME_DEPTH * min(bounds)
    if name == 'high_T':
        return max(temps.T_omega, temps.T_R, temps.T_d) / REGIME_DEPTH
    return None


def _regime_check(name, law, limit, system, pol, ctrl):
    """Compare an asymptotic law with the exact energy

    Outside the regime the temperature is moved inside it where the regime
    is one of temperature; otherwise the check is skipped.
    """
    result, slack = _regime_law(name, law, system, pol, ctrl)
    where = ''
    if result is None:
        T = _regime_temperature(name, system)
        if T is not None:
            where = ' at T=%.4g K (configured slack %.3g)' % (T, slack)
            system = system.replace(temperature=T)
            result, slack = _regime_law(name, law, system, pol, ctrl)
        if result is None:
            return SKIP, 'outside the regime, slack %.3g' % slack
    if system.temperature == 0.0:
        exact = abel_plana.zero_temperature_energy(system, pol, ctrl)
    else:
        exact = matsubara.free_energy(system, pol, ctrl).total
    err = _relative(exact, result.value)
    return err <= limit, 'relative difference %.3g, slack %.3g%s' % (err, slack, where)


def _overrides(args):
    overrides = {'system': {}, 'sweep': {}, 'output': {}, 'control': {}}
    for section, key, value in (
            ('system', 'preset', args.preset),
            ('system', 'radius', args.radius),
            ('system', 'plasma_omega', args.plasma_omega),
            ('system', 'Q', args.Q),
            ('system', 'omega_a', args.omega_a),
            ('system', 'alpha0', args.alpha0),
            ('system', 'separation', args.separation),
            ('system', 'r', args.r),
            ('system', 'temperature', args.temperature),
            ('system', 'polarizability', args.polarizability),
            ('output', 'quantities', args.quantities),
            ('output', 'format', args.format),
            ('output', 'path', args.output),
            ('output', 'sigma_r', args.sigma_r),
            ('control', 'rel_tol', args.rel_tol),
            ('control', 'threads', args.threads)):
        if value is not None:
            overrides[section][key] = value
    if args.sweep is not None:
        overrides['sweep'] = parse_sweep(args.sweep)
    return overrides


def _add_common(parser):
    parser.add_argument('--config', help='key = value configuration file')
    parser.add_argument('--output', help='output path, stdout when omitted')
    parser.add_argument('--format', choices=FORMATS, help='output format')
    parser.add_argument('--preset', choices=sorted(casimirpolder.PRESETS),
                        help='preset system')
    parser.add_argument('--sweep', help='var:min:max:count:lin|log')
    parser.add_argument('--rel-tol', dest='rel_tol', help='relative tolerance')
    parser.add_argument('--threads', help='worker threads')
    parser.add_argument('--quantities', help='comma separated, from %s' % ', '.join(QUANTITIES))
    parser.add_argument('--sigma-r', dest='sigma_r', help='comma separated r values')
    parser.add_argument('--radius', help='sphere radius, m')
    parser.add_argument('--plasma-omega', dest='plasma_omega', help='plasma wavenumber, 1/m')
    parser.add_argument('--Q', help='Omega R, instead of --plasma-omega')
    parser.add_argument('--omega-a', dest='omega_a', help='atomic frequency, rad/s')
    parser.add_argument('--alpha0', help='static polarizability, m^3')
    parser.add_argument('--separation', help='atom to surface distance, m')
    parser.add_argument('--r', help='d/R, instead of --separation')
    parser.add_argument('--temperature', help='kelvin')
    parser.add_argument('--polarizability', choices=('single_oscillator', 'static'))
    parser.add_argument('-v', '--verbose', action='count', default=0)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='casimirpolder',
        description='Thermal Casimir-Polder free energy and entropy of an atom '
                    'near a plasma sphere')
    sub = parser.add_subparsers(dest='command')
    _add_common(sub.add_parser('run', help='evaluate a sweep and write a table'))
    _add_common(sub.add_parser('verify', help='run consistency checks'))
    sub.add_parser('presets', help='list preset systems')
    return parser


def _print_presets(stream):
    for name in sorted(casimirpolder.PRESETS):
        p = casimirpolder.PRESETS[name]
        stream.write('%s\n' % name)
        for key in ('RADIUS', 'PLASMA_OMEGA', 'OMEGA_A', 'ALPHA0', 'SEPARATION',
                    'TEMPERATURE'):
            stream.write('    %-13s %r\n' % (key.lower(), getattr(p, key)))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    if args.command == 'presets':
        _print_presets(sys.stdout)
        return 0

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    try:
        config = load_config(args.config, _overrides(args))
        if args.command == 'run':
            result = run(config)
            if result.error_codes:
                log.warning('points failed with: %s', ', '.join(result.error_codes))
            return result.exit_code
        checks = verify(config)
        for check in checks:
            sys.stdout.write('%-28s %s  %s\n' % (check.name, check.status,
                                                 check.detail))
        return 2 if any(check.failed for check in checks) else 0
    except ConfigError as err:
        sys.stderr.write('invalid configuration (%s): %s\n' % (err.field, err))
        return err.EXIT_CODE
    except CasimirError as err:
        sys.stderr.write('%s: %s\n' % (err.ERROR_CODE, err))
        return err.EXIT_CODE


__all__ = (
    'COLUMNS',
    'SweepResult',
    'PASS',
    'FAIL',
    'SKIP',
    'Check',
    'evaluate_point',
    'sweep',
    'format_csv',
    'format_json',
    'write_result',
    'run',
    'verify',
    'build_parser',
    'main',
)
