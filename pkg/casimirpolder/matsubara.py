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

"""Free energy as a sum over Matsubara frequencies

    F = -(2 k_B T/(R^3 chi^2)) sum'_n alpha(i xi_n) eps(x_n),
    eps(x) = Q sum_l nu g_l(x),   x_n = n T/T_R

with the n = 0 term, weighted 1/2, taken from its closed form. g_l splits
into a TE and a TM share, each divided by its Jost function.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import concurrent.futures
import logging
import math

import numpy as np

from casimirpolder.core import (
    ConvergenceError,
    DomainError,
    ImmutableRecord,
    K_B,
    check_positive,
)
from casimirpolder.core import specfun
from casimirpolder.model import alpha_ratio, reduce

log = logging.getLogger(__name__)

# Upper limit on arguments x evaluated per table call times its order count
_CELLS_PER_CHUNK = 1 << 19
_FIRST_CHUNK = 8

# Reduced frequency standing in for x -> 0 in zero_mode_series
_ZERO_MODE_ARGUMENT = 1e-6

# Orders per step, and step count, when summing the envelope past l_max
_ENVELOPE_CHUNK = 4096
_ENVELOPE_STEPS = 64


class SeriesControl(ImmutableRecord):
    """Truncation and tolerance policy for the multipole and frequency sums

    rel_tol    - relative accuracy goal of every series and quadrature
    abs_floor  - energies below this magnitude count as converged, J
    l_max_cap  - largest multipole order ever summed
    n_max_cap  - largest Matsubara index ever summed
    threads    - worker threads for independent blocks of frequencies
    """
    __slots__ = ['rel_tol', 'abs_floor', 'l_max_cap', 'n_max_cap', 'threads']

    def __init__(self, rel_tol=1e-8, abs_floor=0.0, l_max_cap=specfun.MAX_ORDER,
                 n_max_cap=10 ** 6, threads=1):
        rel_tol = float(rel_tol)
        if not 0.0 < rel_tol < 1.0:
            raise DomainError('rel_tol must lie in (0, 1), got %r' % rel_tol, 'rel_tol', rel_tol)
        l_max_cap = int(l_max_cap)
        if not 1 <= l_max_cap <= specfun.MAX_ORDER:
            raise DomainError('l_max_cap must lie in [1, %d], got %r'
                              % (specfun.MAX_ORDER, l_max_cap), 'l_max_cap', l_max_cap)
        n_max_cap = int(n_max_cap)
        if n_max_cap < 1:
            raise DomainError('n_max_cap must be positive, got %r' % n_max_cap,
                              'n_max_cap', n_max_cap)
        threads = int(threads)
        if threads < 1:
            raise DomainError('threads must be positive, got %r' % threads, 'threads', threads)
        super(SeriesControl, self).__init__(
            rel_tol=rel_tol, abs_floor=check_positive('abs_floor', abs_floor, True),
            l_max_cap=l_max_cap, n_max_cap=n_max_cap, threads=threads)


class ModeTerm(ImmutableRecord):
    """TE and TM shares of g_l at one Matsubara frequency

    For an ideally conducting sphere (Q = inf) g_l vanishes; te and tm then
    hold the finite limits of Q g_l instead.
    """
    __slots__ = ['l', 'n', 'te', 'tm', 'x', 'z']


class EnergyBreakdown(ImmutableRecord):
    """Matsubara free energy and its parts, J

    total = te_share + tm_share. The zero mode is counted in tm_share, the
    TE share vanishes at zero frequency.
    """
    __slots__ = ['total', 'zero_mode', 'te_share', 'tm_share', 'l_max_used', 'n_max_used',
                 'truncation_bound']


class ModeSum(object):
    """Converged sums eps_TE(x), eps_TM(x) over l on an argument array"""
    __slots__ = ['x', 'te', 'tm', 'l_max', 'bound']

    def __init__(self, x, te, tm, l_max, bound):
        self.x = x
        self.te = te
        self.tm = tm
        self.l_max = l_max
        self.bound = bound

    @property
    def total(self):
        return self.te + self.tm


def _check_jost_arguments(l, x, Q):
    order = specfun.BesselOrder(l)
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError('x must be positive and finite, got %r' % x, 'x', x)
    Q = float(Q)
    if math.isnan(Q) or Q < 0.0:
        raise DomainError('Q must be non-negative, got %r' % Q, 'Q', Q)
    return order, x, Q


def jost_te(l, x, Q):
    """f_TE(ix) = 1 + (Q/x) s_l(x) e_l(x)"""
    order, x, Q = _check_jost_arguments(l, x, Q)
    if Q == 0.0:
        return 1.0
    table = specfun.modified_riccati_table(order.l, [x])
    return 1.0 + Q / x * math.exp(table.log_s[order.l, 0] + table.log_e[order.l, 0])


def jost_tm(l, x, Q):
    """f_TM(ix) = 1 - (Q/x) s_l'(x) e_l'(x)"""
    order, x, Q = _check_jost_arguments(l, x, Q)
    if Q == 0.0:
        return 1.0
    table = specfun.modified_riccati_table(order.l, [x])
    se = math.exp(table.log_s[order.l, 0] + table.log_e[order.l, 0])
    return 1.0 - Q / x * se * table.ds[order.l, 0] * table.de[order.l, 0]


def spectral_terms(lmax, x, point):
    """Q nu g_l(x) split into TE and TM, for l = 1..lmax

    Returns two arrays of shape (lmax, len(x)). The products s_l(x)e_l(z)
    are assembled from logarithms, so no factor overflows. Q enters only
    through 1/Q, which makes the ideal conductor Q = inf the same formula.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if point.Q == 0.0:
        zeros = np.zeros((lmax, x.size))
        return zeros, zeros.copy()
    z = point.chi * x
    tx = specfun.modified_riccati_table(lmax, x)
    tz = specfun.modified_riccati_table(lmax, z)
    l = np.arange(1, lmax + 1, dtype=float)[:, None]
    nu = l + 0.5
    log_s = tx.log_s[1:]
    ds = tx.ds[1:]
    prod = np.exp(2.0 * (log_s + tz.log_e[1:]))
    se = np.exp(log_s + tx.log_e[1:])
    inv_q = 1.0 / point.Q
    te = nu * prod / (inv_q + se / x)
    tm_numerator = ds * ds * (tz.de[1:] ** 2 + l * (l + 1.0) / (z * z))
    tm = nu * prod * tm_numerator / (inv_q - se * ds * tx.de[1:] / x)
    return te, tm


def mode_term(l, n, point):
    """TE and TM shares of g_l at the Matsubara frequency n >= 1"""
    order = specfun.BesselOrder(l)
    if n < 1:
        raise DomainError('mode_term needs n >= 1, the zero mode is separate', 'n', n)
    if not point.t_ratio_R > 0.0:
        raise DomainError('mode_term needs a positive temperature', 'temperature', 0.0)
    x = n * point.t_ratio_R
    te, tm = spectral_terms(order.l, [x], point)
    if point.Q == 0.0 or point.is_ideal:
        scale = 1.0 / order.nu
    else:
        scale = 1.0 / (order.nu * point.Q)
    return ModeTerm(l=order.l, n=n, te=float(te[-1, 0]) * scale, tm=float(tm[-1, 0]) * scale,
                    x=x, z=x * point.chi)


def initial_lmax(point, x_max, rel_tol):
    """Order count that usually suffices for the sum over l

    Terms fall off like chi^(-2 nu) at small x and like
    exp(-nu^2 r/(chi x)) once nu is below x.
    """
    digits = -math.log(rel_tol) + 20.0
    decay = digits / (2.0 * math.log(point.chi))
    spread = math.sqrt(digits * point.chi * x_max / point.r)
    return int(math.ceil(decay + spread)) + 10


def envelope_tail(lmax, x, last, point):
    """Estimate of the terms past lmax from the uniform asymptotic envelope

    The envelope is pinned to the computed term at lmax and may grow like nu
    relative to it, then doubled. It also covers orders where the terms still
    rise, which the ratio of the last two terms cannot. Returns inf where the
    envelope does not settle or cannot be pinned.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    last = np.atleast_1d(np.asarray(last, dtype=float))
    z = point.chi * x
    nu0 = lmax + 0.5
    total = np.zeros(x.shape)
    start = nu0 + 1.0
    with np.errstate(over='ignore', under='ignore', divide='ignore', invalid='ignore'):
        pin = last / specfun.debye_mode_estimate(nu0, x, z)
        for _ in range(_ENVELOPE_STEPS):
            nu = start + np.arange(_ENVELOPE_CHUNK, dtype=float)[:, None]
            est = specfun.debye_mode_estimate(nu, x, z) * np.maximum(1.0, nu / nu0)
            est = np.where(np.isfinite(est), est, np.inf)
            total += np.sum(est, axis=0)
            if np.all((est[-1] <= est[-2]) & (est[-1] <= 1e-20 * total)):
                break
            start += _ENVELOPE_CHUNK
        else:
            return np.full(x.shape, np.inf)
        bound = 2.0 * pin * total
    return np.where((last > 0.0) & np.isfinite(bound), bound, np.inf)


def mode_sum(x, point, ctrl, floor=0.0):
    """Sum eps(x) = Q sum_l nu g_l(x) until converged, element-wise

    The sum over l stops once the last term is below rel_tol/10 of the partial
    sum and the tail bound is below rel_tol of it. The bound comes from the
    uniform asymptotic estimate (scaled by Q, since the Jost functions only
    reduce each term) where that applies, else from the observed ratio of
    the last two terms. Arguments whose partial sum plus tail bound is below
    floor, an absolute level in units of eps, count as converged as well; for
    those the tail may also come from envelope_tail, which still holds while
    the terms rise with l. The order count is doubled until every argument
    has converged; at l_max_cap a ConvergenceError is raised.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    te_sum = np.zeros(x.shape)
    tm_sum = np.zeros(x.shape)
    bound = np.zeros(x.shape)
    used = np.zeros(x.shape, dtype=int)
    if point.Q == 0.0 or x.size == 0:
        return ModeSum(x, te_sum, tm_sum, used, bound)

    todo = np.arange(x.size)
    lmax = min(initial_lmax(point, float(np.max(x)), ctrl.rel_tol), ctrl.l_max_cap)
    while True:
        xs = x[todo]
        te, tm = spectral_terms(lmax, xs, point)
        terms = te + tm
        partial = np.sum(terms, axis=0)
        last = terms[-1]
        with np.errstate(divide='ignore', invalid='ignore'):
            q = np.where(terms[-2] > 0.0, last / terms[-2], 0.0) if lmax > 1 \
                else np.ones(xs.shape)
            observed = np.where(q < 1.0, last * q / (1.0 - q), np.inf)
        if point.is_ideal:
            tail = observed
        else:
            debye = point.Q * specfun.debye_tail_bound(lmax, xs, point.chi * xs)
            tail = np.minimum(debye, observed)
        level = np.maximum(ctrl.rel_tol * partial, 0.0)
        ok = (last <= 0.1 * level) & (tail <= level)
        ok |= partial == 0.0
        if floor > 0.0 and not np.all(ok):
            reach = tail.copy()
            reach[~ok] = np.minimum(tail[~ok], envelope_tail(lmax, xs[~ok], last[~ok], point))
            ok |= partial + reach <= floor
            tail = reach
        done = todo[ok]
        te_sum[done] = np.sum(te[:, ok], axis=0)
        tm_sum[done] = np.sum(tm[:, ok], axis=0)
        bound[done] = tail[ok]
        used[done] = lmax
        todo = todo[~ok]
        if todo.size == 0:
            return ModeSum(x, te_sum, tm_sum, used, bound)
        if lmax >= ctrl.l_max_cap:
            worst = int(np.argmax(tail[~ok] / np.where(partial[~ok] > 0, partial[~ok], 1.0)))
            raise ConvergenceError('sum over l not converged at l_max_cap=%d for x=%g'
                                   % (ctrl.l_max_cap, xs[~ok][worst]),
                                   partial=float(partial[~ok][worst]),
                                   bound=float(tail[~ok][worst]))
        lmax = min(2 * lmax, ctrl.l_max_cap)
        log.debug('sum over l: %d arguments unconverged, raising lmax to %d', todo.size, lmax)


def static_limit(point):
    """eps(x -> 0) = sum_l nu (l + 1) chi^(-2l-2) in closed form, Q > 0"""
    r = point.r
    poly = (((6.0 * r + 24.0) * r + 33.0) * r + 18.0) * r + 4.0
    return poly / (2.0 * r ** 3 * point.chi ** 2 * (r + 2.0) ** 3)


def _prefactor(sys):
    chi = 1.0 + sys.separation / sys.radius
    return -2.0 * K_B * sys.temperature * sys.alpha0 / (sys.radius ** 3 * chi * chi)


def zero_mode(point, alpha0, T, R):
    """Closed form of the n = 0 term, J

    -k_B T alpha0 (6r^4 + 24r^3 + 33r^2 + 18r + 4)/(2 r^3 (r+1)^4 (r+2)^3 R^3),
    independent of Q > 0 and zero for Q = 0.
    """
    r = point.r
    if not r > 0.0:
        raise DomainError('r must be positive, got %r' % r, 'r', r)
    if point.Q == 0.0:
        return 0.0
    return -K_B * T * alpha0 * static_limit(point) / (R ** 3 * point.chi ** 2)


def zero_mode_series(point, alpha0, T, R, ctrl=None):
    """The n = 0 term summed over l from the Bessel machinery, J

    Evaluates eps at a reduced frequency small enough that its x -> 0 limit,
    sum_l nu (l + 1) chi^(-2l-2), is reached to double precision.
    """
    if point.Q == 0.0:
        return 0.0
    ctrl = ctrl or SeriesControl(rel_tol=1e-13)
    sums = mode_sum([_ZERO_MODE_ARGUMENT], point, ctrl)
    chi = point.chi
    return -K_B * T * alpha0 * float(sums.total[0]) / (R ** 3 * chi * chi)


def _evaluate_block(x, point, pol, ctrl):
    sums = mode_sum(x, point, ctrl)
    weight = alpha_ratio(pol, x, point)
    return weight * sums.te, weight * sums.tm, weight * sums.bound, sums.l_max


def free_energy(sys, pol, ctrl=None):
    """Free energy of the atom from the Matsubara sum, as an EnergyBreakdown

    Frequencies are summed in ascending blocks; with ctrl.threads > 1 the
    blocks of one round are evaluated concurrently and reduced in block
    order, so the result does not depend on the thread count. The sum stops
    once three consecutive terms are below rel_tol of the partial sum and the
    geometric tail estimate is too.
    """
    ctrl = ctrl or SeriesControl()
    if not sys.temperature > 0.0:
        raise DomainError('the Matsubara sum needs T > 0', 'temperature', sys.temperature)
    point = reduce(sys)
    if point.Q == 0.0 or sys.alpha0 == 0.0:
        return EnergyBreakdown(total=0.0, zero_mode=0.0, te_share=0.0, tm_share=0.0,
                               l_max_used=0, n_max_used=0, truncation_bound=0.0)

    prefactor = _prefactor(sys)
    f0 = zero_mode(point, sys.alpha0, sys.temperature, sys.radius)
    # in units of the prefactor
    partial = f0 / prefactor
    te_total = 0.0
    tm_total = 0.0
    l_bound = 0.0
    l_max_used = 0
    small_run = 0
    previous = None

    chunk = _FIRST_CHUNK
    n_start = 1
    values = np.zeros(0)
    executor = None
    if ctrl.threads > 1:
        executor = concurrent.futures.ThreadPoolExecutor(max_workers=ctrl.threads)
    try:
        while n_start <= ctrl.n_max_cap:
            blocks = []
            for _ in range(ctrl.threads):
                if n_start > ctrl.n_max_cap:
                    break
                # blocks grow geometrically but stay within the table budget
                x_end = (n_start + 2 * chunk) * point.t_ratio_R
                limit = _CELLS_PER_CHUNK // (initial_lmax(point, x_end, ctrl.rel_tol) + 1)
                chunk = max(_FIRST_CHUNK, min(2 * chunk, limit))
                n_stop = min(n_start + chunk, ctrl.n_max_cap + 1)
                blocks.append(np.arange(n_start, n_stop))
                n_start = n_stop
            xs = [n * point.t_ratio_R for n in blocks]
            if executor is None:
                results = [_evaluate_block(x, point, pol, ctrl) for x in xs]
            else:
                results = list(executor.map(lambda x: _evaluate_block(x, point, pol, ctrl), xs))

            for ns, (te, tm, bound, lmaxes) in zip(blocks, results):
                values = te + tm
                for i in range(len(ns)):
                    v = values[i]
                    te_total += te[i]
                    tm_total += tm[i]
                    l_bound += bound[i]
                    partial += v
                    l_max_used = max(l_max_used, int(lmaxes[i]))
                    floor = ctrl.rel_tol * abs(partial)
                    small_run = small_run + 1 if v < floor else 0
                    if small_run >= 3 and previous is not None:
                        q = v / previous if previous > 0.0 else 0.0
                        tail = v * q / (1.0 - q) if q < 1.0 else float('inf')
                        if tail < floor or abs(prefactor * tail) < ctrl.abs_floor:
                            n_max = int(ns[i])
                            log.debug('Matsubara sum stopped at n=%d, lmax=%d', n_max,
                                      l_max_used)
                            return _breakdown(prefactor, f0, te_total, tm_total,
                                              l_max_used, n_max, l_bound + tail)
                    previous = v
    finally:
        if executor is not None:
            executor.shutdown()

    q = values[-1] / values[-2] if len(values) > 1 and values[-2] > 0 else 1.0
    tail = values[-1] * q / (1.0 - q) if q < 1.0 else float('inf')
    raise ConvergenceError('Matsubara sum not converged at n_max_cap=%d' % ctrl.n_max_cap,
                           partial=prefactor * partial, bound=abs(prefactor) * tail)


def _breakdown(prefactor, f0, te_total, tm_total, l_max_used, n_max, bound):
    te_share = prefactor * te_total
    tm_share = prefactor * tm_total + f0
    return EnergyBreakdown(total=te_share + tm_share, zero_mode=f0, te_share=te_share,
                           tm_share=tm_share, l_max_used=l_max_used, n_max_used=n_max,
                           truncation_bound=abs(prefactor) * bound)


__all__ = (
    'SeriesControl',
    'ModeTerm',
    'EnergyBreakdown',
    'ModeSum',
    'jost_te',
    'jost_tm',
    'spectral_terms',
    'mode_term',
    'initial_lmax',
    'envelope_tail',
    'mode_sum',
    'static_limit',
    'zero_mode',
    'zero_mode_series',
    'free_energy',
)
