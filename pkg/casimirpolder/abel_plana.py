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

"""Free energy split into a zero temperature part and two thermal parts

Summing the Matsubara series with the Abel-Plana formula gives

    F = E0 + F1 + F2

E0 is an integral over imaginary frequencies and does not depend on T. F1
comes from the pole of the single oscillator polarizability, F2 from the
branch cut, and both depend on T only through a = T_omega/T. The thermal
parts need the mode sum continued to imaginary argument, where the modified
Riccati-Bessel functions turn into the ordinary ones:

    s_l(iy) = i^(l+1) J(y),   e_l(iy) = (-i)^(l+1) H2(y),   H2 = J - iY

The branch is fixed so that the TM part of Im eps starts as -2y^3/chi^4.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math

import numpy as np

from casimirpolder.core import (
    CapabilityError,
    ConvergenceError,
    DomainError,
    HBAR,
    HBAR_C,
    ImmutableRecord,
    SingularityError,
    bose,
)
from casimirpolder.core import quadrature
from casimirpolder.core import specfun
from casimirpolder.matsubara import SeriesControl, initial_lmax, mode_sum, static_limit
from casimirpolder.model import alpha_ratio, reduce

log = logging.getLogger(__name__)

# Half width of the intervals around the logarithmic singularity at u = 1
SINGULAR_HALF_WIDTH = 0.25

# |f| below this counts as a zero of a continued Jost function
_JOST_ZERO = 1e-12

# Fraction of rel_tol times eps(0) below which E0 integrand values are not refined
_E0_FLOOR = 1e-3

LOGARITHMIC = 'logarithmic'
PRINCIPAL_VALUE = 'principal_value'


class AbelPlanaBreakdown(ImmutableRecord):
    """E0 + F1 + F2, J"""
    __slots__ = ['E0', 'F1', 'F2', 'total']


class ContinuedSum(object):
    """eps = Q sum_l nu g_l at iy and its y derivative, split into TE and TM"""
    __slots__ = ['y', 'te', 'tm', 'dte', 'dtm', 'l_max']

    def __init__(self, y, te, tm, dte, dtm, l_max):
        self.y = y
        self.te = te
        self.tm = tm
        self.dte = dte
        self.dtm = dtm
        self.l_max = l_max

    @property
    def total(self):
        return self.te + self.tm

    @property
    def derivative(self):
        return self.dte + self.dtm


def continued_terms(lmax, y, point, derivative=False, sign=1):
    """Q nu g_l(sign*iy) for l = 1..lmax, as complex TE and TM arrays

    With derivative=True the y derivatives are returned as well, obtained
    from the Riccati-Bessel equation u'' = (l(l+1)/y^2 - 1)u. sign = -1
    evaluates the conjugate point -iy through H1 = J + iY.

    Only scale free combinations of the mantissas enter: the products
    J H2(y) and their derivatives, which stay of order one, and the ratios
    H2(chi y)/H2(y), which are bounded by one at large orders. Nothing is
    squared before it is normalised, so no order overflows.

    Returns (te, tm) or (te, tm, dte, dtm), each of shape (lmax, len(y)).
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    shape = (lmax, y.size)
    if point.Q == 0.0:
        zeros = np.zeros(shape, dtype=complex)
        if derivative:
            return zeros, zeros.copy(), zeros.copy(), zeros.copy()
        return zeros, zeros.copy()

    chi = point.chi
    w = chi * y
    ty = specfun.oscillatory_riccati_table(lmax, y)
    tw = specfun.oscillatory_riccati_table(lmax, w)
    l = np.arange(1, lmax + 1, dtype=float)[:, None]
    nu = l + 0.5
    L = l * (l + 1.0)
    bend = L / (y * y) - 1.0

    def hankel(table):
        with np.errstate(under='ignore'):
            damp = np.exp(-2.0 * table.scale[1:])
        return (table.j[1:] * damp - sign * 1j * table.y[1:],
                table.jp[1:] * damp - sign * 1j * table.yp[1:])

    a = ty.j[1:]
    ap = ty.jp[1:]
    c, cp = hankel(ty)
    b, bp = hankel(tw)

    # J H2 and its derivative pairs at y, true values
    P = a * c
    Pa = ap * c
    Pc = a * cp
    Pp = ap * cp

    # H2(w)/H2(y) and friends; underflow to zero is harmless
    with np.errstate(under='ignore', over='ignore'):
        shift = np.exp(tw.scale[1:] - ty.scale[1:])
        R = b / c * shift
        S = bp / c * shift
        Rp = bp / cp * shift
        Rq = b / cp * shift
        M = Rp * Rp + Rq * Rq * L / (w * w)
        MP = (2.0 * chi * (2.0 * L / (w * w) - 1.0) * Rq * Rp
              - 2.0 * chi * L * Rq * Rq / w ** 3)
    iy = sign * 1j * y

    if point.is_ideal:
        te = iy * P * R * R
        tm = iy * Pp * M
    else:
        inv_q = 1.0 / point.Q
        d_te = inv_q + P / iy
        d_tm = inv_q + Pp / iy
        small = np.minimum(np.abs(d_te), np.abs(d_tm)) * point.Q < _JOST_ZERO
        if small.any():
            where = np.nonzero(small)
            raise SingularityError('continued Jost function vanishes at l=%d, y=%r'
                                   % (int(where[0][0]) + 1, float(y[where[1][0]])),
                                   location=(int(where[0][0]) + 1, float(y[where[1][0]])))
        n_te = P * P * R * R
        n_tm = Pp * Pp * M
        te = n_te / d_te
        tm = n_tm / d_tm

    if not derivative:
        return nu * te, nu * tm

    if point.is_ideal:
        dte = 1j * sign * (P * R * R
                           + y * (Pa * R * R + 2.0 * chi * P * R * S - Pc * R * R))
        dtm = 1j * sign * (Pp * M + y * (bend * (Pc - Pa) * M + Pp * MP))
    else:
        dn_te = 2.0 * P * Pa * R * R + 2.0 * chi * P * P * R * S
        dd_te = (-P / (y * y) + (Pa + Pc) / y) / (sign * 1j)
        dn_tm = 2.0 * bend * Pp * Pc * M + Pp * Pp * MP
        dd_tm = (-Pp / (y * y) + bend * (Pc + Pa) / y) / (sign * 1j)
        dte = dn_te / d_te - n_te * dd_te / (d_te * d_te)
        dtm = dn_tm / d_tm - n_tm * dd_tm / (d_tm * d_tm)
    return nu * te, nu * tm, nu * dte, nu * dtm


def g_continued(l, y, point, sign=1):
    """g_l at the imaginary argument sign*iy, y = xi R/c > 0

    For Q = inf the finite limit of Q g_l is returned instead.
    """
    order = specfun.BesselOrder(l)
    y = float(y)
    if not y > 0.0 or math.isinf(y):
        raise DomainError('y must be positive and finite, got %r' % y, 'y', y)
    te, tm = continued_terms(order.l, [y], point, sign=sign)
    scale = order.nu if (point.Q == 0.0 or point.is_ideal) else order.nu * point.Q
    return complex(te[-1, 0] + tm[-1, 0]) / scale


def _converged(terms, partial, rel_tol):
    last = np.abs(terms[-1])
    prev = np.abs(terms[-2]) if terms.shape[0] > 1 else np.full(last.shape, np.inf)
    with np.errstate(divide='ignore', invalid='ignore'):
        q = np.where(prev > 0.0, last / prev, 0.0)
        tail = np.where(q < 1.0, last * q / (1.0 - q), np.inf)
    floor = rel_tol * np.abs(partial)
    return (last <= 0.1 * floor) & (tail <= floor) | (partial == 0.0)


def continued_sum(y, point, ctrl, derivative=False, sign=1):
    """Sum the continued mode terms over l, element-wise over y

    Real and imaginary parts converge separately to rel_tol; the order count
    is doubled until they do.
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    out = [np.zeros(y.shape, dtype=complex) for _ in range(4)]
    used = np.zeros(y.shape, dtype=int)
    if point.Q == 0.0 or y.size == 0:
        return ContinuedSum(y, out[0], out[1], out[2], out[3], used)

    todo = np.arange(y.size)
    lmax = min(max(initial_lmax(point, float(np.max(y)), ctrl.rel_tol),
                   int(math.ceil(2.0 * point.chi * float(np.max(y)))) + 20),
               ctrl.l_max_cap)
    while True:
        ys = y[todo]
        parts = continued_terms(lmax, ys, point, derivative=derivative, sign=sign)
        ok = np.ones(ys.shape, dtype=bool)
        for k in range(0, len(parts), 2):
            terms = parts[k] + parts[k + 1]
            partial = np.sum(terms, axis=0)
            ok &= _converged(terms.real, partial.real, ctrl.rel_tol)
            ok &= _converged(terms.imag, partial.imag, ctrl.rel_tol)
        done = todo[ok]
        for k, part in enumerate(parts):
            out[k][done] = np.sum(part[:, ok], axis=0)
        used[done] = lmax
        todo = todo[~ok]
        if todo.size == 0:
            return ContinuedSum(y, out[0], out[1], out[2], out[3], used)
        if lmax >= ctrl.l_max_cap:
            raise ConvergenceError('continued sum over l not converged at l_max_cap=%d '
                                   'for y=%g' % (ctrl.l_max_cap, ys[~ok][0]),
                                   partial=complex(np.sum(parts[0][:, ~ok][:, 0]
                                                          + parts[1][:, ~ok][:, 0])))
        lmax = min(2 * lmax, ctrl.l_max_cap)


class SpectralFunctions(object):
    """eps on the real and imaginary axes of one geometry

    e0_at(x) = eps(x) = Q sum_l nu g_l(x)
    e1_at(y) = Re eps(iy)
    e2_at(y) = Im eps(iy)

    None of these depend on the temperature.
    """

    def __init__(self, point, ctrl=None):
        self.point = point
        self.ctrl = ctrl or SeriesControl()

    def e0_at(self, x):
        return mode_sum(x, self.point, self.ctrl).total

    def e1_at(self, y):
        return continued_sum(y, self.point, self.ctrl).total.real

    def e2_at(self, y):
        return continued_sum(y, self.point, self.ctrl).total.imag

    def e2_shares(self, y):
        """(TE, TM) parts of e2"""
        sums = continued_sum(y, self.point, self.ctrl)
        return sums.te.imag, sums.tm.imag

    def e2_with_derivative(self, y):
        """e2 and de2/dy from the Riccati-Bessel equation"""
        sums = continued_sum(y, self.point, self.ctrl, derivative=True)
        return sums.total.imag, sums.derivative.imag

    def e2_derivative_richardson(self, y, step=None):
        """de2/dy by Ridders extrapolated central differences, for cross-checks"""
        y = float(y)
        h = step if step is not None else 0.1 * y
        value, _ = quadrature.derivative(lambda v: float(self.e2_at([v])[0]), y, h)
        return float(value)


def _require_oscillator(pol):
    if pol.is_static:
        raise CapabilityError('the thermal Abel-Plana parts need the single oscillator '
                              'polarizability')


def zero_temperature_energy(sys, pol, ctrl=None):
    """E0 = -(hbar c/(pi R^4 chi^2)) int_0^inf alpha(x) eps(x) dx, J"""
    ctrl = ctrl or SeriesControl()
    point = reduce(sys)
    if point.Q == 0.0 or sys.alpha0 == 0.0:
        return 0.0
    prefactor = HBAR_C * sys.alpha0 / (math.pi * sys.radius ** 4 * point.chi ** 2)
    # eps far below its x -> 0 value no longer needs resolving over l
    floor = max(_E0_FLOOR * ctrl.rel_tol * static_limit(point), ctrl.abs_floor / prefactor)

    def integrand(x):
        return alpha_ratio(pol, x, point) * mode_sum(x, point, ctrl, floor=floor).total

    # decay lengths: q_a from the polarizability, 1/2r from eps
    scale = 1.0 / (2.0 * point.r)
    if not pol.is_static:
        scale = min(scale, point.q_a)
    value, err = quadrature.semi_infinite(integrand, 0.0, scale=scale, rel_tol=ctrl.rel_tol)
    log.debug('E0 quadrature: %r +- %r', value, err)
    return -prefactor * value


def _thermal_prefactor(sys, point):
    return HBAR * sys.omega_a * sys.alpha0 / (sys.radius ** 3 * point.chi ** 2)


def thermal_correction_1(sys, pol, ctrl=None):
    """F1 = -(alpha0 e1/(R^3 chi^2)) hbar omega_a/(exp(2 pi a) - 1), J

    e1 is taken at y = q_a, so it does not depend on T.
    """
    _require_oscillator(pol)
    ctrl = ctrl or SeriesControl()
    point = reduce(sys)
    if point.Q == 0.0 or sys.temperature == 0.0 or sys.alpha0 == 0.0:
        return 0.0
    occupation = float(bose(2.0 * math.pi * point.a))
    if occupation == 0.0:
        return 0.0
    e1 = float(SpectralFunctions(point, ctrl).e1_at([point.q_a])[0])
    return -_thermal_prefactor(sys, point) * e1 * occupation


def planck_derivative(v):
    """d/dv 1/(exp(2 pi v) - 1)"""
    v = np.asarray(v, dtype=float)
    q = np.exp(-2.0 * math.pi * v)
    return -2.0 * math.pi * q / np.expm1(-2.0 * math.pi * v) ** 2


def log_kernel(u):
    """log|(1 + u)/(1 - u)|"""
    u = np.asarray(u, dtype=float)
    return np.log1p(u) - np.log(np.abs(1.0 - u))


def _segments(f, a, rel_tol, singular):
    """int_0^inf f(u) du with a logarithmic singularity at u = 1

    The Planck factor cuts the integrand off at u of order 1/(2 pi a); when
    it has decayed below rel_tol well before 1 - delta the singular region
    is skipped.
    """
    delta = SINGULAR_HALF_WIDTH
    cutoff = 2.0 * math.pi * a * (1.0 - delta)
    tail_scale = max(1.0 / (2.0 * math.pi * a), 1e-3)
    if cutoff > math.log(1.0 / rel_tol) + 5.0:
        value, _ = quadrature.semi_infinite(f, 0.0, scale=tail_scale, rel_tol=rel_tol)
        return value
    total, _ = quadrature.adaptive_gauss_legendre(f, 0.0, 1.0 - delta, rel_tol=rel_tol,
                                                  abs_tol=0.0)
    if singular:
        left, _ = quadrature.tanh_sinh(f, 1.0 - delta, 1.0, rel_tol=rel_tol,
                                       abs_tol=1e-300 + rel_tol * abs(total))
        right, _ = quadrature.tanh_sinh(f, 1.0, 1.0 + delta, rel_tol=rel_tol,
                                        abs_tol=1e-300 + rel_tol * abs(total))
    else:
        left, _ = quadrature.adaptive_gauss_legendre(f, 1.0 - delta, 1.0, rel_tol=rel_tol,
                                                     abs_tol=rel_tol * abs(total))
        right, _ = quadrature.adaptive_gauss_legendre(f, 1.0, 1.0 + delta, rel_tol=rel_tol,
                                                      abs_tol=rel_tol * abs(total))
    tail, _ = quadrature.semi_infinite(f, 1.0 + delta, scale=tail_scale, rel_tol=rel_tol,
                                       abs_tol=rel_tol * abs(total + left + right))
    return total + left + right + tail


def thermal_correction_2(sys, pol, ctrl=None, method=LOGARITHMIC):
    """Branch cut part F2 of the free energy, J

    logarithmic (default):
        F2 = -(hbar omega_a alpha0/(pi R^3 chi^2))
             int_0^inf d/du[E2(u) P(au)] log|(1+u)/(1-u)| du
    principal_value:
        F2 = (2 hbar omega_a alpha0/(pi R^3 chi^2))
             PV int_0^inf E2(u) P(au)/(1 - u^2) du

    with E2(u) = Im eps(i u q_a) and P(v) = 1/(exp(2 pi v) - 1). The two are
    related by an integration by parts.
    """
    _require_oscillator(pol)
    ctrl = ctrl or SeriesControl()
    point = reduce(sys)
    if point.Q == 0.0 or sys.temperature == 0.0 or sys.alpha0 == 0.0:
        return 0.0
    a = point.a
    q_a = point.q_a
    spectral = SpectralFunctions(point, ctrl)
    prefactor = _thermal_prefactor(sys, point) / math.pi

    if method == LOGARITHMIC:
        def integrand(u):
            e2, de2 = spectral.e2_with_derivative(u * q_a)
            bracket = q_a * de2 * bose(2.0 * math.pi * a * u) + a * e2 * planck_derivative(a * u)
            return bracket * log_kernel(u)

        return -prefactor * _segments(integrand, a, ctrl.rel_tol, singular=True)

    if method == PRINCIPAL_VALUE:
        def h(u):
            return spectral.e2_at(u * q_a) * bose(2.0 * math.pi * a * u)

        def regular(u):
            return h(u) / (1.0 - u * u)

        delta = SINGULAR_HALF_WIDTH
        if 2.0 * math.pi * a * (1.0 - delta) > math.log(1.0 / ctrl.rel_tol) + 5.0:
            value, _ = quadrature.semi_infinite(regular, 0.0,
                                                scale=1.0 / (2.0 * math.pi * a),
                                                rel_tol=ctrl.rel_tol)
            return 2.0 * prefactor * value

        def folded(v):
            # PV int over [1 - delta, 1 + delta] of g(u)/(1 - u), g = h/(1 + u)
            lo = 1.0 - v
            hi = 1.0 + v
            return (h(lo) / (1.0 + lo) - h(hi) / (1.0 + hi)) / v

        inner, _ = quadrature.adaptive_gauss_legendre(regular, 0.0, 1.0 - delta,
                                                      rel_tol=ctrl.rel_tol)
        middle, _ = quadrature.adaptive_gauss_legendre(folded, 0.0, delta,
                                                       rel_tol=ctrl.rel_tol,
                                                       abs_tol=ctrl.rel_tol * abs(inner))
        outer, _ = quadrature.semi_infinite(regular, 1.0 + delta,
                                            scale=max(1.0 / (2.0 * math.pi * a), 1e-3),
                                            rel_tol=ctrl.rel_tol,
                                            abs_tol=ctrl.rel_tol * abs(inner + middle))
        return 2.0 * prefactor * (inner + middle + outer)

    raise ValueError('Unknown integration method %r' % (method,))


def free_energy(sys, pol, ctrl=None):
    """E0 + F1 + F2 as an AbelPlanaBreakdown

    At T = 0 only E0 is evaluated.
    """
    ctrl = ctrl or SeriesControl()
    _require_oscillator(pol)
    E0 = zero_temperature_energy(sys, pol, ctrl)
    if sys.temperature == 0.0:
        return AbelPlanaBreakdown(E0=E0, F1=0.0, F2=0.0, total=E0)
    F1 = thermal_correction_1(sys, pol, ctrl)
    F2 = thermal_correction_2(sys, pol, ctrl)
    log.debug('Abel-Plana parts: E0=%r F1=%r F2=%r', E0, F1, F2)
    return AbelPlanaBreakdown(E0=E0, F1=F1, F2=F2, total=E0 + F1 + F2)


def thermal_part(sys, pol, ctrl=None):
    """F1 + F2, the temperature dependent part of the free energy, J"""
    ctrl = ctrl or SeriesControl()
    return thermal_correction_1(sys, pol, ctrl) + thermal_correction_2(sys, pol, ctrl)


__all__ = (
    'SINGULAR_HALF_WIDTH',
    'LOGARITHMIC',
    'PRINCIPAL_VALUE',
    'AbelPlanaBreakdown',
    'ContinuedSum',
    'continued_terms',
    'g_continued',
    'continued_sum',
    'SpectralFunctions',
    'zero_temperature_energy',
    'thermal_correction_1',
    'thermal_correction_2',
    'planck_derivative',
    'log_kernel',
    'free_energy',
    'thermal_part',
)
