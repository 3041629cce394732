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

"""Riccati-Bessel functions

Two families are provided. The modified pair

    s_l(x) = sqrt(pi x/2) I_{l+1/2}(x),    e_l(x) = sqrt(2x/pi) K_{l+1/2}(x)

enters the free energy on the imaginary frequency axis, the ordinary pair

    J(y) = y j_l(y),    Y(y) = y y_l(y)

enters once the mode functions are continued to imaginary argument.

The table functions evaluate every order 0..lmax at once on an array of
arguments, which is how the series code consumes them. s_l and e_l are
returned as logarithms, J and Y as mantissas with a per-order exponent, so
products such as s_l(x)e_l(z) never overflow. The irregular functions (e, Y)
come from upward recurrence, the regular ones (s, J) from a continued
fraction started backward recurrence for their ratios, normalised through
the Wronskian.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
import operator

import numpy as np
import scipy.special

from casimirpolder.core import (
    CapabilityError,
    ConvergenceError,
    DomainError,
    ImmutableRecord,
)

log = logging.getLogger(__name__)

MAX_ORDER = 5000

# Mantissas are renormalised once they pass this magnitude
_BIG = 1e200
_TINY = 1e-300

_CF_EPS = 1e-15
_CF_MAX_TERMS = 100000

# Largest exponent still returned unscaled by the scalar front ends
_UNSCALED_EXP_LIMIT = 600.0


class BesselOrder(ImmutableRecord):
    """Multipole order l >= 1 together with nu = l + 1/2"""
    __slots__ = ['l']

    def __init__(self, l):
        if isinstance(l, BesselOrder):
            l = l.l
        try:
            l = operator.index(l)
        except TypeError:
            raise DomainError('multipole order must be an integer, got %r' % (l,), 'l', l)
        if l < 1:
            raise DomainError('multipole order must be >= 1, got %d' % l, 'l', l)
        if l > MAX_ORDER:
            raise CapabilityError('multipole order %d above supported maximum %d'
                                  % (l, MAX_ORDER), MAX_ORDER)
        super(BesselOrder, self).__init__(l=l)

    @property
    def nu(self):
        return self.l + 0.5


class RiccatiPair(ImmutableRecord):
    """s_l, s_l', e_l, e_l' at one argument

    The true values are s*exp(s_scale), s_prime*exp(s_scale) and likewise for
    the e family. Both scales are 0 whenever the values are representable.
    """
    __slots__ = ['s', 's_prime', 'e', 'e_prime', 's_scale', 'e_scale']

    def wronskian(self):
        """s e' - s' e, which is -1 identically"""
        return ((self.s * self.e_prime - self.s_prime * self.e)
                * math.exp(self.s_scale + self.e_scale))


class OscillatoryRiccatiPair(ImmutableRecord):
    """J, J', Y, Y' at one argument, scaled like RiccatiPair"""
    __slots__ = ['j', 'j_prime', 'y', 'y_prime', 'j_scale', 'y_scale']

    def wronskian(self):
        """J Y' - J' Y, which is +1 identically"""
        return ((self.j * self.y_prime - self.j_prime * self.y)
                * math.exp(self.j_scale + self.y_scale))


class ModifiedRiccatiTable(object):
    """log s_l, s_l'/s_l, log e_l, e_l'/e_l for orders 0..lmax

    Every attribute has shape (lmax + 1, len(x)).
    """
    __slots__ = ['x', 'log_s', 'ds', 'log_e', 'de']

    def __init__(self, x, log_s, ds, log_e, de):
        self.x = x
        self.log_s = log_s
        self.ds = ds
        self.log_e = log_e
        self.de = de

    @property
    def lmax(self):
        return self.log_s.shape[0] - 1


class OscillatoryRiccatiTable(object):
    """Mantissas of J, J', Y, Y' for orders 0..lmax

    J = j*exp(-scale) and Y = y*exp(+scale); every attribute has shape
    (lmax + 1, len(y)).
    """
    __slots__ = ['arg', 'j', 'jp', 'y', 'yp', 'scale']

    def __init__(self, arg, j, jp, y, yp, scale):
        self.arg = arg
        self.j = j
        self.jp = jp
        self.y = y
        self.yp = yp
        self.scale = scale

    @property
    def lmax(self):
        return self.j.shape[0] - 1

    def h2(self):
        """Mantissa of H2 = J - iY, true value h2()*exp(scale)"""
        return self.j * np.exp(-2.0 * self.scale) - 1j * self.y

    def h2p(self):
        return self.jp * np.exp(-2.0 * self.scale) - 1j * self.yp


def _as_order(order):
    if isinstance(order, BesselOrder):
        return order
    return BesselOrder(order)


def _check_arguments(x):
    x = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    bad = ~np.isfinite(x) | (x <= 0.0)
    if bad.any():
        value = x[bad][0]
        raise DomainError('argument must be positive and finite, got %r' % value,
                          'x', value)
    return x


def _check_lmax(lmax):
    lmax = operator.index(lmax)
    if lmax < 0:
        raise DomainError('lmax must be non-negative, got %d' % lmax, 'lmax', lmax)
    if lmax > MAX_ORDER + 1:
        raise CapabilityError('lmax %d above supported maximum %d'
                              % (lmax, MAX_ORDER + 1), MAX_ORDER)
    return lmax


def ratio_continued_fraction(order, x, sign):
    """u_{L+1}/u_L of the minimal solution of u_{l+1} = sign*u_{l-1} + ... at L = order

    For sign = +1 this is the ratio of the regular modified functions s_l,
    for sign = -1 that of the ordinary J. The continued fraction

        1/(b_{L+1} + sign/(b_{L+2} + sign/(b_{L+3} + ...))),  b_k = (2k+1)/x

    is evaluated element-wise by the modified Lentz method. It converges
    quickly once L exceeds about 2x.
    """
    x = np.asarray(x, dtype=float)
    f = np.full(x.shape, _TINY)
    c = f.copy()
    d = np.zeros(x.shape)
    done = np.zeros(x.shape, dtype=bool)
    a = 1.0
    k = order + 1
    for _ in range(_CF_MAX_TERMS):
        b = (2 * k + 1) / x
        d = b + a * d
        d = np.where(d == 0.0, _TINY, d)
        c = b + a / c
        c = np.where(c == 0.0, _TINY, c)
        d = 1.0 / d
        delta = c * d
        f = np.where(done, f, f * delta)
        done |= np.abs(delta - 1.0) < _CF_EPS
        if done.all():
            return f
        a = sign
        k += 1
    raise ConvergenceError('ratio continued fraction at order %d did not converge' % order,
                           partial=f)


def _start_order(lmax, x):
    return max(lmax + 1, int(math.ceil(2.0 * float(np.max(x)))) + 20)


def modified_riccati_table(lmax, x):
    """Evaluate s_l, e_l and their logarithmic derivatives for l = 0..lmax

    Returns a ModifiedRiccatiTable. Values are exact to a few ulps of the
    logarithm for any positive argument; nothing overflows.
    """
    lmax = _check_lmax(lmax)
    x = _check_arguments(x)
    shape = (lmax + 1,) + x.shape
    ls = np.arange(lmax + 1, dtype=float)[:, None]

    # e family, upward: e_{l+1} = e_{l-1} + (2l+1)/x e_l, mantissas share a
    # running log scale so the current and next orders stay comparable
    log_e = np.empty(shape)
    ratio = np.empty(shape)
    cur = np.ones(x.shape)
    nxt = 1.0 + 1.0 / x
    scale = -x.copy()
    for l in range(lmax + 1):
        log_e[l] = np.log(cur) + scale
        ratio[l] = nxt / cur
        if l == lmax:
            break
        cur, nxt = nxt, cur + (2 * l + 3) / x * nxt
        big = nxt > _BIG
        if big.any():
            f = np.where(big, nxt, 1.0)
            cur = cur / f
            nxt = nxt / f
            scale = scale + np.log(f)

    # s family: rho_l = s_{l+1}/s_l downward from a continued fraction,
    # then s_l = 1/(e_{l+1} + rho_l e_l) from the Wronskian
    top = _start_order(lmax, x)
    rho = ratio_continued_fraction(top, x, 1.0)
    rhos = np.empty(shape)
    for l in range(top, 0, -1):
        if l <= lmax:
            rhos[l] = rho
        rho = 1.0 / ((2 * l + 1) / x + rho)
    rhos[0] = rho

    log_s = -log_e - np.log(ratio + rhos)
    ds = rhos + (ls + 1.0) / x
    de = (ls + 1.0) / x - ratio
    log.debug('modified Riccati table: lmax=%d, %d arguments, backward start %d',
              lmax, x.size, top)
    return ModifiedRiccatiTable(x, log_s, ds, log_e, de)


def oscillatory_riccati_table(lmax, y):
    """Evaluate J, J', Y, Y' for l = 0..lmax

    Returns an OscillatoryRiccatiTable. Y is recurred upward from its l = 0, 1
    closed forms. Above the turning point, l >= y, J follows from the
    backward ratio and the Wronskian; below it J and J' come from
    scipy.special.spherical_jn, where J is of order one.
    """
    lmax = _check_lmax(lmax)
    y = _check_arguments(y)
    shape = (lmax + 1,) + y.shape
    ls = np.arange(lmax + 1, dtype=float)[:, None]

    ym = np.empty(shape)
    ynext = np.empty(shape)
    scales = np.empty(shape)
    cur = -np.cos(y)
    nxt = -np.cos(y) / y - np.sin(y)
    scale = np.zeros(y.shape)
    for l in range(lmax + 1):
        ym[l] = cur
        ynext[l] = nxt
        scales[l] = scale
        if l == lmax:
            break
        cur, nxt = nxt, (2 * l + 3) / y * nxt - cur
        big = np.abs(nxt) > _BIG
        if big.any():
            f = np.where(big, np.abs(nxt), 1.0)
            cur = cur / f
            nxt = nxt / f
            scale = scale + np.log(f)
    yp = (ls + 1.0) / y * ym - ynext

    top = _start_order(lmax, y)
    rho = ratio_continued_fraction(top, y, -1.0)
    rhos = np.empty(shape)
    with np.errstate(divide='ignore', over='ignore', invalid='ignore'):
        for l in range(top, 0, -1):
            if l <= lmax:
                rhos[l] = rho
            rho = 1.0 / ((2 * l + 1) / y - rho)
        rhos[0] = rho
        jm = 1.0 / (rhos * ym - ynext)
        jp = ((ls + 1.0) / y - rhos) * jm

    turning = np.maximum(1.0, np.ceil(y))
    below = ls < turning[None, :]
    nbelow = int(min(lmax + 1, np.max(turning)))
    if nbelow > 0:
        lb = np.arange(nbelow)[:, None]
        jn = scipy.special.spherical_jn(lb, y[None, :])
        jnp = scipy.special.spherical_jn(lb, y[None, :], derivative=True)
        direct = y * jn * np.exp(scales[:nbelow])
        direct_p = (jn + y * jnp) * np.exp(scales[:nbelow])
        jm[:nbelow] = np.where(below[:nbelow], direct, jm[:nbelow])
        jp[:nbelow] = np.where(below[:nbelow], direct_p, jp[:nbelow])
    return OscillatoryRiccatiTable(y, jm, jp, ym, yp, scales)


def _split_exponent(log_value):
    if abs(log_value) < _UNSCALED_EXP_LIMIT:
        return 0.0
    return math.floor(log_value)


def riccati_ik(order, x):
    """Modified Riccati-Bessel pair s_l, e_l and derivatives at x > 0

    Returns a RiccatiPair, scaled only where a value would not fit a double.
    """
    order = _as_order(order)
    x = float(_check_arguments(x)[0])
    table = modified_riccati_table(order.l, [x])
    log_s = float(table.log_s[order.l, 0])
    log_e = float(table.log_e[order.l, 0])
    s_scale = _split_exponent(log_s)
    e_scale = _split_exponent(log_e)
    s = math.exp(log_s - s_scale)
    e = math.exp(log_e - e_scale)
    return RiccatiPair(s=s, s_prime=s * float(table.ds[order.l, 0]),
                       e=e, e_prime=e * float(table.de[order.l, 0]),
                       s_scale=s_scale, e_scale=e_scale)


def riccati_jy(order, x):
    """Ordinary Riccati-Bessel pair J, Y and derivatives at x > 0"""
    order = _as_order(order)
    x = float(_check_arguments(x)[0])
    table = oscillatory_riccati_table(order.l, [x])
    l = order.l
    scale = float(table.scale[l, 0])
    if abs(scale) < _UNSCALED_EXP_LIMIT:
        jf = math.exp(-scale)
        yf = math.exp(scale)
        return OscillatoryRiccatiPair(j=float(table.j[l, 0]) * jf,
                                      j_prime=float(table.jp[l, 0]) * jf,
                                      y=float(table.y[l, 0]) * yf,
                                      y_prime=float(table.yp[l, 0]) * yf,
                                      j_scale=0.0, y_scale=0.0)
    return OscillatoryRiccatiPair(j=float(table.j[l, 0]), j_prime=float(table.jp[l, 0]),
                                  y=float(table.y[l, 0]), y_prime=float(table.yp[l, 0]),
                                  j_scale=-scale, y_scale=scale)


def debye_eta(w):
    """sqrt(1 + w^2) + log(w/(1 + sqrt(1 + w^2)))"""
    w = np.asarray(w, dtype=float)
    root = np.sqrt(1.0 + w * w)
    return root + np.log(w / (1.0 + root))


def debye_mode_estimate(nu, x, z):
    """Leading uniform asymptotic value of nu*g_l(x, z) with unit Jost functions

    Element-wise, without validity checks.
    """
    nu = np.asarray(nu, dtype=float)
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    tx = 1.0 / np.sqrt(1.0 + (x / nu) ** 2)
    tz = 1.0 / np.sqrt(1.0 + (z / nu) ** 2)
    damping = np.exp(-2.0 * nu * (debye_eta(z / nu) - debye_eta(x / nu)))
    return 0.25 * nu * damping * (x * z * tx * tz / nu ** 2
                                  + nu ** 2 * (1.0 + tz ** 2) / (x * z * tx * tz))


def debye_applicable(nu, x, z):
    """True where the uniform estimate may be trusted"""
    return np.asarray(nu) >= 10.0 * np.maximum(1.0, np.maximum(x, z))


def debye_tail_estimate(order, x, z):
    """Uniform asymptotic estimate of nu*g_l(x, z) for one large order

    Used to bound the truncation error of the multipole sum, never as a value
    in its own right.
    """
    order = _as_order(order)
    x = float(_check_arguments(x)[0])
    z = float(_check_arguments(z)[0])
    if z < x:
        raise DomainError('z must not be below x, got x=%r z=%r' % (x, z), 'z', z)
    if not debye_applicable(order.nu, x, z):
        raise CapabilityError('uniform estimate needs nu >= 10 max(1, x, z); '
                              'nu=%g x=%g z=%g' % (order.nu, x, z),
                              10.0 * max(1.0, x, z))
    return float(debye_mode_estimate(order.nu, x, z))


def debye_tail_bound(l, x, z):
    """Bound on sum_{l' > l} nu' g_l'(x, z) from the uniform estimate

    The estimate decays geometrically in l with ratio q, so the tail is at
    most est(l) q/(1 - q). Returns inf where the estimate is not applicable.
    """
    nu = l + 0.5
    x = np.asarray(x, dtype=float)
    z = np.asarray(z, dtype=float)
    est = debye_mode_estimate(nu, x, z)
    q = debye_mode_estimate(nu + 1.0, x, z) / est
    with np.errstate(divide='ignore', invalid='ignore'):
        bound = np.where(q < 1.0, est * q / (1.0 - q), np.inf)
    return np.where(debye_applicable(nu, x, z), bound, np.inf)


__all__ = (
    'MAX_ORDER',
    'BesselOrder',
    'RiccatiPair',
    'OscillatoryRiccatiPair',
    'ModifiedRiccatiTable',
    'OscillatoryRiccatiTable',
    'ratio_continued_fraction',
    'modified_riccati_table',
    'oscillatory_riccati_table',
    'riccati_ik',
    'riccati_jy',
    'debye_eta',
    'debye_mode_estimate',
    'debye_applicable',
    'debye_tail_estimate',
    'debye_tail_bound',
)
