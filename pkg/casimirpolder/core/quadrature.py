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

"""Quadrature and numerical differentiation

All integrands are called with a 1-d array of abscissae and must return an
array of the same length, so that one call evaluates a whole refinement
level. You probably want the higher level routines in abel_plana and
asymptotics rather than these.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math

import numpy as np
import numpy.polynomial.laguerre
import numpy.polynomial.legendre

from casimirpolder.core import ConvergenceError, DomainError, PrecisionError

log = logging.getLogger(__name__)

_legendre_rules = {}
_laguerre_rules = {}


def legendre_rule(n):
    """Gauss-Legendre nodes and weights on [-1, 1], cached"""
    try:
        return _legendre_rules[n]
    except KeyError:
        rule = numpy.polynomial.legendre.leggauss(n)
        _legendre_rules[n] = rule
        return rule


def laguerre_rule(n):
    """Gauss-Laguerre nodes and weights for the weight exp(-s), cached"""
    try:
        return _laguerre_rules[n]
    except KeyError:
        rule = numpy.polynomial.laguerre.laggauss(n)
        _laguerre_rules[n] = rule
        return rule


def _evaluate(f, x):
    values = np.asarray(f(x.ravel()))
    if values.shape != x.ravel().shape:
        raise ValueError('integrand returned shape %r for %d abscissae'
                         % (values.shape, x.size))
    return values.reshape(x.shape)


def adaptive_gauss_legendre(f, a, b, rel_tol=1e-10, abs_tol=0.0, order=16,
                            max_level=40):
    """Integrate f over the finite interval [a, b]

    Every interval of the current level is estimated with an order-point rule
    on the whole and on both halves, in one batched call of f. Intervals whose
    two estimates differ by more than their share of the tolerance are split.

    Returns (value, error_estimate); raises ConvergenceError if intervals are
    still unresolved after max_level splits.
    """
    a = float(a)
    b = float(b)
    if a == b:
        return 0.0, 0.0
    if b < a:
        value, err = adaptive_gauss_legendre(f, b, a, rel_tol, abs_tol, order, max_level)
        return -value, err

    nodes, weights = legendre_rule(order)
    lo = np.array([a])
    hi = np.array([b])
    total = 0.0
    error = 0.0
    width = b - a
    for level in range(max_level):
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        quarter = 0.5 * half
        whole_x = mid[:, None] + half[:, None] * nodes[None, :]
        left_x = (lo + quarter)[:, None] + quarter[:, None] * nodes[None, :]
        right_x = (mid + quarter)[:, None] + quarter[:, None] * nodes[None, :]
        fx = _evaluate(f, np.concatenate([whole_x, left_x, right_x], axis=1))
        k = len(nodes)
        whole = half * np.dot(fx[:, :k], weights)
        refined = quarter * (np.dot(fx[:, k:2 * k], weights) + np.dot(fx[:, 2 * k:], weights))
        diff = np.abs(refined - whole)

        estimate = abs(total + np.sum(refined))
        allowed = max(abs_tol, rel_tol * estimate) * (hi - lo) / width
        ok = diff <= allowed
        total += float(np.sum(refined[ok]))
        error += float(np.sum(diff[ok]))
        if ok.all():
            return total, error
        lo, hi, mid = lo[~ok], hi[~ok], mid[~ok]
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
        order_idx = np.argsort(lo)
        lo, hi = lo[order_idx], hi[order_idx]
        log.debug('gauss-legendre level %d: %d intervals left', level, len(lo))
    raise ConvergenceError('adaptive Gauss-Legendre did not converge on [%g, %g]' % (a, b),
                           partial=total, bound=float(np.sum(np.abs(refined - whole))))


def semi_infinite(f, a, scale=1.0, rel_tol=1e-10, abs_tol=0.0, order=16, max_level=40):
    """Integrate f over [a, inf) through x = a + scale u/(1 - u)

    scale should be of the order of the decay length of f.
    """
    a = float(a)
    scale = float(scale)
    if not scale > 0.0:
        raise DomainError('scale must be positive, got %r' % scale, 'scale', scale)

    def mapped(u):
        gap = 1.0 - u
        x = a + scale * u / gap
        return f(x) * (scale / (gap * gap))

    return adaptive_gauss_legendre(mapped, 0.0, 1.0, rel_tol, abs_tol, order, max_level)


def tanh_sinh(f, a, b, rel_tol=1e-10, abs_tol=0.0, max_level=10, t_max=4.0):
    """Integrate f over [a, b] with the double exponential tanh-sinh rule

    Integrable endpoint singularities, logarithmic or algebraic, are
    absorbed by the rule. Each abscissa is placed from its nearer endpoint,
    at the distance radius (1 - tanh(pi/2 sinh|t|)), so points crowding an
    endpoint keep their full precision; those that round onto it are
    dropped. Each level halves the step and evaluates only the new abscissae.

    Returns (value, error_estimate).
    """
    a = float(a)
    b = float(b)
    if a == b:
        return 0.0, 0.0
    if b < a:
        value, err = tanh_sinh(f, b, a, rel_tol, abs_tol, max_level, t_max)
        return -value, err
    radius = 0.5 * (b - a)

    def level_sum(t, h):
        with np.errstate(over='ignore'):
            sh = 0.5 * math.pi * np.sinh(np.abs(t))
            gap = radius * 2.0 / (np.exp(2.0 * sh) + 1.0)
            w = h * 0.5 * math.pi * np.cosh(t) / np.cosh(sh) ** 2
        x = np.where(t < 0.0, a + gap, b - gap)
        inside = (gap > 0.0) & (x > a) & (x < b) & (w > 0.0)
        if not inside.any():
            return 0.0
        return radius * float(np.dot(w[inside], _evaluate(f, x[inside])))

    h = 1.0
    t = np.arange(-t_max, t_max + 0.5 * h, h)
    value = level_sum(t, h)
    for level in range(1, max_level + 1):
        h *= 0.5
        t = np.arange(-t_max + h, t_max, 2.0 * h)
        refined = 0.5 * value + level_sum(t, h)
        err = abs(refined - value)
        value = refined
        if level > 2 and err <= max(abs_tol, rel_tol * abs(value)):
            return value, err
    raise ConvergenceError('tanh-sinh did not converge on [%g, %g]' % (a, b),
                           partial=value, bound=err)


def gauss_laguerre(f, rel_tol=1e-12, orders=(32, 64, 128)):
    """Integrate exp(-s) f(s) over [0, inf), doubling the order until stable

    f must be smooth and grow at most polynomially. Returns
    (value, error_estimate).
    """
    previous = None
    for n in orders:
        nodes, weights = laguerre_rule(n)
        value = float(np.dot(weights, _evaluate(f, nodes)))
        if previous is not None:
            err = abs(value - previous)
            if err <= rel_tol * abs(value) or value == previous:
                return value, err
        previous = value
    raise ConvergenceError('Gauss-Laguerre not stable at order %d' % orders[-1],
                           partial=previous, bound=err)


def dfridr(func, x, h, ntab=10, con=1.4, safe=2.0):
    """Derivative of func at x by Ridders' polynomial extrapolation

    h is an initial step over which func changes substantially, not a small
    number. The step is divided by con for each new column of the Neville
    table; iteration stops once a higher order is worse than the best so far
    by a factor safe. func may be vector valued.

    Returns (derivative, error_estimate).
    """
    if h == 0.0:
        raise DomainError('h must be nonzero in dfridr', 'h', h)
    con2 = con * con
    table = {}
    hh = h
    table[0, 0] = (np.asarray(func(x + hh)) - np.asarray(func(x - hh))) / (2.0 * hh)
    err = np.inf
    result = table[0, 0]
    for i in range(1, ntab):
        hh = hh / con
        table[0, i] = (np.asarray(func(x + hh)) - np.asarray(func(x - hh))) / (2.0 * hh)
        fac = con2
        for j in range(1, i + 1):
            table[j, i] = (table[j - 1, i] * fac - table[j - 1, i - 1]) / (fac - 1.0)
            fac *= con2
            errt = max(np.max(np.abs(table[j, i] - table[j - 1, i])),
                       np.max(np.abs(table[j, i] - table[j - 1, i - 1])))
            if errt <= err:
                err = errt
                result = table[j, i]
        if np.max(np.abs(table[i, i] - table[i - 1, i - 1])) >= safe * err:
            break
    return result, float(err)


def derivative(func, x, h, rel_tol=1e-2, **kwargs):
    """dfridr that raises PrecisionError when the table did not settle"""
    value, err = dfridr(func, x, h, **kwargs)
    scale = float(np.max(np.abs(value)))
    if not np.isfinite(err) or err > rel_tol * scale:
        raise PrecisionError('derivative at %r did not settle: %r +- %r' % (x, value, err),
                             estimate=value, error=err)
    return value, err


__all__ = (
    'legendre_rule',
    'laguerre_rule',
    'adaptive_gauss_legendre',
    'semi_infinite',
    'tanh_sinh',
    'gauss_laguerre',
    'dfridr',
    'derivative',
)
