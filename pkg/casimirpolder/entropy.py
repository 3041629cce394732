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

"""Entropy S = -dF/dT of the atom-sphere system

Two independent routes: the analytic S1 + S2 integrals built on the
Abel-Plana spectral functions, and Ridders differentiation of a free energy.
For large spheres with a static polarizability the entropy profile is
sigma(tau, r) = eta0' + r eta1'; its sign change threshold in r is found by
Brent's method.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math

import numpy as np
import scipy.optimize

from casimirpolder import abel_plana, asymptotics, matsubara
from casimirpolder.core import (
    CapabilityError,
    DomainError,
    HBAR_C,
    ImmutableRecord,
    K_B,
    SearchError,
    check_positive,
    sinh_damping,
)
from casimirpolder.core import quadrature
from casimirpolder.matsubara import SeriesControl
from casimirpolder.model import reduce

log = logging.getLogger(__name__)

ANALYTIC = 'analytic'
FINITE_DIFFERENCE = 'finite_difference'

# What entropy_fd differentiates
THERMAL_PARTS = 'thermal_parts'
MATSUBARA = 'matsubara'

# Initial Ridders step as a fraction of T
FD_STEP = 1.0 / 50.0
FD_TOLERANCE = 1e-2

# The Matsubara sum is differentiated only when F(T + h) - F(T - h) exceeds
# this many multiples of its own rel_tol |F|
RESOLVE_FACTOR = 1e4

DEFAULT_TAU_RANGE = (1e-3, 20.0)


class EntropyBreakdown(ImmutableRecord):
    """S1, S2 and their sum in J/K

    On the finite difference route through the Matsubara sum there is no
    split, and s1, s2 are None.
    """
    __slots__ = ['s1', 's2', 'total', 'route']


class SigmaCurve(ImmutableRecord):
    """sigma = eta0' + r eta1' sampled on tau_grid

    sign_change is the first (tau_lo, tau_hi) grid interval over which sigma
    changes sign, or None.
    """
    __slots__ = ['r', 'tau_grid', 'sigma_values', 'sign_change']

    @property
    def minimum(self):
        return float(np.min(self.sigma_values))


def _entropy_prefactor(sys, point):
    return K_B * sys.alpha0 / (sys.radius ** 3 * point.chi ** 2)


def _zero(route):
    return EntropyBreakdown(s1=0.0, s2=0.0, total=0.0, route=route)


def entropy_analytic(sys, pol, ctrl=None):
    """S1 + S2 from the spectral functions

        S1 = (k_B alpha0/(R^3 chi^2)) e1 (pi a/sinh pi a)^2
        S2 = (k_B alpha0/(pi R^3 chi^2)) int_0^inf
             {u E2'(u) + E2(u)(1 - 2 pi a u coth pi a u)}
             log|(1+u)/(1-u)| (pi a/sinh pi a u)^2 du

    with E2(u) = Im eps(i u q_a) and E2' its u-derivative. The damping
    factors are formed in log space.
    """
    ctrl = ctrl or SeriesControl()
    if pol.is_static:
        raise CapabilityError('the analytic entropy needs the single oscillator polarizability')
    T = check_positive('temperature', sys.temperature)
    point = reduce(sys)
    if point.Q == 0.0 or sys.alpha0 == 0.0:
        return _zero(ANALYTIC)
    a = point.a
    q_a = point.q_a
    spectral = abel_plana.SpectralFunctions(point, ctrl)
    prefactor = _entropy_prefactor(sys, point)

    damping = float(sinh_damping(math.pi * a))
    s1 = 0.0
    if damping > 0.0:
        s1 = prefactor * float(spectral.e1_at([q_a])[0]) * damping

    def integrand(u):
        e2, de2 = spectral.e2_with_derivative(u * q_a)
        v = math.pi * a * u
        bracket = u * q_a * de2 + e2 * (1.0 - 2.0 * v / np.tanh(v))
        # (pi a/sinh pi a u)^2 = (v/sinh v)^2/u^2
        return bracket * abel_plana.log_kernel(u) * sinh_damping(v) / (u * u)

    s2 = prefactor / math.pi * abel_plana._segments(integrand, a, ctrl.rel_tol, singular=True)
    log.debug('analytic entropy at T=%r: S1=%r S2=%r', T, s1, s2)
    return EntropyBreakdown(s1=s1, s2=s2, total=s1 + s2, route=ANALYTIC)


def _resolvable(sys, pol, ctrl, h):
    """True when the Matsubara sum resolves F(T + h) - F(T - h)"""
    T = sys.temperature
    upper = matsubara.free_energy(sys.replace(temperature=T + h), pol, ctrl).total
    lower = matsubara.free_energy(sys.replace(temperature=T - h), pol, ctrl).total
    scale = max(abs(upper), abs(lower))
    return abs(upper - lower) > RESOLVE_FACTOR * ctrl.rel_tol * scale


def entropy_fd(sys, pol, ctrl=None, source=None, step=None):
    """S = -dF/dT by Ridders extrapolated central differences

    source=matsubara differentiates the full Matsubara sum, which shares
    nothing with entropy_analytic; source=thermal_parts differentiates
    (F1, F2) from abel_plana and gives S1 and S2 separately. By default the
    Matsubara sum is used whenever the thermal change over the first step
    stands above its rel_tol, and the thermal parts otherwise; a static
    polarizability always goes through the Matsubara sum. The initial step
    is T/50 unless given. Raises PrecisionError when the extrapolation
    table does not settle.
    """
    ctrl = ctrl or SeriesControl()
    T = check_positive('temperature', sys.temperature)
    if reduce(sys).Q == 0.0 or sys.alpha0 == 0.0:
        return _zero(FINITE_DIFFERENCE)
    h = step if step is not None else FD_STEP * T
    if source is None:
        if pol.is_static or _resolvable(sys, pol, ctrl, h):
            source = MATSUBARA
        else:
            log.info('thermal change at T=%r below rel_tol, differentiating F1 + F2', T)
            source = THERMAL_PARTS

    if source == THERMAL_PARTS:
        def parts(t):
            at = sys.replace(temperature=t)
            return np.array([abel_plana.thermal_correction_1(at, pol, ctrl),
                             abel_plana.thermal_correction_2(at, pol, ctrl)])

        slope, err = quadrature.derivative(parts, T, h, rel_tol=FD_TOLERANCE)
        s1, s2 = -float(slope[0]), -float(slope[1])
        log.debug('finite difference entropy at T=%r: S1=%r S2=%r (+- %r)', T, s1, s2, err)
        return EntropyBreakdown(s1=s1, s2=s2, total=s1 + s2, route=FINITE_DIFFERENCE)

    if source == MATSUBARA:
        def total(t):
            return matsubara.free_energy(sys.replace(temperature=t), pol, ctrl).total

        slope, err = quadrature.derivative(total, T, h, rel_tol=FD_TOLERANCE)
        log.debug('finite difference entropy at T=%r: S=%r (+- %r)', T, -float(slope), err)
        return EntropyBreakdown(s1=None, s2=None, total=-float(slope), route=FINITE_DIFFERENCE)

    raise ValueError('Unknown entropy source %r' % (source,))


def low_temperature_entropy(sys):
    """(16 pi^3/15) k_B alpha0/chi^6 (k_B T/(hbar c))^3, J/K"""
    chi = 1.0 + sys.r
    return (16.0 * math.pi ** 3 / 15.0 * K_B * sys.alpha0 / chi ** 6
            * (K_B * sys.temperature / HBAR_C) ** 3)


def high_temperature_entropy(sys):
    """Minus the slope of the zero mode, J/K"""
    r = sys.r
    return (K_B * sys.alpha0 * asymptotics._zero_mode_polynomial(r)
            / (2.0 * r ** 3 * (r + 1.0) ** 4 * (r + 2.0) ** 3 * sys.radius ** 3))


def static_entropy(sys, ctrl=None):
    """(3 k_B alpha0/(2 d^3)) sigma(tau, r) for a static polarizability, J/K"""
    point = reduce(sys)
    if not point.tau > 0.0:
        raise DomainError('static entropy needs T > 0', 'temperature', sys.temperature)
    curve = sigma_curve(point.r, [point.tau], ctrl)
    return 1.5 * K_B * sys.alpha0 / sys.separation ** 3 * float(curve.sigma_values[0])


def _sigma_parts(tau_grid, ctrl=None, complete=False):
    """eta0' and eta1' on a grid, the eta1 integrals accumulated once"""
    taus = np.asarray(tau_grid, dtype=float)
    rel_tol = min((ctrl or SeriesControl()).rel_tol, 1e-10)
    integrals = asymptotics.eta_integrals(taus, rel_tol)
    return (np.atleast_1d(asymptotics.eta0_prime(taus)),
            np.atleast_1d(asymptotics.eta1_prime(taus, ctrl, integrals=integrals,
                                                   complete=complete)))


def _first_sign_change(taus, sigma):
    signs = np.sign(sigma)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    if len(flips) == 0:
        return None
    i = int(flips[0])
    return (float(taus[i]), float(taus[i + 1]))


def sigma_curve(r, tau_grid, ctrl=None, complete=False):
    """SigmaCurve of eta0' + r eta1' on tau_grid

    complete selects the eta1 that keeps the first order radial factor of
    the sphere, see asymptotics.eta1.
    """
    r = check_positive('r', r, allow_zero=True)
    taus = np.asarray(tau_grid, dtype=float)
    if taus.ndim != 1 or len(taus) == 0:
        raise DomainError('tau_grid must be a non-empty list', 'tau_grid', tau_grid)
    d0, d1 = _sigma_parts(taus, ctrl, complete)
    sigma = d0 + r * d1
    change = None
    if np.min(sigma) < 0.0 < np.max(sigma):
        change = _first_sign_change(taus, sigma)
    return SigmaCurve(r=r, tau_grid=tuple(float(t) for t in taus),
                      sigma_values=tuple(float(s) for s in sigma), sign_change=change)


def find_sign_change_threshold(tau_range=DEFAULT_TAU_RANGE, tolerance=1e-4,
                               bracket=(0.0, 0.5), points=600, ctrl=None,
                               complete=False):
    """Smallest r for which sigma(tau, r) >= 0 over tau_range

    sigma is linear in r, so eta0' and eta1' are sampled once on a log grid
    and the root of the minimum over tau is found with Brent's method. Raises SearchError when
    bracket does not enclose the change of sign of that minimum. About 0.085
    with the default eta1, about 0.14 with complete=True.
    """
    lo, hi = (float(v) for v in bracket)
    tau_lo, tau_hi = (float(v) for v in tau_range)
    if not 0.0 < tau_lo < tau_hi:
        raise DomainError('tau_range must satisfy 0 < lo < hi', 'tau_range', tau_range)
    taus = np.geomspace(tau_lo, tau_hi, points)
    d0, d1 = _sigma_parts(taus, ctrl, complete)

    def lowest(r):
        return float(np.min(d0 + r * d1))

    if not (lowest(lo) < 0.0 <= lowest(hi)):
        raise SearchError('min sigma does not change sign on r in [%g, %g]' % (lo, hi),
                          (lo, hi))
    threshold = scipy.optimize.brentq(lowest, lo, hi, xtol=tolerance)
    log.info('sigma sign change threshold r* = %r', threshold)
    return threshold


__all__ = (
    'ANALYTIC',
    'FINITE_DIFFERENCE',
    'THERMAL_PARTS',
    'MATSUBARA',
    'EntropyBreakdown',
    'SigmaCurve',
    'entropy_analytic',
    'entropy_fd',
    'low_temperature_entropy',
    'high_temperature_entropy',
    'static_entropy',
    'sigma_curve',
    'find_sign_change_threshold',
)
