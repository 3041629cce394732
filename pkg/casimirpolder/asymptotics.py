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

"""Limiting regimes of the free energy

Closed forms and cheap expansions: the Casimir-Polder normalisation, the
flat plate limit with its 1/R corrections, the low and high temperature
laws, the short distance law, and the functions eta0, eta1 of the static
polarizability expansion F = E_CP (eta0 + r eta1).

Every regime result records the ratios its derivation assumes small, as
(label, slack) pairs. A slack above 0.1 gives a RegimeWarning, a slack of 1
or more a RegimeError.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
import warnings

import numpy as np
import scipy.integrate
import scipy.special

from casimirpolder.core import (
    ConvergenceError,
    DomainError,
    HBAR,
    HBAR_C,
    ImmutableRecord,
    K_B,
    RegimeError,
    RegimeWarning,
    bose,
    check_positive,
)
from casimirpolder.core import quadrature
from casimirpolder.core import specfun
from casimirpolder.matsubara import SeriesControl, initial_lmax, zero_mode
from casimirpolder.model import alpha_ratio, effective_temperatures, reduce

log = logging.getLogger(__name__)

FLAT_PLATE = 'flat_plate'
LOW_T = 'low_T'
HIGH_T = 'high_T'
SHORT_DISTANCE = 'short_distance'

WARN_SLACK = 0.1

# Below this tau the Planck brackets of eta0 are expanded in series
_ETA_SERIES_TAU = 0.5
_ETA_SERIES_TERMS = 14

# The flat plate integrals use closed forms below this lower limit
_LAGUERRE_FROM = 2.0


class RegimeResult(ImmutableRecord):
    """An asymptotic value, J, with the slack of each assumption it rests on"""
    __slots__ = ['value', 'regime', 'validity']

    @property
    def slack(self):
        return max(s for _, s in self.validity) if self.validity else 0.0


class ShortDistanceLaws(ImmutableRecord):
    """Leading behaviour of e1 at r << Q, TM and TE (finite and ideal sphere)"""
    __slots__ = ['tm', 'te', 'te_ideal']


def check_validity(regime, validity):
    """Warn or raise according to the largest slack; returns validity"""
    validity = tuple((label, float(slack)) for label, slack in validity)
    worst = max(validity, key=lambda item: item[1]) if validity else None
    if worst is not None and worst[1] >= 1.0:
        raise RegimeError('%s regime not valid: %s = %g' % (regime, worst[0], worst[1]),
                          validity)
    if worst is not None and worst[1] > WARN_SLACK:
        warnings.warn('%s regime used with %s = %g' % (regime, worst[0], worst[1]),
                      RegimeWarning, stacklevel=3)
    return validity


def casimir_polder_energy(alpha0, d):
    """E_CP = -3 hbar c alpha0/(8 pi d^4), J"""
    d = check_positive('separation', d)
    alpha0 = check_positive('alpha0', alpha0, allow_zero=True)
    return -3.0 * HBAR_C * alpha0 / (8.0 * math.pi * d ** 4)


def low_temperature_coefficient(r):
    """S_T = 2 r^4/(45 (1 + r)^6)"""
    r = check_positive('r', r)
    return 2.0 * r ** 4 / (45.0 * (1.0 + r) ** 6)


def _zero_mode_polynomial(r):
    return (((6.0 * r + 24.0) * r + 33.0) * r + 18.0) * r + 4.0


def high_temperature_coefficient(r):
    """2 r (6r^4 + 24r^3 + 33r^2 + 18r + 4)/(3 (r + 1)^4 (r + 2)^3)"""
    r = check_positive('r', r)
    return 2.0 * r * _zero_mode_polynomial(r) / (3.0 * (r + 1.0) ** 4 * (r + 2.0) ** 3)


def high_temperature_limits(sys):
    """(short, large) separation asymptotes of the zero mode, J

    -k_B T alpha0/(4 d^3) for d << R and -3 k_B T alpha0 R^3/d^6 for d >> R.
    """
    kt = K_B * sys.temperature
    d = sys.separation
    return (-kt * sys.alpha0 / (4.0 * d ** 3),
            -3.0 * kt * sys.alpha0 * sys.radius ** 3 / d ** 6)


def zero_temperature_coefficient(sys, pol, ctrl=None):
    """S_Omega = E0/E_CP"""
    from casimirpolder.abel_plana import zero_temperature_energy
    return (zero_temperature_energy(sys, pol, ctrl)
            / casimir_polder_energy(sys.alpha0, sys.separation))


def short_distance_e1(point):
    """Leading laws of e1 for r << Q as a ShortDistanceLaws record"""
    chi2 = point.chi ** 2
    tm = (1.0 - 2.0 * chi2 + 9.0 * chi2 * chi2) / (4.0 * chi2 * (chi2 - 1.0) ** 3)
    q2 = point.q_a ** 2
    te_ideal = q2 / (4.0 * (1.0 - chi2))
    if point.is_ideal:
        te = te_ideal
    else:
        te = 0.5 * point.Q * q2 * (1.0 - point.chi * math.atanh(1.0 / point.chi))
    return ShortDistanceLaws(tm=tm, te=te, te_ideal=te_ideal)


def low_temperature_energy(sys, pol, ctrl=None):
    """E_CP (S_Omega + S_T (T/T_R)^4) as a RegimeResult

    Assumes T small against T_omega, T_R and T_(R+d), and T/T_R small
    against Q.
    """
    point = reduce(sys)
    temps = effective_temperatures(sys)
    T = sys.temperature
    T_far = temps.T_R * sys.radius / (sys.radius + sys.separation)
    validity = [('T/T_omega', T / temps.T_omega),
                ('T/T_R', T / temps.T_R),
                ('T/T_(R+d)', T / T_far)]
    validity.append(('(T/T_R)/Q', point.t_ratio_R / point.Q if point.Q > 0.0
                     else float('inf')))
    validity = check_validity(LOW_T, validity)
    e_cp = casimir_polder_energy(sys.alpha0, sys.separation)
    s_omega = zero_temperature_coefficient(sys, pol, ctrl)
    value = e_cp * (s_omega + low_temperature_coefficient(point.r) * point.t_ratio_R ** 4)
    return RegimeResult(value=value, regime=LOW_T, validity=validity)


def low_temperature_thermal_law(sys):
    """Thermal part at low T, -(4 pi^3/15) alpha0/chi^6 (k_B T)^4/(hbar c)^3, J"""
    chi = 1.0 + sys.r
    return (-(4.0 * math.pi ** 3 / 15.0) * sys.alpha0 / chi ** 6
            * (K_B * sys.temperature) ** 4 / HBAR_C ** 3)


def high_temperature_energy(sys, pol=None):
    """The zero mode, linear in T, as a RegimeResult"""
    temps = effective_temperatures(sys)
    T = check_positive('temperature', sys.temperature)
    validity = check_validity(HIGH_T, [('T_omega/T', temps.T_omega / T),
                                       ('T_R/T', temps.T_R / T),
                                       ('T_d/T', temps.T_d / T)])
    point = reduce(sys)
    value = zero_mode(point, sys.alpha0, T, sys.radius)
    return RegimeResult(value=value, regime=HIGH_T, validity=validity)


def short_distance_energy(sys, pol=None):
    """-(alpha0/4d^3)(hbar omega_a/2 + hbar omega_a/(exp(hbar omega_a/k_B T) - 1))

    Valid for r << Q; a RegimeResult.
    """
    point = reduce(sys)
    if point.Q == 0.0:
        raise RegimeError('short distance law needs Q > 0', (('r/Q', float('inf')),))
    validity = check_validity(SHORT_DISTANCE, [('r/Q', point.r / point.Q)])
    quantum = HBAR * sys.omega_a
    if sys.temperature > 0.0:
        occupation = float(bose(quantum / (K_B * sys.temperature)))
    else:
        occupation = 0.0
    value = -sys.alpha0 / (4.0 * sys.separation ** 3) * quantum * (0.5 + occupation)
    return RegimeResult(value=value, regime=SHORT_DISTANCE, validity=validity)


def _flat_plate_integrals(c):
    """int_c^inf exp(-p) {p^2, (p^2-c^2)^2/p^3, (p^2-c^2) p/2} dp, element-wise"""
    c = np.asarray(c, dtype=float)
    lead = np.empty(c.shape)
    rational = np.empty(c.shape)
    quadratic = np.empty(c.shape)

    small = c < _LAGUERRE_FROM
    cs = c[small]
    ec = np.exp(-cs)
    lead[small] = ec * (cs * cs + 2.0 * cs + 2.0)
    quadratic[small] = ec * (cs * cs + 3.0 * cs + 3.0)
    with np.errstate(invalid='ignore'):
        exp_ints = (-2.0 * cs * cs * scipy.special.expn(1, cs)
                    + cs * cs * scipy.special.expn(3, cs))
    rational[small] = ec * (cs + 1.0) + np.where(cs > 0.0, exp_ints, 0.0)

    for i in np.nonzero(~small)[0]:
        ci = float(c[i])
        ec = math.exp(-ci)
        lead[i] = ec * quadrature.gauss_laguerre(lambda s: (s + ci) ** 2)[0]
        rational[i] = ec * quadrature.gauss_laguerre(
            lambda s: ((s + ci) ** 2 - ci * ci) ** 2 / (s + ci) ** 3)[0]
        quadratic[i] = ec * quadrature.gauss_laguerre(
            lambda s: 0.5 * ((s + ci) ** 2 - ci * ci) * (s + ci))[0]
    return lead, rational, quadratic


def _sum_frequencies(block, first, ctrl):
    """sum_{n >= 1} block(ns) with the stopping rule of the Matsubara sum

    block maps an integer array of indices to non-negative terms. first is
    the n = 0 term with its weight 1/2 already applied; it only enters the
    relative stopping test. Returns (sum, n_max, tail_bound).
    """
    total = 0.0
    previous = None
    small_run = 0
    n_start = 1
    size = 16
    while n_start <= ctrl.n_max_cap:
        ns = np.arange(n_start, min(n_start + size, ctrl.n_max_cap + 1))
        values = block(ns)
        for n, v in zip(ns, values):
            total += v
            floor = ctrl.rel_tol * abs(total + first)
            small_run = small_run + 1 if v < floor else 0
            if small_run >= 3 and previous is not None:
                q = v / previous if previous > 0.0 else 0.0
                tail = v * q / (1.0 - q) if q < 1.0 else float('inf')
                if tail < floor:
                    return total, int(n), tail
            previous = v
        n_start = int(ns[-1]) + 1
        size = min(2 * size, 1 << 16)
    raise ConvergenceError('frequency sum not converged at n_max_cap=%d' % ctrl.n_max_cap,
                           partial=total)


def flat_plate_energy(sys, pol, ctrl=None, include_corrections=False):
    """Ideal flat plate free energy with optional first order 1/R corrections, J

    F = -(k_B T/(4 d^3)) sum'_n alpha_n K_n, with p = 2 d q and p_n = n tau:

        K_n = int_{p_n}^inf exp(-p) [(1 - 3r) p^2 + r p_n^2 + r (p^2-p_n^2)^2/p^3
                                     + r (p^2-p_n^2) p/2] dp

    The r p_n^2 term comes from expanding the radial factor 1/t(z) of the
    sphere's spectral function to first order; for a static polarizability
    the sum is E_CP (eta0 + r eta1(complete=True)). Without corrections K_n
    keeps only the p^2 term. The integrals use closed forms for small p_n and
    Gauss-Laguerre after the shift s = p - p_n above.
    """
    ctrl = ctrl or SeriesControl()
    T = sys.temperature
    if not T > 0.0:
        raise DomainError('the flat plate sum needs T > 0', 'temperature', T)
    point = reduce(sys)
    r = point.r if include_corrections else 0.0
    T_omega = effective_temperatures(sys).T_omega

    def kernel(c):
        lead, rational, quadratic = _flat_plate_integrals(c)
        radial = c * c * np.exp(-c)
        return (1.0 - 3.0 * r) * lead + r * (radial + rational + quadratic)

    def block(ns):
        weight = pol.ratio(ns * T / T_omega)
        return weight * kernel(ns * point.tau)

    first = 0.5 * float(kernel(np.zeros(1))[0])
    rest, n_max, _ = _sum_frequencies(block, first, ctrl)
    log.debug('flat plate sum stopped at n=%d', n_max)
    return -K_B * T * sys.alpha0 / (4.0 * sys.separation ** 3) * (first + rest)


def debye_ideal_energy(sys, pol, ctrl=None):
    """Ideal sphere free energy from the uniform large order expansion, J

    F = -(2 k_B T/(R^3 chi^3)) sum'_n alpha_n sum_l (nu^2/t_z) exp(-2 nu d_eta)
        {1 + (3 [t_x - t_z] + [t_x^3 - t_z^3] + 6 t_z^5)/(12 nu)}

    with t_x = t(x/nu), t_z = t(z/nu), t(w) = 1/sqrt(1 + w^2) and
    d_eta = eta(z/nu) - eta(x/nu). Accurate for small r, where the sum is
    dominated by large orders. The n = 0 term equals the zero mode exactly.
    """
    ctrl = ctrl or SeriesControl()
    T = check_positive('temperature', sys.temperature)
    point = reduce(sys)
    chi = point.chi

    def l_sum(x):
        x = np.asarray(x, dtype=float)
        lmax = min(initial_lmax(point, float(np.max(x)), ctrl.rel_tol), ctrl.l_max_cap)
        while True:
            nu = np.arange(1, lmax + 1, dtype=float)[:, None] + 0.5
            wx = x / nu
            wz = chi * x / nu
            tx = 1.0 / np.sqrt(1.0 + wx * wx)
            tz = 1.0 / np.sqrt(1.0 + wz * wz)
            damping = np.exp(-2.0 * nu * (specfun.debye_eta(wz) - specfun.debye_eta(wx)))
            correction = (3.0 * (tx - tz) + (tx ** 3 - tz ** 3) + 6.0 * tz ** 5) / (12.0 * nu)
            terms = nu * nu / tz * damping * (1.0 + correction)
            partial = terms.sum(axis=0)
            if np.all(terms[-1] <= 0.1 * ctrl.rel_tol * partial):
                return partial
            if lmax >= ctrl.l_max_cap:
                raise ConvergenceError('uniform sum over l not converged at l_max_cap=%d'
                                       % ctrl.l_max_cap, partial=float(np.min(partial)))
            lmax = min(2 * lmax, ctrl.l_max_cap)

    def block(ns):
        x = ns * point.t_ratio_R
        return alpha_ratio(pol, x, point) * l_sum(x) / chi

    prefactor = -2.0 * K_B * T * sys.alpha0 / (sys.radius ** 3 * chi ** 2)
    first = zero_mode(point, sys.alpha0, T, sys.radius) / prefactor
    rest, _, _ = _sum_frequencies(block, first, ctrl)
    return prefactor * (first + rest)


def _planck_derivatives(tau):
    """P = 1/(e^tau - 1) and its first four derivatives, element-wise"""
    q = np.exp(-tau)
    om = -np.expm1(-tau)
    a1 = q / om
    a2 = q / om ** 2
    a3 = q * (1.0 + q) / om ** 3
    a4 = q * (1.0 + 4.0 * q + q * q) / om ** 4
    a5 = q * (1.0 + 11.0 * q + 11.0 * q * q + q ** 3) / om ** 5
    return a1, -a2, a3, -a4, a5


def _bernoulli_coefficients(count):
    b = scipy.special.bernoulli(2 * count)
    return [b[2 * k] / math.factorial(2 * k) for k in range(count + 1)]


_BERNOULLI = _bernoulli_coefficients(_ETA_SERIES_TERMS)


def _eta0_series(tau, derivative):
    total = np.zeros_like(tau)
    for k in range(2, _ETA_SERIES_TERMS + 1):
        m = 2 * k - 1
        f = 2.0 - 2.0 * m + m * (m - 1.0)
        if derivative:
            total += _BERNOULLI[k] * f * (m + 1.0) * tau ** m
        else:
            total += _BERNOULLI[k] * f * tau ** (m + 1)
    return total / 6.0 if derivative else 1.0 + total / 6.0


def _check_tau(tau):
    tau = np.asarray(tau, dtype=float)
    if np.any(~np.isfinite(tau) | (tau <= 0.0)):
        raise DomainError('tau must be positive and finite', 'tau', tau)
    return tau


def eta0(tau):
    """(tau/6){1 + 2P - 2 tau P' + tau^2 P''}, P = 1/(e^tau - 1)

    Tends to 1 as tau -> 0 and to tau/6 for large tau.
    """
    tau = _check_tau(tau)
    p, p1, p2, _, _ = _planck_derivatives(tau)
    direct = tau / 6.0 * (1.0 + 2.0 * p - 2.0 * tau * p1 + tau * tau * p2)
    out = np.where(tau < _ETA_SERIES_TAU, _eta0_series(tau, False), direct)
    return float(out) if out.ndim == 0 else out


def eta0_prime(tau):
    """d eta0/d tau = (1 + 2P - 2 tau P' + tau^2 P'' + tau^3 P''')/6"""
    tau = _check_tau(tau)
    p, p1, p2, p3, _ = _planck_derivatives(tau)
    direct = (1.0 + 2.0 * p - 2.0 * tau * p1 + tau * tau * p2 + tau ** 3 * p3) / 6.0
    out = np.where(tau < _ETA_SERIES_TAU, _eta0_series(tau, True), direct)
    return float(out) if out.ndim == 0 else out


def _sinh_kernel(k, t):
    """cosh t/(t sinh^k t)"""
    t = np.asarray(t, dtype=float)
    return 1.0 / (t * np.tanh(t) * np.sinh(t) ** (k - 1))


def _kernel_laurent(k, t):
    if k == 5:
        return t ** -6 - t ** -4 / 3.0
    return t ** -4


def _kernel_laurent_integral(k, lo, hi):
    if k == 5:
        return (lo ** -5 - hi ** -5) / 5.0 - (lo ** -3 - hi ** -3) / 9.0
    return (lo ** -3 - hi ** -3) / 3.0


def _kernel_series(k, terms=14):
    """Taylor coefficients in t^2 of cosh t (t/sinh t)^k"""
    b = scipy.special.bernoulli(2 * terms)
    # t/sinh t = sum (2 - 2^(2n)) B_2n t^2n/(2n)!
    inv_sinh = np.array([(2.0 - 2.0 ** (2 * n)) * b[2 * n] / math.factorial(2 * n)
                         for n in range(terms)])
    cosh = np.array([1.0 / math.factorial(2 * n) for n in range(terms)])
    series = cosh
    for _ in range(k):
        series = np.convolve(series, inv_sinh)[:terms]
    return series


_KERNEL_SERIES = {3: _kernel_series(3), 5: _kernel_series(5)}

# Below this t the Laurent remainder is summed from its series
_REMAINDER_SERIES_T = 0.5


def _kernel_remainder(k, t):
    """cosh t/(t sinh^k t) minus its Laurent part, regular at t = 0"""
    t = np.asarray(t, dtype=float)
    direct = _sinh_kernel(k, t) - _kernel_laurent(k, t)
    coefficients = _KERNEL_SERIES[k]
    skip = 3 if k == 5 else 2
    t2 = t * t
    series = np.zeros_like(t)
    power = np.ones_like(t)
    for c in coefficients[skip:]:
        series += c * power
        power = power * t2
    # cosh t (t/sinh t)^k = sum c_j t^2j, divided by t^(k+1)
    series = series * t ** (2 * skip - k - 1)
    return np.where(t < _REMAINDER_SERIES_T, series, direct)


def kernel_integral(k, lo, hi, rel_tol=1e-12):
    """int_lo^hi cosh t/(t sinh^k t) dt for k in (3, 5), hi may be inf

    Below t = 1 the Laurent part is integrated in closed form and only the
    regular remainder numerically.
    """
    if k not in (3, 5):
        raise DomainError('kernel order must be 3 or 5, got %r' % (k,), 'k', k)
    total = 0.0
    if lo < 1.0:
        top = min(hi, 1.0)
        total += _kernel_laurent_integral(k, lo, top)
        total += scipy.integrate.quad(lambda t: float(_kernel_remainder(k, t)), lo, top,
                                      epsabs=1e-300, epsrel=rel_tol, limit=200)[0]
        lo = top
    if hi > lo:
        def f(t):
            with np.errstate(over='ignore'):
                return float(_sinh_kernel(k, t))

        total += scipy.integrate.quad(f, lo, hi, epsabs=rel_tol * abs(total) + 1e-300,
                                      epsrel=rel_tol, limit=200)[0]
    return total


def eta_integrals(taus, rel_tol=1e-12):
    """I_k(tau/2) = int_{tau/2}^inf cosh t/(t sinh^k t) dt for k = 3, 5

    Accumulated over the sorted grid, one segment at a time. Returns
    (I3, I5) arrays in the order of taus.
    """
    taus = _check_tau(np.atleast_1d(taus))
    order = np.argsort(taus)
    bs = 0.5 * taus[order]
    out = {}
    for k in (3, 5):
        values = np.empty(bs.shape)
        running = kernel_integral(k, bs[-1], float('inf'), rel_tol)
        values[-1] = running
        for i in range(len(bs) - 2, -1, -1):
            running += kernel_integral(k, bs[i], bs[i + 1], rel_tol)
            values[i] = running
        result = np.empty(bs.shape)
        result[order] = values
        out[k] = result
    return out[3], out[5]


def _b1(tau, complete=False):
    """B1 and dB1/dtau; complete lowers the tau^2 P'' coefficient from 3/2 to 1/2"""
    p, p1, p2, p3, p4 = _planck_derivatives(tau)
    c = 0.5 if complete else 1.5
    b1 = 1.0 + 2.0 * p - 2.0 * tau * p1 + c * tau * tau * p2 - 0.5 * tau ** 3 * p3
    db1 = (2.0 * c - 2.0) * tau * p2 + (c - 1.5) * tau * tau * p3 - 0.5 * tau ** 3 * p4
    return b1, db1


def eta1(tau, ctrl=None, complete=False):
    """First order correction of the static polarizability expansion

    eta1 = -(tau/6) B1 + (tau^5/16) I5(tau/2) + (tau^3 (tau^2 - 4)/48) I3(tau/2)

    with B1 = 1 + 2P - 2 tau P' + (3/2) tau^2 P'' - (1/2) tau^3 P'''.
    Tends to -67/45 as tau -> 0.

    This form drops the first order part of the sphere's radial factor
    1/t(z). complete=True restores it, adding (tau^3/6) P'' (the 3/2 becomes
    1/2); the limit is then -52/45 and E_CP (eta0 + r eta1) is the corrected
    flat plate energy.
    """
    rel_tol = min((ctrl or SeriesControl()).rel_tol, 1e-10)
    tau_arr = _check_tau(np.atleast_1d(tau))
    i3, i5 = eta_integrals(tau_arr, rel_tol)
    b1, _ = _b1(tau_arr, complete)
    out = (-tau_arr / 6.0 * b1 + tau_arr ** 5 / 16.0 * i5
           + tau_arr ** 3 * (tau_arr ** 2 - 4.0) / 48.0 * i3)
    return float(out[0]) if np.ndim(tau) == 0 else out


def eta1_prime(tau, ctrl=None, integrals=None, complete=False):
    """d eta1/d tau, with the boundary terms of the tau/2 lower limits"""
    rel_tol = min((ctrl or SeriesControl()).rel_tol, 1e-10)
    tau_arr = _check_tau(np.atleast_1d(tau))
    i3, i5 = integrals if integrals is not None else eta_integrals(tau_arr, rel_tol)
    b1, db1 = _b1(tau_arr, complete)
    half = 0.5 * tau_arr
    f3 = _sinh_kernel(3, half)
    f5 = _sinh_kernel(5, half)
    t2 = tau_arr * tau_arr
    out = (-b1 / 6.0 - tau_arr * db1 / 6.0
           + 5.0 * t2 * t2 / 16.0 * i5 - tau_arr ** 5 / 32.0 * f5
           + (5.0 * t2 * t2 - 12.0 * t2) / 48.0 * i3
           - tau_arr ** 3 * (t2 - 4.0) / 96.0 * f3)
    return float(out[0]) if np.ndim(tau) == 0 else out


__all__ = (
    'FLAT_PLATE',
    'LOW_T',
    'HIGH_T',
    'SHORT_DISTANCE',
    'RegimeResult',
    'ShortDistanceLaws',
    'check_validity',
    'casimir_polder_energy',
    'low_temperature_coefficient',
    'high_temperature_coefficient',
    'high_temperature_limits',
    'zero_temperature_coefficient',
    'short_distance_e1',
    'low_temperature_energy',
    'low_temperature_thermal_law',
    'high_temperature_energy',
    'short_distance_energy',
    'flat_plate_energy',
    'debye_ideal_energy',
    'eta0',
    'eta0_prime',
    'kernel_integral',
    'eta_integrals',
    'eta1',
    'eta1_prime',
)
