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

"""Physical systems and their reduction to dimensionless form

A PhysicalSystem is an atom at distance d from an infinitely thin plasma
sphere of radius R, at temperature T, in SI units. Every formula in the
package consumes the reduced DimensionlessPoint instead:

    r = d/R, chi = 1 + r, Q = Omega R, q_a = omega_a R/c,
    a = T_omega/T, tau = 4 pi k_B d T/(hbar c), t_ratio_R = T/T_R

Conversion happens only here.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import math

import numpy as np

from casimirpolder.core import (
    C_LIGHT,
    DomainError,
    HBAR,
    HBAR_C,
    ImmutableRecord,
    K_B,
    check_positive,
)

SINGLE_OSCILLATOR = 'single_oscillator'
STATIC = 'static'
POLARIZABILITY_MODES = (SINGLE_OSCILLATOR, STATIC)


class PhysicalSystem(ImmutableRecord):
    """Sphere, atom, separation and temperature in SI units

    radius         - sphere radius R, m
    plasma_omega   - plasma wavenumber Omega, 1/m; 0 removes the sphere,
                     inf makes it an ideal conductor
    omega_a        - atomic transition frequency, rad/s
    alpha0         - static polarizability, m^3
    separation     - atom to surface distance d, m
    temperature    - kelvin, 0 allowed
    """
    __slots__ = ['radius', 'plasma_omega', 'omega_a', 'alpha0', 'separation', 'temperature']

    def __init__(self, radius, plasma_omega, omega_a, alpha0, separation, temperature):
        radius = check_positive('radius', radius)
        omega_a = check_positive('omega_a', omega_a)
        alpha0 = check_positive('alpha0', alpha0, allow_zero=True)
        separation = check_positive('separation', separation)
        temperature = check_positive('temperature', temperature, allow_zero=True)
        plasma_omega = float(plasma_omega)
        if math.isnan(plasma_omega) or plasma_omega < 0.0:
            raise DomainError('plasma_omega must be non-negative, got %r' % plasma_omega,
                              'plasma_omega', plasma_omega)
        super(PhysicalSystem, self).__init__(radius=radius, plasma_omega=plasma_omega,
                                             omega_a=omega_a, alpha0=alpha0,
                                             separation=separation,
                                             temperature=temperature)

    @classmethod
    def from_units(cls, radius, plasma_omega, omega_a, alpha0, separation, temperature,
                   length=1.0, frequency=1.0):
        """Build a system from values given in other units

        length and frequency are the SI values of the units the arguments
        are expressed in; volumes and inverse lengths follow from length.
        """
        return cls(radius=radius * length,
                   plasma_omega=plasma_omega / length,
                   omega_a=omega_a * frequency,
                   alpha0=alpha0 * length ** 3,
                   separation=separation * length,
                   temperature=temperature)

    @property
    def r(self):
        return self.separation / self.radius

    def polarizability(self, mode=SINGLE_OSCILLATOR):
        return Polarizability(alpha0=self.alpha0, omega_a=self.omega_a, mode=mode)


class Polarizability(ImmutableRecord):
    """Atomic polarizability on the imaginary frequency axis

    single_oscillator: alpha(i xi) = alpha0/(1 + xi^2/omega_a^2)
    static:            alpha(i xi) = alpha0
    """
    __slots__ = ['alpha0', 'omega_a', 'mode']

    def __init__(self, alpha0, omega_a, mode=SINGLE_OSCILLATOR):
        if mode not in POLARIZABILITY_MODES:
            raise DomainError('Unknown polarizability mode %r' % (mode,), 'mode', mode)
        super(Polarizability, self).__init__(alpha0=check_positive('alpha0', alpha0, True),
                                             omega_a=check_positive('omega_a', omega_a),
                                             mode=mode)

    @property
    def is_static(self):
        return self.mode == STATIC

    def ratio(self, xi_over_omega_a):
        """alpha(i xi)/alpha0, element-wise"""
        v = np.asarray(xi_over_omega_a, dtype=float)
        if self.is_static:
            return np.ones_like(v)
        return 1.0 / (1.0 + v * v)


class EffectiveTemperatures(ImmutableRecord):
    """T_omega = hbar omega_a/2 pi k_B, T_R = hbar c/2 pi k_B R, T_d = T_R/r"""
    __slots__ = ['T_omega', 'T_R', 'T_d']


class DimensionlessPoint(ImmutableRecord):
    """Reduced parameters of a PhysicalSystem

    a is inf at T = 0. Q may be inf for an ideally conducting sphere.
    """
    __slots__ = ['r', 'chi', 'Q', 'q_a', 'a', 'tau', 't_ratio_R']

    @classmethod
    def from_reduced(cls, r, Q, q_a, t_ratio_R):
        """Point from r, Q, q_a and T/T_R directly"""
        r = check_positive('r', r)
        q_a = check_positive('q_a', q_a)
        t_ratio_R = check_positive('t_ratio_R', t_ratio_R, allow_zero=True)
        Q = float(Q)
        if math.isnan(Q) or Q < 0.0:
            raise DomainError('Q must be non-negative, got %r' % Q, 'Q', Q)
        a = q_a / t_ratio_R if t_ratio_R > 0.0 else float('inf')
        return cls(r=r, chi=1.0 + r, Q=Q, q_a=q_a, a=a, tau=2.0 * r * t_ratio_R,
                   t_ratio_R=t_ratio_R)

    @property
    def is_ideal(self):
        return math.isinf(self.Q)


def effective_temperatures(sys):
    """T_omega, T_R and T_d of a system, in kelvin"""
    T_omega = HBAR * sys.omega_a / (2.0 * math.pi * K_B)
    T_R = HBAR_C / (2.0 * math.pi * K_B * sys.radius)
    T_d = HBAR_C / (2.0 * math.pi * K_B * sys.separation)
    return EffectiveTemperatures(T_omega=T_omega, T_R=T_R, T_d=T_d)


def reduce(sys):
    """The DimensionlessPoint of a PhysicalSystem"""
    temps = effective_temperatures(sys)
    return DimensionlessPoint.from_reduced(r=sys.separation / sys.radius,
                                           Q=sys.plasma_omega * sys.radius,
                                           q_a=sys.omega_a * sys.radius / C_LIGHT,
                                           t_ratio_R=sys.temperature / temps.T_R)


def expand(point, radius, alpha0):
    """Inverse of reduce() given the sphere radius and alpha0"""
    radius = check_positive('radius', radius)
    T_R = HBAR_C / (2.0 * math.pi * K_B * radius)
    return PhysicalSystem(radius=radius,
                          plasma_omega=point.Q / radius,
                          omega_a=point.q_a * C_LIGHT / radius,
                          alpha0=alpha0,
                          separation=point.r * radius,
                          temperature=point.t_ratio_R * T_R)


def alpha_at_matsubara(pol, n, T):
    """alpha(i xi_n), xi_n = 2 pi n k_B T/hbar, in m^3"""
    if n < 0:
        raise DomainError('Matsubara index must be >= 0, got %r' % n, 'n', n)
    if n == 0:
        return pol.alpha0
    T = check_positive('temperature', T)
    T_omega = HBAR * pol.omega_a / (2.0 * math.pi * K_B)
    return pol.alpha0 * float(pol.ratio(n * T / T_omega))


def alpha_ratio(pol, x, point):
    """alpha/alpha0 at the reduced imaginary frequency x = xi R/c"""
    return pol.ratio(np.asarray(x, dtype=float) / point.q_a)


__all__ = (
    'SINGLE_OSCILLATOR',
    'STATIC',
    'POLARIZABILITY_MODES',
    'PhysicalSystem',
    'Polarizability',
    'EffectiveTemperatures',
    'DimensionlessPoint',
    'effective_temperatures',
    'reduce',
    'expand',
    'alpha_at_matsubara',
    'alpha_ratio',
)
