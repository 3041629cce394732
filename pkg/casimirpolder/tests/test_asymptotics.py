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
import fractions
import math
import unittest
import warnings

import mpmath
import numpy as np

import casimirpolder
from casimirpolder import abel_plana, matsubara
from casimirpolder.asymptotics import *
from casimirpolder.core import DomainError, RegimeError, RegimeWarning
from casimirpolder.matsubara import zero_mode
from casimirpolder.model import STATIC, effective_temperatures, reduce
from casimirpolder.tests import load_test_vectors


def c60_system(temperature, **kwargs):
    sys = casimirpolder.preset_system('c60-hydrogen', temperature=temperature)
    return sys.replace(**kwargs) if kwargs else sys


def mp_eta0(tau):
    tau = mpmath.mpf(tau)
    p = lambda t: 1 / mpmath.expm1(t)
    return float(tau / 6 * (1 + 2 * p(tau) - 2 * tau * mpmath.diff(p, tau)
                            + tau ** 2 * mpmath.diff(p, tau, 2)))


def mp_kernel(k, lo, hi):
    f = lambda t: mpmath.cosh(t) / (t * mpmath.sinh(t) ** k)
    return float(mpmath.quad(f, [lo, hi]))


class Test_check_validity(unittest.TestCase):
    def test_quiet_warn_raise(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            self.assertEqual(check_validity(LOW_T, [('x', 0.05)]), (('x', 0.05),))
            self.assertEqual(len(caught), 0)
            check_validity(LOW_T, [('x', 0.05), ('y', 0.5)])
            self.assertEqual(len(caught), 1)
            self.assertTrue(issubclass(caught[0].category, RegimeWarning))
        with self.assertRaises(RegimeError) as cm:
            check_validity(LOW_T, [('x', 0.05), ('y', 1.0)])
        self.assertEqual(cm.exception.validity, (('x', 0.05), ('y', 1.0)))

    def test_slack(self):
        result = RegimeResult(value=-1.0, regime=HIGH_T, validity=(('a', 0.2), ('b', 0.01)))
        self.assertEqual(result.slack, 0.2)


class Test_coefficients(unittest.TestCase):
    def test_casimir_polder_scaling(self):
        e = casimir_polder_energy(1e-30, 1e-9)
        self.assertLess(e, 0.0)
        self.assertAlmostEqual(casimir_polder_energy(1e-30, 2e-9) * 16.0 / e, 1.0, places=14)
        with self.assertRaises(DomainError):
            casimir_polder_energy(1e-30, 0.0)

    def test_low_temperature_coefficient(self):
        for r, expected in load_test_vectors('low_temperature_coefficients.json'):
            self.assertAlmostEqual(low_temperature_coefficient(r),
                                   float(fractions.Fraction(expected)), places=15)

    def test_high_temperature_coefficient(self):
        # the zero mode is E_CP S_T (T/T_R)
        for r in (0.05, 0.5, 3.0):
            sys = c60_system(1e7, separation=r * 0.342e-9)
            point = reduce(sys)
            zm = zero_mode(point, sys.alpha0, sys.temperature, sys.radius)
            law = (casimir_polder_energy(sys.alpha0, sys.separation)
                   * high_temperature_coefficient(point.r) * point.t_ratio_R)
            self.assertAlmostEqual(law / zm, 1.0, places=12)

    def test_high_temperature_limits(self):
        near = c60_system(1e7, separation=1e-4 * 0.342e-9)
        short, _ = high_temperature_limits(near)
        zm = zero_mode(reduce(near), near.alpha0, near.temperature, near.radius)
        self.assertAlmostEqual(zm / short, 1.0, delta=1e-3)
        far = c60_system(1e7, separation=1e4 * 0.342e-9)
        _, large = high_temperature_limits(far)
        zm = zero_mode(reduce(far), far.alpha0, far.temperature, far.radius)
        self.assertAlmostEqual(zm / large, 1.0, delta=1e-3)

    def test_short_distance_e1(self):
        point = reduce(c60_system(300.0))
        laws = short_distance_e1(point)
        self.assertNotEqual(laws.te, laws.te_ideal)
        ideal = short_distance_e1(point.replace(Q=float('inf')))
        self.assertEqual(ideal.te, ideal.te_ideal)
        self.assertEqual(ideal.tm, laws.tm)


class Test_regimes(unittest.TestCase):
    def test_low_temperature(self):
        sys = c60_system(300.0)
        pol = sys.polarizability()
        with warnings.catch_warnings():
            warnings.simplefilter('error', RegimeWarning)
            result = low_temperature_energy(sys, pol)
        E0 = abel_plana.zero_temperature_energy(sys, pol)
        self.assertEqual(result.regime, LOW_T)
        self.assertLess(result.slack, 0.1)
        self.assertAlmostEqual(result.value / E0, 1.0, delta=1e-6)

    def test_low_temperature_out_of_range(self):
        sys = c60_system(30000.0)
        with self.assertRaises(RegimeError):
            low_temperature_energy(sys, sys.polarizability())
        sys = c60_system(300.0, plasma_omega=0.0)
        with self.assertRaises(RegimeError):
            low_temperature_energy(sys, sys.polarizability())

    def test_low_temperature_warning(self):
        sys = c60_system(5000.0)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            result = low_temperature_energy(sys, sys.polarizability())
        self.assertTrue(any(issubclass(w.category, RegimeWarning) for w in caught))
        self.assertGreater(result.slack, 0.1)

    def test_low_temperature_thermal_law(self):
        sys = c60_system(300.0)
        law = low_temperature_thermal_law(sys)
        self.assertLess(law, 0.0)
        self.assertAlmostEqual(low_temperature_thermal_law(c60_system(600.0)) / law, 16.0,
                               places=12)

    def test_high_temperature(self):
        sys = c60_system(0.0)
        sys = sys.replace(temperature=1e4 * effective_temperatures(sys).T_omega)
        result = high_temperature_energy(sys)
        self.assertEqual(result.value, zero_mode(reduce(sys), sys.alpha0, sys.temperature,
                                                 sys.radius))
        self.assertLess(result.slack, 0.1)
        with self.assertRaises(RegimeError):
            high_temperature_energy(c60_system(300.0))
        with self.assertRaises(DomainError):
            high_temperature_energy(c60_system(0.0))

    def test_short_distance(self):
        sys = c60_system(0.0, separation=1e-12)
        result = short_distance_energy(sys)
        expected = -sys.alpha0 * casimirpolder.core.HBAR * sys.omega_a / (8.0 * 1e-36)
        self.assertAlmostEqual(result.value / expected, 1.0, places=12)
        self.assertLess(result.slack, 0.1)
        with self.assertRaises(RegimeError):
            short_distance_energy(c60_system(300.0))
        with self.assertRaises(RegimeError):
            short_distance_energy(c60_system(300.0, separation=1e-12, plasma_omega=0.0))

    def test_short_distance_matches_full_energy(self):
        # Q = 0.5 keeps l_max moderate at r = 0.02
        for T in (0.0, 300.0, 1e5):
            sys = c60_system(T)
            sys = sys.replace(separation=0.02 * sys.radius, plasma_omega=0.5 / sys.radius)
            pol = sys.polarizability()
            if T == 0.0:
                exact = abel_plana.zero_temperature_energy(sys, pol)
            else:
                exact = matsubara.free_energy(sys, pol).total
            with warnings.catch_warnings():
                warnings.simplefilter('error', RegimeWarning)
                law = short_distance_energy(sys)
            self.assertAlmostEqual(law.value / exact, 1.0, delta=0.05, msg='T=%r' % T)

    def test_low_temperature_thermal_exponent(self):
        temps = np.geomspace(10.0, 100.0, 4)
        thermal = []
        for T in temps:
            sys = c60_system(T)
            thermal.append(abel_plana.thermal_part(sys, sys.polarizability()))
            self.assertAlmostEqual(thermal[-1] / low_temperature_thermal_law(sys), 1.0,
                                   delta=1e-2)
        slope = np.polyfit(np.log(temps), np.log(-np.array(thermal)), 1)[0]
        self.assertAlmostEqual(slope, 4.0, delta=0.02)

    def test_short_distance_thermal_occupation(self):
        cold = short_distance_energy(c60_system(0.0, separation=1e-12))
        hot = short_distance_energy(c60_system(1e5, separation=1e-12))
        self.assertLess(hot.value, cold.value)


class Test_eta0(unittest.TestCase):
    def test_against_mpmath(self):
        for tau in (0.01, 0.3, 0.49, 0.51, 1.0, 5.0, 30.0):
            self.assertAlmostEqual(eta0(tau) / mp_eta0(tau), 1.0, places=11, msg=repr(tau))

    def test_limits(self):
        self.assertAlmostEqual(eta0(1e-6), 1.0, places=12)
        self.assertAlmostEqual(eta0(100.0) / (100.0 / 6.0), 1.0, places=12)

    def test_array(self):
        taus = np.array([0.1, 0.7, 4.0])
        np.testing.assert_allclose(eta0(taus), [eta0(t) for t in taus], rtol=1e-15)

    def test_derivative(self):
        h = 1e-4
        for tau in (0.05, 0.4, 0.6, 3.0):
            numeric = (eta0(tau + h) - eta0(tau - h)) / (2.0 * h)
            self.assertAlmostEqual(eta0_prime(tau), numeric, delta=1e-7)

    def test_invalid(self):
        for bad in (0.0, -1.0, float('inf')):
            with self.assertRaises(DomainError):
                eta0(bad)


class Test_eta1(unittest.TestCase):
    def test_kernel_integral(self):
        for k, lo, hi in ((3, 0.2, 3.0), (5, 0.7, float('inf')), (3, 0.05, float('inf')),
                          (5, 0.01, 0.4), (5, 1.5, 4.0)):
            exact = mp_kernel(k, lo, mpmath.inf if math.isinf(hi) else hi)
            self.assertAlmostEqual(kernel_integral(k, lo, hi) / exact, 1.0, places=10,
                                   msg='k=%d [%r, %r]' % (k, lo, hi))
        with self.assertRaises(DomainError):
            kernel_integral(4, 1.0, 2.0)

    def test_integrals_in_grid_order(self):
        i3, i5 = eta_integrals([3.0, 0.2, 1.0])
        j3, j5 = eta_integrals([0.2, 1.0, 3.0])
        np.testing.assert_allclose(i3, j3[[2, 0, 1]], rtol=1e-11)
        np.testing.assert_allclose(i5, j5[[2, 0, 1]], rtol=1e-11)

    def test_small_tau_limit(self):
        self.assertAlmostEqual(eta1(1e-3), -67.0 / 45.0, delta=5e-3)
        self.assertAlmostEqual(eta1(1e-3, complete=True), -52.0 / 45.0, delta=5e-3)

    def test_radial_factor_term(self):
        # the complete form adds (tau^3/6) e^tau (e^tau + 1)/(e^tau - 1)^3
        for tau in (0.3, 1.6, 7.0):
            e = math.exp(tau)
            extra = tau ** 3 / 6.0 * e * (e + 1.0) / (e - 1.0) ** 3
            self.assertAlmostEqual(eta1(tau, complete=True) - eta1(tau), extra,
                                   delta=1e-9, msg=repr(tau))

    def test_scalar_and_array(self):
        taus = np.array([0.05, 1.0, 6.0])
        values = eta1(taus)
        self.assertIsInstance(eta1(1.0), float)
        np.testing.assert_allclose(values, [eta1(t) for t in taus], rtol=1e-9)

    def test_derivative(self):
        h = 1e-3
        for tau in (0.1, 1.0, 5.0):
            numeric = (eta1(tau + h) - eta1(tau - h)) / (2.0 * h)
            self.assertAlmostEqual(eta1_prime(tau), numeric,
                                   delta=1e-5 * max(1.0, abs(numeric)), msg=repr(tau))
        for tau in (0.1, 2.0):
            numeric = (eta1(tau + h, complete=True) - eta1(tau - h, complete=True)) / (2.0 * h)
            self.assertAlmostEqual(eta1_prime(tau, complete=True), numeric,
                                   delta=1e-5 * max(1.0, abs(numeric)), msg=repr(tau))


class Test_flat_plate(unittest.TestCase):
    def test_static_matches_eta0(self):
        for separation in (2e-9, 1e-7, 5e-6):
            sys = c60_system(300.0, separation=separation, radius=1.0)
            pol = sys.polarizability(STATIC)
            tau = reduce(sys).tau
            expected = casimir_polder_energy(sys.alpha0, separation) * eta0(tau)
            self.assertAlmostEqual(flat_plate_energy(sys, pol) / expected, 1.0, delta=1e-7,
                                   msg=repr(separation))

    def test_static_corrections_match_eta1(self):
        for separation in (2e-7, 4e-6):
            sys = c60_system(300.0, separation=separation, radius=1e-4)
            point = reduce(sys)
            pol = sys.polarizability(STATIC)
            expected = (casimir_polder_energy(sys.alpha0, separation)
                        * (eta0(point.tau) + point.r * eta1(point.tau, complete=True)))
            value = flat_plate_energy(sys, pol, include_corrections=True)
            self.assertAlmostEqual(value / expected, 1.0, delta=1e-6, msg=repr(separation))

    def test_oscillator_below_static(self):
        sys = c60_system(300.0, separation=1e-7, radius=1.0)
        static = flat_plate_energy(sys, sys.polarizability(STATIC))
        oscillator = flat_plate_energy(sys, sys.polarizability())
        self.assertLess(static, oscillator)
        self.assertLess(oscillator, 0.0)

    def test_zero_temperature(self):
        with self.assertRaises(DomainError):
            flat_plate_energy(c60_system(0.0), c60_system(0.0).polarizability())

    def test_sphere_approaches_corrected_plate(self):
        separation = 1e-6
        errors = []
        for r in (0.1, 0.05, 0.02):
            sys = casimirpolder.preset_system('ideal-sphere', temperature=300.0)
            sys = sys.replace(separation=separation, radius=separation / r)
            pol = sys.polarizability(STATIC)
            exact = matsubara.free_energy(sys, pol).total
            plate = flat_plate_energy(sys, pol, include_corrections=True)
            errors.append(abs(exact / plate - 1.0))
        self.assertGreater(errors[0], errors[1])
        self.assertGreater(errors[1], errors[2])
        slope = math.log(errors[0] / errors[2]) / math.log(5.0)
        self.assertAlmostEqual(slope, 2.0, delta=0.3)


class Test_debye_ideal(unittest.TestCase):
    def test_high_temperature_is_zero_mode(self):
        sys = casimirpolder.preset_system('ideal-sphere')
        sys = sys.replace(temperature=1e4 * effective_temperatures(sys).T_omega)
        value = debye_ideal_energy(sys, sys.polarizability())
        zm = zero_mode(reduce(sys), sys.alpha0, sys.temperature, sys.radius)
        self.assertLess(value, 0.0)
        self.assertAlmostEqual(value / zm, 1.0, delta=1e-3)
