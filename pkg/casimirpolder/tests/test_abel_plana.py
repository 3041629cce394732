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
import unittest

import mpmath
import numpy as np

import casimirpolder
from casimirpolder import abel_plana, asymptotics, matsubara
from casimirpolder.abel_plana import *
from casimirpolder.core import CapabilityError, DomainError
from casimirpolder.model import STATIC, reduce


def c60_system(temperature, **kwargs):
    sys = casimirpolder.preset_system('c60-hydrogen', temperature=temperature)
    return sys.replace(**kwargs) if kwargs else sys


def mp_ideal_terms(l, y, chi):
    """nu iy J H2(w)^2/H2 and nu iy J' (H2'(w)^2 + L H2(w)^2/w^2)/H2' at w = chi y"""
    with mpmath.workdps(40):
        nu = l + mpmath.mpf(0.5)
        y = mpmath.mpf(y)
        w = chi * y
        j = lambda x: mpmath.sqrt(mpmath.pi * x / 2) * mpmath.besselj(nu, x)
        h = lambda x: mpmath.sqrt(mpmath.pi * x / 2) * (mpmath.besselj(nu, x)
                                                          - 1j * mpmath.bessely(nu, x))
        iy = mpmath.mpc(0, y)
        te = nu * iy * j(y) * h(w) ** 2 / h(y)
        tm = (nu * iy * mpmath.diff(j, y)
              * (mpmath.diff(h, w) ** 2 + h(w) ** 2 * l * (l + 1) / w ** 2) / mpmath.diff(h, y))
        return complex(te), complex(tm)


class Test_representations(unittest.TestCase):
    def test_matches_matsubara_sum(self):
        # T_omega/T below one, so both thermal parts contribute
        sys = c60_system(30000.0)
        pol = sys.polarizability()
        split = abel_plana.free_energy(sys, pol)
        summed = matsubara.free_energy(sys, pol)
        self.assertNotEqual(split.F1, 0.0)
        self.assertNotEqual(split.F2, 0.0)
        self.assertAlmostEqual(split.total, split.E0 + split.F1 + split.F2,
                               delta=1e-14 * abs(split.total))
        self.assertAlmostEqual(split.total / summed.total, 1.0, delta=1e-6)

    def test_equivalence_grid(self):
        for r in (0.5, 1.0, 2.0):
            for T in (30.0, 300.0, 3000.0):
                for Q in (0.0494, 0.5, 5.0):
                    with self.subTest(r=r, T=T, Q=Q):
                        sys = c60_system(T)
                        sys = sys.replace(separation=r * sys.radius,
                                          plasma_omega=Q / sys.radius)
                        pol = sys.polarizability()
                        split = abel_plana.free_energy(sys, pol).total
                        summed = matsubara.free_energy(sys, pol).total
                        self.assertLess(summed, 0.0)
                        self.assertAlmostEqual(split / summed, 1.0, delta=1e-6)

    def test_room_temperature_occupation_negligible(self):
        sys = c60_system(300.0)
        split = abel_plana.free_energy(sys, sys.polarizability())
        self.assertLess(abs(split.F1), 1e-150 * abs(split.E0))
        self.assertLess(abs(split.F2), abs(split.E0))

    def test_principal_value_matches_logarithmic(self):
        sys = c60_system(30000.0)
        pol = sys.polarizability()
        log_form = thermal_correction_2(sys, pol, method=LOGARITHMIC)
        pv_form = thermal_correction_2(sys, pol, method=PRINCIPAL_VALUE)
        self.assertAlmostEqual(pv_form / log_form, 1.0, delta=1e-6)

    def test_unknown_method(self):
        sys = c60_system(30000.0)
        with self.assertRaises(ValueError):
            thermal_correction_2(sys, sys.polarizability(), method='simpson')


class Test_spectral_laws(unittest.TestCase):
    small = np.geomspace(1e-4, 1e-2, 5)

    def shares(self, Q, ys=None):
        point = reduce(c60_system(300.0)).replace(Q=Q)
        return SpectralFunctions(point).e2_shares(self.small if ys is None else ys)

    def test_tm_cubic(self):
        for Q in (0.0494, 5.0):
            _, tm = self.shares(Q)
            chi = reduce(c60_system(300.0)).chi
            np.testing.assert_allclose(tm / (-2.0 * self.small ** 3 / chi ** 4), 1.0,
                                       rtol=1e-2)
            slope = np.polyfit(np.log(self.small), np.log(-tm), 1)[0]
            self.assertAlmostEqual(slope, 3.0, delta=0.03)

    def test_te_quintic(self):
        te, _ = self.shares(0.0494)
        self.assertTrue(np.all(te != 0.0))
        slope = np.polyfit(np.log(self.small), np.log(np.abs(te)), 1)[0]
        self.assertAlmostEqual(slope, 5.0, delta=0.05)

    def test_tm_vanishes_with_Q(self):
        ys = [0.1, 1.0]
        scaled = [self.shares(Q, ys)[1] / Q for Q in (1e-7, 1e-9, 1e-11)]
        for value in scaled:
            self.assertTrue(np.all(np.isfinite(value)))
            self.assertTrue(np.all(value != 0.0))
        np.testing.assert_allclose(scaled[0], scaled[2], rtol=1e-4)
        np.testing.assert_allclose(scaled[1], scaled[2], rtol=1e-5)
        self.assertEqual(tuple(self.shares(0.0, ys)[1]), (0.0, 0.0))


class Test_free_energy(unittest.TestCase):
    def test_zero_temperature(self):
        sys = c60_system(0.0)
        result = abel_plana.free_energy(sys, sys.polarizability())
        self.assertLess(result.E0, 0.0)
        self.assertEqual((result.F1, result.F2), (0.0, 0.0))
        self.assertEqual(result.total, result.E0)

    def test_static_polarizability(self):
        sys = c60_system(300.0)
        pol = sys.polarizability(STATIC)
        with self.assertRaises(CapabilityError):
            abel_plana.free_energy(sys, pol)
        with self.assertRaises(CapabilityError):
            thermal_part(sys, pol)
        # E0 alone is defined for a static atom
        self.assertLess(zero_temperature_energy(sys, pol), 0.0)

    def test_small_ideal_sphere_zero_temperature(self):
        # eps at x ~ 2e4 lies hundreds of decades below eps(0) for r = 0.01
        sys = casimirpolder.preset_system('ideal-sphere', temperature=0.0)
        sys = sys.replace(separation=0.01 * sys.radius)
        pol = sys.polarizability(STATIC)
        e0 = zero_temperature_energy(sys, pol)
        e_cp = asymptotics.casimir_polder_energy(sys.alpha0, sys.separation)
        self.assertAlmostEqual((e0 / e_cp - 1.0) / 0.01, -52.0 / 45.0, delta=0.03)

    def test_empty_sphere(self):
        sys = c60_system(30000.0, plasma_omega=0.0)
        result = abel_plana.free_energy(sys, sys.polarizability())
        self.assertEqual(result, AbelPlanaBreakdown(E0=0.0, F1=0.0, F2=0.0, total=0.0))

    def test_thermal_part(self):
        sys = c60_system(30000.0)
        pol = sys.polarizability()
        self.assertAlmostEqual(thermal_part(sys, pol),
                               thermal_correction_1(sys, pol) + thermal_correction_2(sys, pol),
                               delta=1e-12 * abs(thermal_correction_1(sys, pol)))


class Test_continued(unittest.TestCase):
    def setUp(self):
        self.point = reduce(c60_system(300.0))

    def test_conjugate_symmetry(self):
        for l in (1, 3, 12):
            for y in (0.004, 0.4, 3.0):
                up = g_continued(l, y, self.point)
                down = g_continued(l, y, self.point, sign=-1)
                self.assertAlmostEqual(down.real, up.real, delta=1e-12 * abs(up))
                self.assertAlmostEqual(down.imag, -up.imag, delta=1e-12 * abs(up))

    def test_invalid_argument(self):
        with self.assertRaises(DomainError):
            g_continued(1, 0.0, self.point)
        with self.assertRaises(DomainError):
            g_continued(0, 1.0, self.point)

    def test_analytic_derivative(self):
        spectral = SpectralFunctions(self.point)
        for y in (0.5 * self.point.q_a, 2.0 * self.point.q_a, 1.0):
            _, analytic = spectral.e2_with_derivative([y])
            numeric = spectral.e2_derivative_richardson(y)
            self.assertAlmostEqual(float(analytic[0]) / numeric, 1.0, delta=1e-4,
                                   msg='y=%r' % y)

    def test_shares_add_up(self):
        spectral = SpectralFunctions(self.point)
        te, tm = spectral.e2_shares([0.01, 0.1])
        total = spectral.e2_at([0.01, 0.1])
        for i in range(2):
            self.assertAlmostEqual(te[i] + tm[i], total[i], delta=1e-12 * abs(total[i]))

    def test_ideal_conductor(self):
        ideal = self.point.replace(Q=float('inf'))
        sums = continued_sum([0.3], ideal, matsubara.SeriesControl(), derivative=True)
        self.assertGreater(sums.l_max[0], 0)
        self.assertTrue(abs(sums.total[0]) > 0.0)

    def test_ideal_terms_against_mpmath(self):
        ideal = self.point.replace(Q=float('inf'))
        y = self.point.q_a
        te, tm = continued_terms(80, [y], ideal)
        for l in (1, 20, 60, 80):
            expected_te, expected_tm = mp_ideal_terms(l, y, ideal.chi)
            self.assertAlmostEqual(abs(te[l - 1, 0] / expected_te - 1.0), 0.0, delta=1e-9,
                                   msg='TE l=%d' % l)
            self.assertAlmostEqual(abs(tm[l - 1, 0] / expected_tm - 1.0), 0.0, delta=1e-9,
                                   msg='TM l=%d' % l)

    def test_high_orders_stay_finite(self):
        # H2 mantissas near 1e200 used to be squared here
        for point in (self.point, self.point.replace(Q=float('inf'))):
            parts = continued_terms(400, [point.q_a, 3.0], point, derivative=True)
            for part in parts:
                self.assertTrue(np.all(np.isfinite(part)))
            te = parts[0]
            self.assertLess(abs(te[-1, 0]), 1e-100 * abs(te[0, 0]))

    def test_continued_sum_at_oscillator_frequency(self):
        sums = continued_sum([self.point.q_a], self.point, matsubara.SeriesControl(),
                             derivative=True)
        self.assertTrue(np.isfinite(sums.total[0]))
        self.assertTrue(np.isfinite(sums.derivative[0]))
        self.assertLess(sums.l_max[0], matsubara.SeriesControl().l_max_cap)
