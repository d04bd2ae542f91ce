"""shen_ell.weierstrass.half_periods tests."""


import logging
import math
import unittest

import mpmath
from scipy.special import hyp2f1

from shen_ell import DomainError, HalfPeriods, Invariants, half_periods_from_invariants
from shen_ell.weierstrass import lattice_half_periods


LEMNISCATIC = Invariants(4, 0)


# flake8: noqa
# pylint: disable=missing-class-docstring,missing-function-docstring


class TestHalfPeriods(unittest.TestCase):
    def test_coercion_and_ratio(self):
        hp = HalfPeriods(2, 3j)
        self.assertIsInstance(hp.omega, float)
        self.assertIsInstance(hp.omega_prime, complex)
        self.assertEqual(hp.ratio, 1.5j)

    def test_sign_convention(self):
        for omega, omega_prime in ((0, 1j), (-1, 1j), (1, -1j), (1, 1), (1, 1 + 1j)):
            with self.subTest(omega=omega, omega_prime=omega_prime), \
                    self.assertRaises(DomainError):
                HalfPeriods(omega, omega_prime)


class TestHalfPeriodsFromInvariants(unittest.TestCase):
    def test_lemniscatic(self):
        omega = float(mpmath.gamma(0.25) ** 2 / (4 * mpmath.sqrt(2 * mpmath.pi)))
        hp = half_periods_from_invariants(LEMNISCATIC)
        self.assertAlmostEqual(hp.omega / omega, 1, delta=1e-10)
        self.assertAlmostEqual(hp.omega_prime.imag / omega, 1, delta=1e-10)
        self.assertEqual(hp.omega_prime.real, 0)

    def test_signature_four_half(self):
        hp = half_periods_from_invariants(Invariants(5 / 6, 7 / 54))
        self.assertAlmostEqual(hp.omega / (math.pi / 2 * hyp2f1(0.25, 0.75, 1, 0.5)), 1,
                               delta=1e-8)
        self.assertAlmostEqual(hp.ratio, math.sqrt(2) * 1j, delta=1e-8)

    def test_signature_three_quarter(self):
        k2 = 0.25
        inv = Invariants(4 / 27 * (9 - 8 * k2), 8 / 729 * (27 - 36 * k2 + 8 * k2 ** 2))
        hp = half_periods_from_invariants(inv)
        self.assertAlmostEqual(hp.omega / (math.pi / 2 * hyp2f1(1 / 3, 2 / 3, 1, k2)), 1,
                               delta=1e-8)

    def test_decades_converge_quietly(self):
        for inv in (LEMNISCATIC, Invariants(5 / 6, 7 / 54), Invariants(20 / 27, 88 / 729)):
            with self.subTest(inv=inv), self.assertNoLogs('shen_ell', logging.WARNING):
                half_periods_from_invariants(inv)

    def test_agrees_with_agm(self):
        for g2, g3 in ((5 / 6, 7 / 54), (3.0, 0.5), (10.0, -2.0)):
            inv = Invariants(g2, g3)
            quadrature, agm = half_periods_from_invariants(inv), lattice_half_periods(inv)
            with self.subTest(g2=g2, g3=g3):
                self.assertAlmostEqual(quadrature.omega / agm.omega, 1, delta=1e-10)
                self.assertAlmostEqual(quadrature.omega_prime / agm.omega_prime, 1, delta=1e-10)


if __name__ == '__main__':
    unittest.main()
