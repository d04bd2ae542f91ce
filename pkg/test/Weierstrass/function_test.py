"""shen_ell.weierstrass.function tests."""


import math
import unittest

from hypothesis import given, settings, strategies as st

from shen_ell import (DomainError, Invariants, PoleError,
                      cubic_roots, scale_invariants, wp, wp_prime)
from shen_ell.weierstrass import lattice_half_periods


SIGNATURE_FOUR_HALF = Invariants(5 / 6, 7 / 54)
GENERIC = Invariants(3.0, 0.5)


# flake8: noqa
# pylint: disable=missing-class-docstring,missing-function-docstring


def cell_point(inv, x, y):
    hp = lattice_half_periods(inv)
    return x * hp.omega + y * hp.omega_prime


class TestWp(unittest.TestCase):
    def test_laurent_expansion(self):
        inv = SIGNATURE_FOUR_HALF
        for z in (0.05, 0.05j, 0.03 + 0.04j):
            expected = z ** -2 + inv.g2 * z ** 2 / 20 + inv.g3 * z ** 4 / 28
            with self.subTest(z=z):
                self.assertAlmostEqual(wp(z, inv), expected, delta=1e-9)

    def test_half_period_values(self):
        for inv in (SIGNATURE_FOUR_HALF, GENERIC):
            hp = lattice_half_periods(inv)
            e1, e2, e3 = cubic_roots(inv)
            with self.subTest(inv=inv):
                self.assertAlmostEqual(wp(hp.omega, inv), e1, delta=1e-9)
                self.assertAlmostEqual(wp(hp.omega + hp.omega_prime, inv), e2, delta=1e-8)
                self.assertAlmostEqual(wp(hp.omega_prime, inv), e3, delta=1e-8)

    def test_real_on_real_axis(self):
        self.assertEqual(wp(0.7, GENERIC).imag, 0)

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(x=st.floats(min_value=0.1, max_value=1.9), y=st.floats(min_value=0.1, max_value=1.9))
    def test_even_and_doubly_periodic(self, x, y):
        hp = lattice_half_periods(GENERIC)
        z = cell_point(GENERIC, x, y)
        p = wp(z, GENERIC)
        scale = 1 + abs(p)
        self.assertLess(abs(wp(-z, GENERIC) - p) / scale, 1e-10)
        self.assertLess(abs(wp(z + 2 * hp.omega, GENERIC) - p) / scale, 1e-9)
        self.assertLess(abs(wp(z + 2 * hp.omega_prime, GENERIC) - p) / scale, 1e-9)

    def test_pole(self):
        hp = lattice_half_periods(GENERIC)
        for z in (0, 2 * hp.omega, 2 * hp.omega_prime, -2 * hp.omega + 4 * hp.omega_prime):
            with self.subTest(z=z), self.assertRaises(PoleError):
                wp(z, GENERIC)


class TestWpPrime(unittest.TestCase):
    def test_zero_at_half_periods(self):
        hp = lattice_half_periods(SIGNATURE_FOUR_HALF)
        for z in (hp.omega, hp.omega_prime, hp.omega + hp.omega_prime):
            with self.subTest(z=z):
                self.assertAlmostEqual(wp_prime(z, SIGNATURE_FOUR_HALF), 0, delta=1e-8)

    def test_finite_difference(self):
        z, h = cell_point(GENERIC, 0.6, 0.3), 1e-5
        difference = (wp(z + h, GENERIC) - wp(z - h, GENERIC)) / (2 * h)
        self.assertAlmostEqual(wp_prime(z, GENERIC) / difference, 1, delta=1e-7)

    @settings(max_examples=25, deadline=None, derandomize=True)
    @given(x=st.floats(min_value=0.1, max_value=1.9), y=st.floats(min_value=0.1, max_value=1.9))
    def test_differential_equation(self, x, y):
        for inv in (SIGNATURE_FOUR_HALF, GENERIC):
            z = cell_point(inv, x, y)
            p = wp(z, inv)
            self.assertLess(abs(wp_prime(z, inv) ** 2 - inv.cubic(p)) / (1 + abs(p) ** 3), 1e-8)

    def test_odd(self):
        z = cell_point(GENERIC, 0.3, 0.7)
        self.assertAlmostEqual(wp_prime(-z, GENERIC), -wp_prime(z, GENERIC), delta=1e-9)


class TestScaleInvariants(unittest.TestCase):
    def test_real_scale(self):
        g2, g3 = scale_invariants(2, GENERIC)
        self.assertAlmostEqual(g2, 3 / 16, delta=1e-15)
        self.assertAlmostEqual(g3, 0.5 / 64, delta=1e-15)

    def test_imaginary_scale(self):
        g2, g3 = scale_invariants(1 / (math.sqrt(3) * 1j), SIGNATURE_FOUR_HALF)
        self.assertAlmostEqual(g2, 9 * SIGNATURE_FOUR_HALF.g2, delta=1e-13)
        self.assertAlmostEqual(g3, -27 * SIGNATURE_FOUR_HALF.g3, delta=1e-13)

    def test_homogeneity(self):
        for c in (0.5, 1.5, 3.0):
            g2, g3 = scale_invariants(c, GENERIC)
            scaled = Invariants(g2.real, g3.real)
            for x, y in ((0.3, 0.2), (1.1, 0.8), (0.5, 1.5)):
                z = cell_point(GENERIC, x, y)
                expected = wp(z, GENERIC) / c ** 2
                with self.subTest(c=c, z=z):
                    self.assertLess(abs(wp(c * z, scaled) - expected) / (1 + abs(expected)), 1e-9)

    def test_zero_scale(self):
        with self.assertRaises(DomainError):
            scale_invariants(0, GENERIC)


if __name__ == '__main__':
    unittest.main()
