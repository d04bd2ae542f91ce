"""shen_ell.shen.residual tests."""


import unittest

from hypothesis import given, settings, strategies as st
import numpy as np

from shen_ell import (FOUR, THREE, Modulus, PoleError, ShenFunction,
                      companion_q_residual, ode_residual, shen_eval, signature_invariants, wp)
from shen_ell.shen import least_period_defect


SWEEP = (0.1, 0.25, 0.5, 0.75, 0.9)


# flake8: noqa
# pylint: disable=missing-class-docstring,missing-function-docstring


class TestOdeResidual(unittest.TestCase):
    def test_real_axis(self):
        for sig in (THREE, FOUR):
            for k2 in SWEEP:
                f = ShenFunction.create(sig, Modulus.from_kappa2(k2))
                for u in np.linspace(0.05, 2 * f.hp.omega - 0.05, num=20).tolist():
                    with self.subTest(sig=sig, kappa2=k2, u=u):
                        self.assertLess(ode_residual(f, u) / (1 + abs(shen_eval(f, u)) ** 3), 1e-8)

    @settings(max_examples=10, deadline=None, derandomize=True)
    @given(x=st.floats(min_value=0.1, max_value=1.9), y=st.floats(min_value=0.1, max_value=0.5),
           k2=st.sampled_from(SWEEP), sig=st.sampled_from([THREE, FOUR]))
    def test_complex(self, x, y, k2, sig):
        f = ShenFunction.create(sig, Modulus.from_kappa2(k2))
        z = x * f.hp.omega + y * f.hp.omega_prime
        self.assertLess(ode_residual(f, z) / (1 + abs(shen_eval(f, z)) ** 3), 1e-8)

    def test_pole(self):
        with self.assertRaises(PoleError):
            ode_residual(ShenFunction.create(THREE, Modulus.from_kappa2(0.5)), 0)


class TestCompanionQResidual(unittest.TestCase):
    def test_quarter_cell_grid(self):
        for sig in (THREE, FOUR):
            for k2 in SWEEP:
                m = Modulus.from_kappa2(k2)
                f = ShenFunction.create(sig, m)
                inv_lambda = signature_invariants(sig, m.complementary())
                for x in (0.25, 0.5, 0.75):
                    for y in (0.25, 0.5, 0.75):
                        z = x * f.hp.omega + y * f.hp.omega_prime
                        scale = 1 + sig.order * abs(wp(sig.period_scale * 1j * z, inv_lambda))
                        with self.subTest(sig=sig, kappa2=k2, z=z):
                            self.assertLess(companion_q_residual(sig, m, z) / scale, 1e-7)


class TestLeastPeriod(unittest.TestCase):
    def test_fractions_of_period_are_not_periods(self):
        for sig in (THREE, FOUR):
            for k2 in (0.1, 0.9):
                m = Modulus.from_kappa2(k2)
                for divisor in (2, 3):
                    with self.subTest(sig=sig, kappa2=k2, divisor=divisor):
                        self.assertGreater(least_period_defect(sig, m, divisor), 1e-3)


if __name__ == '__main__':
    unittest.main()
