"""shen_ell.hypergeometric.series tests."""


import math
import unittest

from hypothesis import given, settings, strategies as st
from scipy.special import hyp2f1

from shen_ell import DomainError, NonConvergenceError, gauss_2f1, THREE, FOUR


# flake8: noqa
# pylint: disable=missing-class-docstring,missing-function-docstring


class TestGauss2F1(unittest.TestCase):
    def test_zero_argument(self):
        self.assertEqual(gauss_2f1(0.3, 0.7, 1, 0), 1.0)

    def test_against_scipy(self):
        for a, b, c, x in ((1 / 3, 2 / 3, 1, 0.25),
                           (1 / 4, 3 / 4, 1, 0.5),
                           (1 / 3, 2 / 3, 0.5, 0.9),
                           (0.5, 0.5, 1, 0.75),
                           (1.5, 2.5, 3.5, 0.3)):
            with self.subTest(a=a, b=b, c=c, x=x):
                self.assertAlmostEqual(gauss_2f1(a, b, c, x) / hyp2f1(a, b, c, x), 1, delta=1e-12)

    def test_fraction_parameters(self):
        self.assertAlmostEqual(gauss_2f1(FOUR.a, FOUR.b, 1, 0.5), hyp2f1(0.25, 0.75, 1, 0.5),
                               delta=1e-12)

    def test_domain(self):
        for x in (1, 1.5, -0.1, math.nan, math.inf):
            with self.subTest(x=x), self.assertRaises(DomainError):
                gauss_2f1(0.5, 0.5, 1, x)

        for c in (0, -2):
            with self.subTest(c=c), self.assertRaises(DomainError):
                gauss_2f1(0.5, 0.5, c, 0.5)

    def test_non_convergence(self):
        with self.assertRaises(NonConvergenceError):
            gauss_2f1(1 / 3, 2 / 3, 0.5, 1 - 1e-12)

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(theta=st.floats(min_value=0, max_value=1.2),
           sig=st.sampled_from([THREE, FOUR]))
    def test_closed_form_at_half(self, theta, sig):
        a = float(sig.a)
        self.assertAlmostEqual(gauss_2f1(sig.a, sig.b, 0.5, math.sin(theta) ** 2) * math.cos(theta),
                               math.cos((2 * a - 1) * theta),
                               delta=1e-12)


if __name__ == '__main__':
    unittest.main()
