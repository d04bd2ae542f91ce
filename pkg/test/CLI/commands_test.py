"""shen-ell command-line tests."""


from contextlib import redirect_stderr, redirect_stdout
import csv
from io import StringIO
import logging
import math
import os
from pathlib import Path
import tempfile
import unittest
from unittest.mock import patch

from scipy.special import hyp2f1

from shen_ell.cli import main


# flake8: noqa
# pylint: disable=missing-class-docstring,missing-function-docstring


def run(*argv, env=None):
    """Run the command line; return exit code, CSV rows on stdout, and stderr text."""
    stdout, stderr = StringIO(), StringIO()
    environ = {} if env is None else env
    with patch.dict(os.environ, environ), redirect_stdout(stdout), redirect_stderr(stderr):
        if 'SHEN_ELL_TOL' not in environ:
            os.environ.pop('SHEN_ELL_TOL', None)
        code = main(list(argv))
    return code, list(csv.reader(StringIO(stdout.getvalue()))), stderr.getvalue()


class TestEval(unittest.TestCase):
    def test_origin(self):
        code, rows, _ = run('eval', '--signature', '4', '--kappa2', '0.5', '--z', '0+0i')
        self.assertEqual(code, 0)
        self.assertEqual(rows[0], ['signature', 'kappa2', 'z_re', 'z_im',
                                   'f_re', 'f_im', 'p_re', 'p_im'])
        self.assertEqual(rows[1], ['4', '0.5', '0', '0', '1', '0', 'inf', '0'])

    def test_real_half_period(self):
        _, rows, _ = run('periods', '--signature', '4', '--kappa2', '0.5')
        omega = rows[1][0]
        code, rows, _ = run('eval', '--signature', '4', '--kappa2', '0.5', '--z', f'{omega}+0i')
        self.assertEqual(code, 0)
        self.assertEqual(rows[1][2], omega)
        self.assertAlmostEqual(float(rows[1][4]), 0.7071068, delta=1e-7)

    def test_negative_literal(self):
        code, rows, _ = run('eval', '--signature', '3', '--kappa2', '0.25', '--z=-0.4+0.3i')
        self.assertEqual(code, 0)
        self.assertEqual((rows[1][2], rows[1][3]), ('-0.40000000000000002', '0.29999999999999999'))

    def test_domain_errors(self):
        for argv in (('eval', '--signature', '3', '--kappa2', '1.5'),
                     ('eval', '--signature', '5', '--kappa2', '0.5'),
                     ('eval', '--z', 'one'),
                     ('eval', '--kappa2', 'x')):
            with self.subTest(argv=argv):
                code, rows, stderr = run(*argv)
                self.assertEqual(code, 2)
                self.assertEqual(rows, [])
                self.assertEqual(len(stderr.strip().splitlines()), 1)

    def test_pole(self):
        _, rows, _ = run('periods', '--signature', '4', '--kappa2', '0.5')
        omega_prime = rows[1][1]
        code, _, stderr = run('eval', '--signature', '4', '--kappa2', '0.5',
                              '--z', f'0+{omega_prime}i')
        self.assertEqual(code, 3)
        self.assertIn('pole', stderr)

    def test_small_modulus(self):
        for sig in ('3', '4'):
            with self.subTest(sig=sig):
                code, rows, _ = run('eval', '--signature', sig, '--kappa2', '1e-6', '--z', '0.3')
                self.assertEqual(code, 0)
                self.assertAlmostEqual(float(rows[1][4]), 1, delta=1e-6)
                self.assertEqual(float(rows[1][5]), 0)

    def test_usage(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run('frobnicate')[0], 2)


class TestPeriods(unittest.TestCase):
    def test_header(self):
        code, rows, _ = run('periods', '--signature', '3', '--kappa2', '0.5')
        self.assertEqual(code, 0)
        self.assertEqual(rows[0], ['omega', 'omega_prime_imag', 'ratio_imag',
                                   'omega_quadrature', 'omega_prime_quadrature_imag'])
        self.assertAlmostEqual(float(rows[1][2]), math.sqrt(3), delta=1e-10)

    def test_quadrature_agreement(self):
        _, rows, _ = run('periods', '--signature', '4', '--kappa2', '0.25')
        omega, _, _, omega_quadrature, _ = map(float, rows[1])
        self.assertLess(abs(omega - omega_quadrature), 1e-8)

    def test_no_warnings(self):
        for sig in ('3', '4'):
            with self.subTest(sig=sig), self.assertNoLogs('shen_ell', logging.WARNING):
                code, _, _ = run('periods', '--signature', sig, '--kappa2', '0.5')
            self.assertEqual(code, 0)

    def test_series_value(self):
        _, rows, _ = run('periods', '--signature', '4', '--kappa2', '0.5')
        self.assertAlmostEqual(float(rows[1][0]) / (math.pi / 2 * hyp2f1(0.25, 0.75, 1, 0.5)), 1,
                               delta=1e-12)


class TestTable(unittest.TestCase):
    def test_rows(self):
        code, rows, _ = run('table', '--signature', '4', '--kappa2', '0.5', '--grid', '5')
        self.assertEqual(code, 0)
        self.assertEqual(rows[0], ['u', 'dn_real', 'dn_from_wp', 'abs_diff'])
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[1], ['0', '1', '1', '0'])
        self.assertLess(max(float(row[3]) for row in rows[1:]), 1e-9)
        self.assertAlmostEqual(float(rows[3][1]), 1, delta=1e-9)

    def test_deterministic_across_jobs(self):
        argv = ('table', '--signature', '3', '--kappa2', '0.75', '--grid', '9')
        self.assertEqual(run(*argv)[1], run(*argv, '--jobs', '4')[1])

    def test_file_output(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'table.csv'
            code, rows, _ = run('table', '--grid', '3', '--output', str(path))
            self.assertEqual(code, 0)
            self.assertEqual(rows, [])
            text = path.read_bytes()
            self.assertNotIn(b'\r', text)
            self.assertEqual(len(text.decode().splitlines()), 4)

    def test_unwritable_output(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'missing' / 'table.csv'
            self.assertEqual(run('table', '--grid', '3', '--output', str(path))[0], 2)

    def test_grid_too_small(self):
        self.assertEqual(run('table', '--grid', '1')[0], 2)


class TestVerify(unittest.TestCase):
    def test_modular(self):
        code, rows, _ = run('verify', '--suite', 'modular', '--tol', '1e-7')
        self.assertEqual(code, 0)
        self.assertEqual(rows[0], ['name', 'kappa2', 'residual', 'threshold', 'verdict'])
        self.assertTrue(all(len(row) == 5 and row[4] == 'PASS' for row in rows[1:]))
        self.assertIn(['transform_exact:4', '0.5', '0', '0', 'PASS'], rows)
        self.assertEqual({row[1] for row in rows[1:]},
                         {'0.10000000000000001', '0.25', '0.5', '0.75', '0.90000000000000002'})

    def test_shen_special_value(self):
        code, rows, _ = run('verify', '--suite', 'shen')
        self.assertEqual(code, 0)
        for sig in (3, 4):
            row = next(row for row in rows
                       if row[0] == f'special_value_b:{sig}' and row[1] == '0.5')
            self.assertEqual(row[3:], ['1e-8', 'PASS'])
            self.assertLess(float(row[2]), 1e-8)

    def test_tolerance_from_environment(self):
        _, rows, _ = run('verify', '--suite', 'hypergeometric', env={'SHEN_ELL_TOL': '1e-6'})
        _, rows_default, _ = run('verify', '--suite', 'hypergeometric')
        self.assertEqual(rows, rows_default)

        code, rows, _ = run('verify', '--suite', 'shen', env={'SHEN_ELL_TOL': '1e-6'})
        self.assertEqual(code, 0)
        self.assertIn('1e-6', {row[3] for row in rows})

    def test_invalid_tolerance(self):
        self.assertEqual(run('verify', env={'SHEN_ELL_TOL': 'abc'})[0], 2)
        self.assertEqual(run('verify', '--tol', '-1')[0], 2)

    def test_impossible_tolerance_fails(self):
        code, rows, _ = run('verify', '--suite', 'shen', '--tol', '1e-300')
        self.assertEqual(code, 1)
        self.assertIn('FAIL', {row[4] for row in rows[1:]})

    def test_deterministic_across_jobs(self):
        self.assertEqual(run('verify', '--suite', 'weierstrass')[1],
                         run('verify', '--suite', 'weierstrass', '--jobs', '3')[1])

    def test_all(self):
        code, rows, _ = run('verify', '--suite', 'all')
        self.assertEqual(code, 0)
        self.assertEqual([row for row in rows[1:] if row[4] != 'PASS'], [])
        self.assertEqual({row[0].split(':')[0] for row in rows[1:]} >= {
            'closed_form_identity', 'half_period_omega', 'quadratic_sum_identity',
            'companion_q', 'construction_equivalence', 'least_period_half'}, True)


if __name__ == '__main__':
    unittest.main()
