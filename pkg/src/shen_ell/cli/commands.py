"""Command Implementations."""


from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
import csv
import logging
import math
from typing import LiteralString, TextIO

import numpy as np

from ..errors import PoleError
from ..shen import ShenFunction, dn_real, shen_eval
from .._util.io import format_real, open_output
from ..weierstrass import half_periods_from_invariants, wp

from .config import RunConfig
from .suites import HEADER, CheckResult, plan, run_checks


__all__: Sequence[LiteralString] = ('EXIT_OK', 'EXIT_VERIFY_FAILED', 'EXIT_USAGE', 'EXIT_POLE',
                                    'cmd_eval', 'cmd_periods', 'cmd_verify', 'cmd_table')


_LOGGER: logging.Logger = logging.getLogger(__name__)


EXIT_OK: int = 0
EXIT_VERIFY_FAILED: int = 1
EXIT_USAGE: int = 2
EXIT_POLE: int = 3


def _writer(stream: TextIO, /):
    return csv.writer(stream, lineterminator='\n')


def cmd_eval(cfg: RunConfig, /) -> int:
    """Print dn3 / dn4 and p_kappa at one complex point."""
    f: ShenFunction = ShenFunction.create(cfg.signature, cfg.modulus)

    try:
        p: complex = wp(cfg.z, f.inv)
    except PoleError:
        p = complex(math.inf, 0.0)

    value: complex = shen_eval(f, cfg.z)

    with open_output(cfg.output) as stream:
        writer = _writer(stream)
        writer.writerow(('signature', 'kappa2', 'z_re', 'z_im', 'f_re', 'f_im', 'p_re', 'p_im'))
        writer.writerow((cfg.signature.value, format_real(cfg.kappa2),
                         format_real(cfg.z.real), format_real(cfg.z.imag),
                         format_real(value.real), format_real(value.imag),
                         format_real(p.real), format_real(p.imag)))

    return EXIT_OK


def cmd_periods(cfg: RunConfig, /) -> int:
    """Print the half-periods from the hypergeometric formulas and from quadrature."""
    f: ShenFunction = ShenFunction.create(cfg.signature, cfg.modulus)
    quadrature = half_periods_from_invariants(f.inv)

    with open_output(cfg.output) as stream:
        writer = _writer(stream)
        writer.writerow(('omega', 'omega_prime_imag', 'ratio_imag',
                         'omega_quadrature', 'omega_prime_quadrature_imag'))
        writer.writerow((format_real(f.hp.omega), format_real(f.hp.omega_prime.imag),
                         format_real(f.hp.ratio.imag),
                         format_real(quadrature.omega),
                         format_real(quadrature.omega_prime.imag)))

    return EXIT_OK


def cmd_verify(cfg: RunConfig, /) -> int:
    """Run a verification suite over the standard modulus sweep."""
    failures: int = 0

    with open_output(cfg.output) as stream:
        writer = _writer(stream)
        writer.writerow(HEADER)

        result: CheckResult
        for result in run_checks(plan(cfg.suite, cfg.tol), jobs=cfg.jobs):
            writer.writerow(result.record())
            if not result.passed:
                failures += 1

    if failures:
        _LOGGER.warning('%d check(s) of suite %s failed', failures, cfg.suite)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_table(cfg: RunConfig, /) -> int:
    """Write the real-line function from both constructions on a uniform grid over [0, 4K]."""
    f: ShenFunction = ShenFunction.create(cfg.signature, cfg.modulus)

    def row(u: float) -> tuple[str, ...]:
        real_line: float = dn_real(f.sig, f.m, u)
        from_wp: float = shen_eval(f, u).real
        return (format_real(u), format_real(real_line), format_real(from_wp),
                format_real(abs(real_line - from_wp)))

    grid: list[float] = np.linspace(0.0, 4 * f.hp.omega, num=cfg.grid).tolist()

    if cfg.jobs == 1:
        rows: list[tuple[str, ...]] = [row(u) for u in grid]
    else:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as executor:
            rows = list(executor.map(row, grid))

    with open_output(cfg.output) as stream:
        writer = _writer(stream)
        writer.writerow(('u', 'dn_real', 'dn_from_wp', 'abs_diff'))
        writer.writerows(rows)

    return EXIT_OK
