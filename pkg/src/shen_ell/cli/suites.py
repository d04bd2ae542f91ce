"""Verification Suites."""


from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
import logging
import math
from typing import LiteralString, NamedTuple, Optional, Self

import numpy as np
from numpy.typing import NDArray

from ..errors import ShenEllError
from ..hypergeometric import (Modulus, Signature,
                              complete_K, gauss_2f1, incomplete_integral, invert_phi)
from ..modular import (cubic_invariants, quadratic_invariants,
                       cubic_sum_identity_residual, quadratic_sum_identity_residual)
from ..shen import (QUADRATURE, SPECIAL_VALUE, ShenFunction,
                    companion_invariants, companion_q_residual,
                    complementary_period_residual, dn_real, exact_signature_invariants,
                    least_period_defect, ode_residual, period_ratio, shen_eval,
                    signature_four_roots, signature_invariants,
                    signature_invariants_complementary_form, special_value_b)
from .._util.io import format_real, format_threshold
from ..weierstrass import (Invariants, cubic_roots, half_periods_from_invariants,
                           lattice_half_periods, lattice_sum_oracle,
                           scale_invariants, wp, wp_prime)

from .config import Suite


__all__: Sequence[LiteralString] = ('SWEEP', 'HEADER', 'CheckResult', 'plan', 'run_checks')


_LOGGER: logging.Logger = logging.getLogger(__name__)


SWEEP: tuple[float, ...] = (0.1, 0.25, 0.5, 0.75, 0.9)

HEADER: tuple[str, ...] = ('name', 'kappa2', 'residual', 'threshold', 'verdict')

_SEED: int = 20_140_301

_LATTICE_SUM_TRUNCATION: int = 200


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check at one modulus."""

    name: str
    kappa2: float
    residual: float
    threshold: float
    lower_bound: bool = False

    @property
    def passed(self: Self, /) -> bool:
        """Residual within threshold (or above it, for lower-bound checks)."""
        if not math.isfinite(self.residual):
            return False
        if self.lower_bound:
            return self.residual >= self.threshold
        return self.residual <= self.threshold

    def record(self: Self, /) -> tuple[str, ...]:
        """CSV fields."""
        return (self.name, format_real(self.kappa2), format_real(self.residual),
                format_threshold(self.threshold), 'PASS' if self.passed else 'FAIL')


class _Check(NamedTuple):
    name: str
    residual: Callable[[Signature, Modulus], float]
    threshold: Optional[float] = None   # None: configured tolerance
    lower_bound: bool = False
    signatures: tuple[Signature, ...] = (Signature.THREE, Signature.FOUR)
    kappa2: Optional[float] = None   # None: every modulus of the sweep


def _rng() -> np.random.Generator:
    return np.random.default_rng(_SEED)


def _cell_points(sig: Signature, m: Modulus, n: int, /,
                 x: tuple[float, float] = (0.1, 1.9),
                 y: tuple[float, float] = (0.1, 0.5)) -> list[complex]:
    """Pseudo-random points x omega + y omega' away from the lattice and the poles of f."""
    hp = ShenFunction.create(sig, m).hp
    rng: np.random.Generator = _rng()
    xs: NDArray[np.float64] = rng.uniform(*x, size=n)
    ys: NDArray[np.float64] = rng.uniform(*y, size=n)
    return [float(a) * hp.omega + float(b) * hp.omega_prime for a, b in zip(xs, ys)]


# hypergeometric

def _closed_form_identity(sig: Signature, m: Modulus, /) -> float:
    theta: NDArray[np.float64] = np.arcsin(m.kappa * np.sin(_rng().uniform(0, 0.5 * np.pi,
                                                                             size=200)))
    a: float = float(sig.a)
    return max(abs(gauss_2f1(sig.a, sig.b, 0.5, math.sin(t) ** 2) * math.cos(t)
                   - math.cos((2 * a - 1) * t))
               for t in theta.tolist())


def _complete_k_quadrature(sig: Signature, m: Modulus, /) -> float:
    k: float = complete_K(sig, m)
    return abs(incomplete_integral(sig, m, 0.5 * math.pi) - k) / k


def _phi_inverse(sig: Signature, m: Modulus, /) -> float:
    return max(abs(incomplete_integral(sig, m, invert_phi(sig, m, u)) - u)
               for u in (-3.1, -0.4, 0.7, 1.9, 5.3))


def _phi_quasi_period(sig: Signature, m: Modulus, /) -> float:
    two_k: float = 2 * complete_K(sig, m)
    return max(abs(invert_phi(sig, m, u + two_k) - invert_phi(sig, m, u) - math.pi)
               for u in (0.3, 0.7, 1.4))


# weierstrass

def _root_sum(sig: Signature, m: Modulus, /) -> float:
    return abs(math.fsum(cubic_roots(signature_invariants(sig, m))))


def _root_residual(sig: Signature, m: Modulus, /) -> float:
    inv: Invariants = signature_invariants(sig, m)
    scale: float = max(1.0, abs(inv.g2), abs(inv.g3))
    return max(abs(inv.cubic(e)) for e in cubic_roots(inv)) / scale


def _four_roots(_: Signature, m: Modulus, /) -> float:
    return max(abs(x - y) for x, y in zip(cubic_roots(signature_invariants(Signature.FOUR, m)),
                                          signature_four_roots(m)))


def _half_period_omega(sig: Signature, m: Modulus, /) -> float:
    omega: float = ShenFunction.create(sig, m).hp.omega
    return abs(half_periods_from_invariants(signature_invariants(sig, m)).omega - omega) / omega


def _half_period_omega_prime(sig: Signature, m: Modulus, /) -> float:
    omega_prime: complex = ShenFunction.create(sig, m).hp.omega_prime
    quadrature: complex = half_periods_from_invariants(signature_invariants(sig, m)).omega_prime
    return abs(quadrature - omega_prime) / abs(omega_prime)


def _wp_evenness(sig: Signature, m: Modulus, /) -> float:
    inv: Invariants = signature_invariants(sig, m)
    return max(abs(wp(-z, inv) - (p := wp(z, inv))) / (1 + abs(p))
               for z in _cell_points(sig, m, 50, y=(0.1, 0.9)))


def _wp_periodicity(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    return max(max(abs(wp(z + 2 * f.hp.omega, f.inv) - (p := wp(z, f.inv))),
                   abs(wp(z + 2 * f.hp.omega_prime, f.inv) - p)) / (1 + abs(p))
               for z in _cell_points(sig, m, 10, y=(0.1, 0.9)))


def _wp_half_period_values(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    omega, omega_prime = f.hp.omega, f.hp.omega_prime
    return max(abs(wp(z, f.inv) - e)
               for z, e in zip((omega, omega + omega_prime, omega_prime), cubic_roots(f.inv)))


def _wp_ode(sig: Signature, m: Modulus, /) -> float:
    inv: Invariants = signature_invariants(sig, m)
    return max(abs(wp_prime(z, inv) ** 2 - inv.cubic(p := wp(z, inv))) / (1 + abs(p) ** 3)
               for z in _cell_points(sig, m, 25, y=(0.1, 0.9)))


def _wp_homogeneity(sig: Signature, m: Modulus, /) -> float:
    c: float = 1.5
    inv: Invariants = signature_invariants(sig, m)
    g2, g3 = scale_invariants(c, inv)
    scaled: Invariants = Invariants(g2.real, g3.real)
    return max(abs(wp(c * z, scaled) - (p := wp(z, inv) / c ** 2)) / (1 + abs(p))
               for z in _cell_points(sig, m, 10, y=(0.1, 0.9)))


def _lattice_sum(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    return max(abs(lattice_sum_oracle(z, f.hp, _LATTICE_SUM_TRUNCATION) - (p := wp(z, f.inv)))
               / (1 + abs(p))
               for z in _cell_points(sig, m, 3, x=(0.2, 0.8), y=(0.2, 0.8)))


# modular

def _sum_identity(identity: Callable, sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    return max(identity(z, f.inv, f.hp) / (1 + abs(wp(z, f.inv)))
               for z in _cell_points(sig, m, 10, x=(0.1, 0.9), y=(0.1, 0.9)))


def _companion_closed_form(sig: Signature, m: Modulus, /) -> float:
    transform = cubic_invariants if sig is Signature.THREE else quadratic_invariants
    general = transform(signature_invariants(sig, m), SPECIAL_VALUE)
    closed = companion_invariants(sig, m)
    return max(abs(general.h2 - closed.h2), abs(general.h3 - closed.h3))


def _companion_half_periods(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    hp = half_periods_from_invariants(companion_invariants(sig, m).invariants)
    omega_prime: complex = f.hp.omega_prime / sig.order
    return max(abs(hp.omega - f.hp.omega) / f.hp.omega,
               abs(hp.omega_prime - omega_prime) / abs(omega_prime))


def _transform_exact(sig: Signature, _: Modulus, /) -> float:
    """Exact rational transformed invariants at kappa^2 = 1/2."""
    inv: Invariants = exact_signature_invariants(sig, Fraction(1, 2))
    if sig is Signature.THREE:
        result, expected = cubic_invariants(inv, SPECIAL_VALUE), (Fraction(20, 3),
                                                                 Fraction(-88, 27))
    else:
        result, expected = quadratic_invariants(inv, SPECIAL_VALUE), (Fraction(10, 3),
                                                                     Fraction(-28, 27))
    return float(abs(result.h2 - expected[0]) + abs(result.h3 - expected[1]))


# shen

def _special_value_b(sig: Signature, m: Modulus, /) -> float:
    return abs(special_value_b(sig, m) - float(SPECIAL_VALUE))


def _complementary_form(sig: Signature, m: Modulus, /) -> float:
    kappa_form: Invariants = signature_invariants(sig, m)
    lambda_form: Invariants = signature_invariants_complementary_form(sig, m)
    return max(abs(kappa_form.g2 - lambda_form.g2), abs(kappa_form.g3 - lambda_form.g3))


def _companion_q(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    inv_lambda: Invariants = signature_invariants(sig, m.complementary())
    residuals: list[float] = []
    for x in (0.25, 0.5, 0.75):
        for y in (0.25, 0.5, 0.75):
            z: complex = x * f.hp.omega + y * f.hp.omega_prime
            scale: float = 1 + sig.order * abs(wp(sig.period_scale * 1j * z, inv_lambda))
            residuals.append(companion_q_residual(sig, m, z) / scale)
    return max(residuals)


def _ode(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    real_points: list[complex] = [complex(u) for u in
                                  np.linspace(0.05, 2 * f.hp.omega - 0.05, num=20).tolist()]
    return max(ode_residual(f, z) / (1 + abs(shen_eval(f, z)) ** 3)
               for z in real_points + _cell_points(sig, m, 10))


def _construction_equivalence(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    return max(abs(dn_real(sig, m, u) - shen_eval(f, u))
               for u in np.linspace(0.05, 2 * f.hp.omega - 0.05, num=40).tolist())


def _double_periodicity(sig: Signature, m: Modulus, /) -> float:
    f: ShenFunction = ShenFunction.create(sig, m)
    return max(max(abs(shen_eval(f, z + 2 * f.hp.omega) - (value := shen_eval(f, z))),
                   abs(shen_eval(f, z + 2 * f.hp.omega_prime) - value))
               for z in _cell_points(sig, m, 10))


def _period_ratio(sig: Signature, m: Modulus, /) -> float:
    ratio: complex = period_ratio(sig, m)
    return abs(lattice_half_periods(signature_invariants(sig, m)).ratio - ratio) / abs(ratio)


def _least_period(sig: Signature, m: Modulus, /, divisor: int) -> float:
    return least_period_defect(sig, m, divisor)


def _period_ratio_symmetry(sig: Signature, m: Modulus, /) -> float:
    return abs(period_ratio(sig, m) - sig.period_scale * 1j)


_HYPERGEOMETRIC: tuple[_Check, ...] = (
    _Check('closed_form_identity', _closed_form_identity, 1e-12),
    _Check('complete_K_quadrature', _complete_k_quadrature, 1e-10),
    _Check('phi_inverse', _phi_inverse, 1e-10),
    _Check('phi_quasi_period', _phi_quasi_period, 1e-10),
)

_WEIERSTRASS: tuple[_Check, ...] = (
    _Check('root_sum', _root_sum, 1e-12),
    _Check('root_residual', _root_residual, 1e-10),
    _Check('signature_four_roots', _four_roots, 1e-12, signatures=(Signature.FOUR,)),
    _Check('half_period_omega', _half_period_omega),
    _Check('half_period_omega_prime', _half_period_omega_prime),
    _Check('wp_evenness', _wp_evenness, 1e-10),
    _Check('wp_periodicity', _wp_periodicity, 1e-9),
    _Check('wp_half_period_values', _wp_half_period_values),
    _Check('wp_ode', _wp_ode),
    _Check('wp_homogeneity', _wp_homogeneity, 1e-9),
    _Check('lattice_sum_oracle', _lattice_sum, 5e-3),
)

_MODULAR: tuple[_Check, ...] = (
    _Check('quadratic_sum_identity', partial(_sum_identity, quadratic_sum_identity_residual)),
    _Check('cubic_sum_identity', partial(_sum_identity, cubic_sum_identity_residual)),
    _Check('companion_closed_form', _companion_closed_form, 1e-12),
    _Check('companion_half_periods', _companion_half_periods, 1e-7),
    _Check('transform_exact', _transform_exact, 0.0, kappa2=0.5),
)

_SHEN: tuple[_Check, ...] = (
    _Check('special_value_b', _special_value_b),
    _Check('complementary_form', _complementary_form, 1e-12),
    _Check('complementary_period', complementary_period_residual, 1e-10),
    _Check('complementary_period_quadrature',
           partial(complementary_period_residual, source=QUADRATURE)),
    _Check('companion_q', _companion_q, 1e-7),
    _Check('ode', _ode),
    _Check('construction_equivalence', _construction_equivalence, 1e-9),
    _Check('double_periodicity', _double_periodicity),
    _Check('period_ratio', _period_ratio),
    _Check('period_ratio_symmetry', _period_ratio_symmetry, 1e-10, kappa2=0.5),
    _Check('least_period_half', partial(_least_period, divisor=2), 1e-3, lower_bound=True),
    _Check('least_period_third', partial(_least_period, divisor=3), 1e-3, lower_bound=True),
)

_SUITES: dict[Suite, tuple[_Check, ...]] = {
    Suite.HYPERGEOMETRIC: _HYPERGEOMETRIC,
    Suite.WEIERSTRASS: _WEIERSTRASS,
    Suite.MODULAR: _MODULAR,
    Suite.SHEN: _SHEN,
    Suite.ALL: _HYPERGEOMETRIC + _WEIERSTRASS + _MODULAR + _SHEN,
}


Task = Callable[[], CheckResult]


def _run(check: _Check, sig: Signature, kappa2: float, tol: float, /) -> CheckResult:
    threshold: float = tol if check.threshold is None else check.threshold
    name: str = f'{check.name}:{sig.value}'

    try:
        residual: float = float(check.residual(sig, Modulus.from_kappa2(kappa2)))
    except (ShenEllError, ArithmeticError) as err:
        _LOGGER.warning('check %s at kappa^2=%g raised %s', name, kappa2, err)
        residual = math.nan

    _LOGGER.debug('check %s at kappa^2=%g: residual %.3g', name, kappa2, residual)
    return CheckResult(name, kappa2, residual, threshold, check.lower_bound)


def plan(suite: Suite, tol: float, /, sweep: Iterable[float] = SWEEP) -> list[Task]:
    """List the checks of a suite in report order: by modulus, then by check."""
    return [partial(_run, check, sig, kappa2, tol)
            for kappa2 in sweep
            for check in _SUITES[suite]
            if check.kappa2 is None or check.kappa2 == kappa2
            for sig in check.signatures]


def run_checks(tasks: Sequence[Task], /, jobs: int = 1) -> Iterator[CheckResult]:
    """Run checks, on `jobs` threads when jobs > 1, yielding results in task order."""
    if jobs == 1:
        yield from (task() for task in tasks)
        return

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        yield from executor.map(lambda task: task(), tasks)
