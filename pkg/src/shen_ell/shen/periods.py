"""Half-Periods of dn3 & dn4."""


from collections.abc import Sequence
from enum import IntEnum
import math
from typing import LiteralString

from ..hypergeometric import Modulus, Signature, complete_K, gauss_2f1
from .._util.doc import formula_doc
from ..weierstrass import HalfPeriods, half_periods_from_invariants, wp

from .invariants import signature_invariants


__all__: Sequence[LiteralString] = ('PeriodSource', 'HYPERGEOMETRIC', 'QUADRATURE',
                                    'shen_half_periods',
                                    'period_ratio',
                                    'complementary_period_residual',
                                    'special_point', 'special_value_b')


class PeriodSource(IntEnum):
    """Where the imaginary half-period comes from."""

    HYPERGEOMETRIC: int = 0   # closed form in 2F1
    QUADRATURE: int = 1   # improper integral over the invariant cubic


# aliases
HYPERGEOMETRIC: PeriodSource = PeriodSource.HYPERGEOMETRIC
QUADRATURE: PeriodSource = PeriodSource.QUADRATURE


def _complementary_factor(sig: Signature, m: Modulus, /) -> float:
    return gauss_2f1(sig.a, sig.b, 1, m.lam2)


@formula_doc("""
    omega  = pi/2 F(a, b; 1; kappa^2)
    omega' = i (sqrt(n) / 2) pi F(a, b; 1; 1 - kappa^2)
""")
def shen_half_periods(sig: Signature, m: Modulus, /) -> HalfPeriods:
    """Fundamental half-periods of dn3 / dn4 and of p_kappa."""
    omega_prime_imag: float = sig.period_scale / 2 * math.pi * _complementary_factor(sig, m)
    return HalfPeriods(complete_K(sig, m), complex(0.0, omega_prime_imag))


@formula_doc("""
    omega' / omega = i sqrt(n) F(a, b; 1; 1 - kappa^2) / F(a, b; 1; kappa^2)
""")
def period_ratio(sig: Signature, m: Modulus, /) -> complex:
    """Period ratio fixing the shape of the period lattice."""
    return complex(0.0, sig.period_scale * _complementary_factor(sig, m)
                   / gauss_2f1(sig.a, sig.b, 1, m.kappa2))


@formula_doc("""
    omega'_kappa = sqrt(n) i omega_lambda
""")
def complementary_period_residual(sig: Signature, m: Modulus, /,
                                  source: PeriodSource = HYPERGEOMETRIC) -> float:
    """Relative residual of the complementary-modulus period relation."""
    if source is PeriodSource.QUADRATURE:
        omega_prime: complex = half_periods_from_invariants(signature_invariants(sig, m)).omega_prime
    else:
        omega_prime = shen_half_periods(sig, m).omega_prime

    omega_lambda: float = shen_half_periods(sig, m.complementary()).omega

    return abs(omega_prime - sig.period_scale * 1j * omega_lambda) / abs(omega_prime)


def special_point(sig: Signature, hp: HalfPeriods, /) -> complex:
    """Point 2 omega'/3 (THREE) or omega' (FOUR) where p_kappa equals -1/3."""
    if sig is Signature.THREE:
        return 2 * hp.omega_prime / 3
    return hp.omega_prime


def special_value_b(sig: Signature, m: Modulus, /) -> float:
    """Recompute b = p_kappa(2 omega'/3) (THREE) or p_kappa(omega') (FOUR) numerically.

    The value is -1/3 for every modulus; only the real part is returned.
    """
    point: complex = special_point(sig, shen_half_periods(sig, m))
    return wp(point, signature_invariants(sig, m)).real
