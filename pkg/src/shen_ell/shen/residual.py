"""Residuals of the Differential Equations & Companion Relations."""


from collections.abc import Sequence
from typing import LiteralString

import numpy as np

from ..hypergeometric import Modulus, Signature
from ..modular import cubic_invariants, quadratic_invariants
from .._util.doc import formula_doc
from .._util.type import ComplexValue
from ..weierstrass import Invariants, wp, wp_prime

from .function import ShenFunction, dn_real
from .invariants import SPECIAL_VALUE, signature_invariants
from .periods import shen_half_periods


__all__: Sequence[LiteralString] = ('ode_residual',
                                    'companion_q_residual',
                                    'least_period_defect')


@formula_doc("""
    THREE: 9 f'^2 = 4 (1 - f)(f^3 + 3 f^2 - 4 lambda^2)
    FOUR:  f'^2 = 2 (1 - f)(f^2 - lambda^2)
""")
def ode_residual(f: ShenFunction, z: ComplexValue, /) -> float:
    """Absolute residual of the first-order differential equation at z.

    Both f and f' come from p_kappa and p_kappa'; a lattice point raises `PoleError`.
    """
    p: complex = wp(z, f.inv)
    dp: complex = wp_prime(z, f.inv)

    c: float = float(f.sig.rhs_scale) * f.m.kappa2
    x: complex = 1 / 3 + p

    value: complex = 1 - c / x
    derivative: complex = c * dp / (x * x)
    lam2: float = f.m.lam2

    if f.sig is Signature.THREE:
        return abs(9 * derivative ** 2
                   - 4 * (1 - value) * (value ** 3 + 3 * value ** 2 - 4 * lam2))

    return abs(derivative ** 2 - 2 * (1 - value) * (value ** 2 - lam2))


def _companion_invariants(sig: Signature, inv: Invariants, /) -> Invariants:
    if sig is Signature.THREE:
        return cubic_invariants(inv, SPECIAL_VALUE).invariants
    return quadratic_invariants(inv, SPECIAL_VALUE).invariants


@formula_doc("""
    q_kappa(z) = -n p_lambda(sqrt(n) i z),   n = 3 (THREE) or 2 (FOUR)
""")
def companion_q_residual(sig: Signature, m: Modulus, z: ComplexValue, /) -> float:
    """Absolute residual of the relation between q_kappa and the complementary p_lambda."""
    z = complex(z)

    q: complex = wp(z, _companion_invariants(sig, signature_invariants(sig, m)))
    p_lambda: complex = wp(sig.period_scale * 1j * z, signature_invariants(sig, m.complementary()))

    return abs(q + sig.order * p_lambda)


def least_period_defect(sig: Signature, m: Modulus, divisor: int, /,
                        samples: int = 16) -> float:
    """Largest change of dn3 / dn4 on the real line under a shift by 2K / divisor.

    2K is the least real period exactly when this is clearly non-zero
    for every divisor > 1.
    """
    assert isinstance(divisor, int) and divisor > 1, \
        ValueError(f'*** DIVISOR {divisor} NOT AN INTEGER > 1 ***')

    period: float = 2 * shen_half_periods(sig, m).omega
    shift: float = period / divisor

    return max(abs(dn_real(sig, m, float(u) + shift) - dn_real(sig, m, float(u)))
               for u in np.linspace(0.0, period, num=samples, endpoint=False))
