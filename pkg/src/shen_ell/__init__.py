"""Shen's Elliptic Functions dn3 & dn4 and Their Weierstrassian Modular Transformations."""


from collections.abc import Sequence
from importlib.metadata import version
from typing import LiteralString

from .errors import (ShenEllError, DomainError, NonConvergenceError,
                     DegenerateLatticeError, PoleError)
from .hypergeometric import (Signature, THREE, FOUR,
                             Modulus,
                             gauss_2f1,
                             integrand, incomplete_integral, complete_K, invert_phi)
from .modular import (TransformResult,
                      quadratic_invariants, cubic_invariants,
                      quadratic_sum_identity_residual, cubic_sum_identity_residual)
from .shen import (ShenFunction, shen_eval, dn3_real, dn4_real,
                   signature_invariants, shen_half_periods, period_ratio,
                   special_value_b, ode_residual, companion_q_residual,
                   PeriodSource, complementary_period_residual)
from .weierstrass import (Invariants, CubicRoots, cubic_roots,
                          HalfPeriods, half_periods_from_invariants,
                          wp, wp_prime, scale_invariants,
                          lattice_sum_oracle)


__all__: Sequence[LiteralString] = (
    '__version__',

    'ShenEllError', 'DomainError', 'NonConvergenceError',
    'DegenerateLatticeError', 'PoleError',

    'Signature', 'THREE', 'FOUR',
    'Modulus',
    'gauss_2f1',
    'integrand', 'incomplete_integral', 'complete_K', 'invert_phi',

    'Invariants', 'CubicRoots', 'cubic_roots',
    'HalfPeriods', 'half_periods_from_invariants',
    'wp', 'wp_prime', 'scale_invariants',
    'lattice_sum_oracle',

    'TransformResult',
    'quadratic_invariants', 'cubic_invariants',
    'quadratic_sum_identity_residual', 'cubic_sum_identity_residual',

    'ShenFunction', 'shen_eval', 'dn3_real', 'dn4_real',
    'signature_invariants', 'shen_half_periods', 'period_ratio',
    'special_value_b', 'ode_residual', 'companion_q_residual',
    'PeriodSource', 'complementary_period_residual',
)


__version__: LiteralString = version(distribution_name='Shen-Ell')
