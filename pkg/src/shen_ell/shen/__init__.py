"""Shen's Alternative Elliptic Functions of Signatures Three & Four."""


from collections.abc import Sequence
from typing import LiteralString

from .function import ShenFunction, shen_eval, shen_from_wp, dn3_real, dn4_real, dn_real
from .invariants import (SPECIAL_VALUE,
                         signature_invariants, exact_signature_invariants,
                         signature_invariants_complementary_form,
                         companion_invariants, signature_four_roots)
from .periods import (PeriodSource, HYPERGEOMETRIC, QUADRATURE,
                      shen_half_periods, period_ratio,
                      complementary_period_residual, special_point, special_value_b)
from .residual import ode_residual, companion_q_residual, least_period_defect


__all__: Sequence[LiteralString] = ('ShenFunction', 'shen_eval', 'shen_from_wp',
                                    'dn3_real', 'dn4_real', 'dn_real',
                                    'SPECIAL_VALUE',
                                    'signature_invariants', 'exact_signature_invariants',
                                    'signature_invariants_complementary_form',
                                    'companion_invariants', 'signature_four_roots',
                                    'PeriodSource', 'HYPERGEOMETRIC', 'QUADRATURE',
                                    'shen_half_periods', 'period_ratio',
                                    'complementary_period_residual',
                                    'special_point', 'special_value_b',
                                    'ode_residual', 'companion_q_residual',
                                    'least_period_defect')
