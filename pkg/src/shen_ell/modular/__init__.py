"""Weierstrassian Modular Transformations."""


from collections.abc import Sequence
from typing import LiteralString

from .identity import quadratic_sum_identity_residual, cubic_sum_identity_residual
from .transform import TransformResult, quadratic_invariants, cubic_invariants


__all__: Sequence[LiteralString] = ('TransformResult',
                                    'quadratic_invariants', 'cubic_invariants',
                                    'quadratic_sum_identity_residual',
                                    'cubic_sum_identity_residual')
