"""Weierstrass Elliptic Functions."""


from collections.abc import Sequence
from typing import LiteralString

from .function import wp, wp_prime, lattice_half_periods, scale_invariants
from .half_periods import HalfPeriods, half_periods_from_invariants
from .invariants import Invariants, CubicRoots, cubic_roots
from .oracle import lattice_sum_oracle, eisenstein_invariants


__all__: Sequence[LiteralString] = ('Invariants', 'CubicRoots', 'cubic_roots',
                                    'HalfPeriods', 'half_periods_from_invariants',
                                    'wp', 'wp_prime', 'lattice_half_periods',
                                    'scale_invariants',
                                    'lattice_sum_oracle', 'eisenstein_invariants')
