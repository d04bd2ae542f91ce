"""Brute-Force Lattice Sums."""


from collections.abc import Sequence
from functools import lru_cache
import math
from typing import LiteralString

import numpy as np
from numpy.typing import NDArray

from ..errors import DomainError, PoleError
from .._util.type import ComplexValue

from .function import POLE_TOL
from .half_periods import HalfPeriods
from .invariants import Invariants


__all__: Sequence[LiteralString] = 'lattice_sum_oracle', 'eisenstein_invariants'


MIN_TRUNCATION: int = 10


@lru_cache(maxsize=4)
def _lattice_points(hp: HalfPeriods, n: int, /) -> NDArray[np.complex128]:
    """Non-zero w = 2j omega + 2k omega', max(|j|, |k|) <= n, by increasing |w|."""
    index: NDArray[np.int64] = np.arange(-n, n + 1)
    j, k = np.meshgrid(index, index, indexing='ij')

    w: NDArray[np.complex128] = (2 * j * hp.omega + 2 * k * hp.omega_prime).ravel()
    w = w[(j != 0).ravel() | (k != 0).ravel()]

    w = w[np.argsort(np.abs(w), kind='stable')]
    w.setflags(write=False)
    return w


def _complex_fsum(values: NDArray[np.complex128], /) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def lattice_sum_oracle(z: ComplexValue, hp: HalfPeriods, N: int, /) -> complex:
    """Sum the defining series of the Weierstrass function over a square of lattice points.

    z^-2 + sum' [(z - w)^-2 - w^-2]; the truncation error is O(1/N), so this
    is only a loose independent cross-check.
    """
    if N < MIN_TRUNCATION:
        raise DomainError(f'*** TRUNCATION N={N} BELOW {MIN_TRUNCATION} ***')

    z = complex(z)
    w: NDArray[np.complex128] = _lattice_points(hp, N)
    d: NDArray[np.complex128] = z - w

    threshold: float = POLE_TOL * hp.omega
    if abs(z) < threshold or np.min(np.abs(d)) < threshold:
        raise PoleError(f'*** {z} IS ON THE PERIOD LATTICE ***')

    return z ** -2 + _complex_fsum(d ** -2 - w ** -2)


def eisenstein_invariants(hp: HalfPeriods, N: int = 400, /) -> Invariants:
    """Recompute the invariants from the periods by truncated Eisenstein sums.

    g2 = 60 sum' w^-4, g3 = 140 sum' w^-6.
    """
    if N < MIN_TRUNCATION:
        raise DomainError(f'*** TRUNCATION N={N} BELOW {MIN_TRUNCATION} ***')

    w: NDArray[np.complex128] = _lattice_points(hp, N)

    return Invariants(60 * math.fsum((w ** -4).real), 140 * math.fsum((w ** -6).real))
