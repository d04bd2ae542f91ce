"""Fundamental Half-Periods."""


from collections.abc import Sequence
from dataclasses import dataclass
from itertools import pairwise
import logging
import math
from typing import LiteralString, Self

import numpy as np
from numpy.typing import NDArray

from ..errors import DomainError
from .._util.doc import formula_doc
from .._util.quadrature import integrate

from .invariants import Invariants, cubic_roots


__all__: Sequence[LiteralString] = 'HalfPeriods', 'half_periods_from_invariants'


_LOGGER: logging.Logger = logging.getLogger(__name__)


# integrand value at which the improper integral is truncated
_TAIL_CUTOFF: float = 1e-16

_DECADE_ABS_TOL: float = 1e-15
_DECADE_REL_TOL: float = 1e-13


@dataclass(frozen=True)
class HalfPeriods:
    """Real half-period omega > 0 and imaginary half-period omega_prime."""

    omega: float
    omega_prime: complex

    def __post_init__(self: Self, /) -> None:
        """Validate the rectangular sign convention."""
        omega_prime: complex = complex(self.omega_prime)
        object.__setattr__(self, 'omega', float(self.omega))
        object.__setattr__(self, 'omega_prime', omega_prime)

        if not self.omega > 0:
            raise DomainError(f'*** REAL HALF-PERIOD {self.omega} NOT POSITIVE ***')

        if not (omega_prime.imag > 0 and abs(omega_prime.real) <= 1e-12 * omega_prime.imag):
            raise DomainError(f'*** HALF-PERIOD {omega_prime} NOT ON THE POSITIVE '
                              'IMAGINARY AXIS ***')

    @property
    def ratio(self: Self, /) -> complex:
        """Period ratio omega_prime / omega."""
        return self.omega_prime / self.omega


def _improper_integral(a: float, b: float, /) -> float:
    """Integrate 1 / sqrt((s^2 + a)(s^2 + b)) over [0, inf) for a, b > 0.

    Integrated decade by decade up to the first S where the integrand
    drops below the cutoff; the tail beyond S is added analytically.
    """
    def f(s: NDArray[np.float64]) -> NDArray[np.float64]:
        s2 = s * s
        return 1 / np.sqrt((s2 + a) * (s2 + b))

    edges: list[float] = [0.0, 1.0]
    while f(np.float64(edges[-1])) >= _TAIL_CUTOFF:
        edges.append(10 * edges[-1])

    body: float = math.fsum(integrate(f, lo, hi,
                                      abs_tol=_DECADE_ABS_TOL,
                                      rel_tol=_DECADE_REL_TOL).value
                            for lo, hi in pairwise(edges))

    end: float = edges[-1]
    tail: float = 1 / end - (a + b) / (6 * end ** 3)

    _LOGGER.debug('improper integral a=%g, b=%g over %d decades', a, b, len(edges) - 1)
    return body + tail


@formula_doc("""
    omega   =   int_{e1}^inf   (4t^3 - g2 t - g3)^(-1/2) dt,     t = e1 + s^2
    omega'  = i int_{-inf}^{e3} (-(4t^3 - g2 t - g3))^(-1/2) dt,  t = e3 - s^2
""")
def half_periods_from_invariants(inv: Invariants, /) -> HalfPeriods:
    """Compute the fundamental half-periods of a rectangular lattice by quadrature."""
    e1, e2, e3 = cubic_roots(inv)

    omega: float = _improper_integral(e1 - e2, e1 - e3)
    omega_prime_imag: float = _improper_integral(e1 - e3, e2 - e3)

    return HalfPeriods(omega, complex(0.0, omega_prime_imag))
