"""Weierstrass Elliptic Function & Its Derivative."""


from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
import logging
import math
from typing import LiteralString

from ..errors import DomainError, PoleError
from .._util.doc import formula_doc
from .._util.type import ComplexValue

from .half_periods import HalfPeriods
from .invariants import Invariants, CubicRoots, cubic_roots
from .jacobi import complete_elliptic_k, ellipj


__all__: Sequence[LiteralString] = ('wp', 'wp_prime',
                                    'lattice_half_periods',
                                    'scale_invariants',
                                    'POLE_TOL')


_LOGGER: logging.Logger = logging.getLogger(__name__)


# reduced arguments closer than POLE_TOL * omega to a lattice point are poles
POLE_TOL: float = 1e-12


@dataclass(frozen=True)
class _Lattice:
    roots: CubicRoots
    parameter: float
    scale: float
    omega: float
    omega_prime_imag: float


@lru_cache(maxsize=512)
def _lattice(inv: Invariants, /) -> _Lattice:
    e1, e2, e3 = roots = cubic_roots(inv)

    parameter: float = (e2 - e3) / (e1 - e3)
    scale: float = math.sqrt(e1 - e3)

    _LOGGER.debug('lattice of g2=%r, g3=%r: parameter %r', inv.g2, inv.g3, parameter)

    return _Lattice(roots=roots,
                    parameter=parameter,
                    scale=scale,
                    omega=complete_elliptic_k(parameter) / scale,
                    omega_prime_imag=complete_elliptic_k(1 - parameter) / scale)


def lattice_half_periods(inv: Invariants, /) -> HalfPeriods:
    """Half-periods K(m) / sqrt(e1 - e3) and i K(1 - m) / sqrt(e1 - e3).

    These are the periods `wp` reduces by; `half_periods_from_invariants`
    computes the same numbers independently by quadrature.
    """
    lattice: _Lattice = _lattice(inv)
    return HalfPeriods(lattice.omega, complex(0.0, lattice.omega_prime_imag))


def _reduce(z: complex, lattice: _Lattice, /) -> tuple[complex, int]:
    """Reduce z into the period cell centred at the origin.

    Returns the reduced argument and the half-period shift applied on top:
    0 when |beta| <= 1/4, otherwise -1 or +1 for z -/+ omega' so that the
    Jacobi argument keeps its imaginary part within K'/2.
    """
    period_re: float = 2 * lattice.omega
    period_im: float = 2 * lattice.omega_prime_imag

    re: float = z.real - period_re * math.floor(z.real / period_re + 0.5)
    im: float = z.imag - period_im * math.floor(z.imag / period_im + 0.5)

    if abs(complex(re, im)) < POLE_TOL * lattice.omega:
        raise PoleError(f'*** {z} IS ON THE PERIOD LATTICE ***')

    beta: float = im / period_im
    if beta > 0.25:
        return complex(re, im - lattice.omega_prime_imag), -1
    if beta < -0.25:
        return complex(re, im + lattice.omega_prime_imag), 1
    return complex(re, im), 0


@formula_doc("""
    p(z) = e3 + (e1 - e3) / sn^2(z sqrt(e1 - e3) | m),   m = (e2 - e3) / (e1 - e3)
    p(z + omega') = e3 + (e1 - e3) m sn^2(z sqrt(e1 - e3) | m)
""")
def wp(z: ComplexValue, inv: Invariants, /) -> complex:
    """Evaluate the Weierstrass function with real invariants and positive discriminant."""
    lattice: _Lattice = _lattice(inv)
    w, shift = _reduce(complex(z), lattice)

    e1, _, e3 = lattice.roots
    sn, _, _ = ellipj(w * lattice.scale, lattice.parameter)

    if shift:
        return e3 + (e1 - e3) * lattice.parameter * sn * sn
    return e3 + (e1 - e3) / (sn * sn)


@formula_doc("""
    p'(z) = -2 (e1 - e3)^(3/2) cn dn / sn^3
    p'(z + omega') = 2 m (e1 - e3)^(3/2) sn cn dn
""")
def wp_prime(z: ComplexValue, inv: Invariants, /) -> complex:
    """Evaluate the derivative of the Weierstrass function."""
    lattice: _Lattice = _lattice(inv)
    w, shift = _reduce(complex(z), lattice)

    sn, cn, dn = ellipj(w * lattice.scale, lattice.parameter)
    scale3: float = lattice.scale ** 3

    if shift:
        return 2 * lattice.parameter * scale3 * sn * cn * dn
    return -2 * scale3 * cn * dn / sn ** 3


@formula_doc("""
    p(cz; c^-4 g2, c^-6 g3) = c^-2 p(z; g2, g3)
""")
def scale_invariants(c: ComplexValue, inv: Invariants, /) -> tuple[complex, complex]:
    """Return the invariants (c^-4 g2, c^-6 g3) of the rescaled function."""
    c = complex(c)
    if not c:
        raise DomainError('*** SCALE FACTOR c MUST BE NON-ZERO ***')

    return c ** -4 * float(inv.g2), c ** -6 * float(inv.g3)
