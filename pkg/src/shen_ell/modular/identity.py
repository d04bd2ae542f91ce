"""Period-Division Sum Identities."""


from collections.abc import Sequence
from typing import LiteralString

from .._util.doc import formula_doc
from .._util.type import ComplexValue
from ..weierstrass import HalfPeriods, Invariants, wp

from .transform import cubic_invariants, quadratic_invariants


__all__: Sequence[LiteralString] = ('quadratic_sum_identity_residual',
                                    'cubic_sum_identity_residual')


@formula_doc("""
    q(z) = p(z) + p(z + omega') - p(omega')
""")
def quadratic_sum_identity_residual(z: ComplexValue, inv: Invariants, hp: HalfPeriods, /) -> float:
    """Absolute residual of the quadratic sum identity at z."""
    z = complex(z)
    b: complex = wp(hp.omega_prime, inv)

    q: complex = wp(z, quadratic_invariants(inv, b.real).invariants)

    return abs(q - (wp(z, inv) + wp(z + hp.omega_prime, inv) - b))


@formula_doc("""
    q(z) = p(z) + p(z + 2 omega'/3) + p(z - 2 omega'/3) - 2 p(2 omega'/3)
""")
def cubic_sum_identity_residual(z: ComplexValue, inv: Invariants, hp: HalfPeriods, /) -> float:
    """Absolute residual of the cubic sum identity at z."""
    z = complex(z)
    shift: complex = 2 * hp.omega_prime / 3
    b: complex = wp(shift, inv)

    q: complex = wp(z, cubic_invariants(inv, b.real).invariants)

    return abs(q - (wp(z, inv) + wp(z + shift, inv) + wp(z - shift, inv) - 2 * b))
