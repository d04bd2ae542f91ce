"""Shen's Elliptic Functions dn3 & dn4."""


from collections.abc import Sequence
from dataclasses import dataclass
import math
from typing import LiteralString, Self

from ..errors import DomainError, PoleError
from ..hypergeometric import Modulus, Signature, complete_K, integrand, invert_phi
from .._util.doc import formula_doc
from .._util.type import ComplexValue
from ..weierstrass import HalfPeriods, Invariants, wp

from .invariants import signature_invariants
from .periods import shen_half_periods


__all__: Sequence[LiteralString] = ('ShenFunction',
                                    'shen_eval',
                                    'shen_from_wp',
                                    'dn3_real', 'dn4_real', 'dn_real')


# |1/3 + p| below this is a pole of the function itself
_DENOMINATOR_TOL: float = 1e-12

# agreement of the stored half-periods with the hypergeometric ones
_PERIOD_REL_TOL: float = 1e-9


@dataclass(frozen=True)
class ShenFunction:
    """dn3 or dn4 of a fixed modulus, with its coperiodic Weierstrass data.

    Direct construction is checked against `signature_invariants` and the
    hypergeometric half-periods; `create` builds the consistent instance.
    """

    sig: Signature
    m: Modulus
    inv: Invariants
    hp: HalfPeriods

    def __post_init__(self: Self, /) -> None:
        """Check the Weierstrass data against signature and modulus."""
        if self.inv != signature_invariants(self.sig, self.m):
            raise DomainError(f'*** {self.inv} ARE NOT THE {self.sig.name} INVARIANTS '
                              f'OF kappa^2={self.m.kappa2} ***')

        omega_prime: complex = shen_half_periods(self.sig, self.m).omega_prime
        if not (math.isclose(self.hp.omega, complete_K(self.sig, self.m),
                             rel_tol=_PERIOD_REL_TOL)
                and math.isclose(self.hp.omega_prime.imag, omega_prime.imag,
                                 rel_tol=_PERIOD_REL_TOL)):
            raise DomainError(f'*** {self.hp} ARE NOT THE {self.sig.name} HALF-PERIODS '
                              f'OF kappa^2={self.m.kappa2} ***')

    @classmethod
    def create(cls, sig: Signature, m: Modulus, /) -> Self:
        """Build the function of signature `sig` and modulus `m`."""
        return cls(sig=sig, m=m,
                   inv=signature_invariants(sig, m),
                   hp=shen_half_periods(sig, m))

    def __call__(self: Self, z: ComplexValue, /) -> complex:
        """Evaluate at z."""
        return shen_eval(self, z)


def shen_from_wp(sig: Signature, m: Modulus, p: complex, /) -> complex:
    """Map a value of p_kappa to the value of dn3 / dn4."""
    denominator: complex = 1 / 3 + p
    if abs(denominator) < _DENOMINATOR_TOL:
        raise PoleError(f'*** 1/3 + p = {denominator} VANISHES: POLE OF {sig.name} ***')

    return 1 - float(sig.rhs_scale) * m.kappa2 / denominator


@formula_doc("""
    THREE: (1 - f)(1/3 + p_kappa) = 4/9 kappa^2
    FOUR:  (1 - f)(1/3 + p_kappa) = 1/2 kappa^2
""")
def shen_eval(f: ShenFunction, z: ComplexValue, /) -> complex:
    """Evaluate dn3 / dn4 at a complex point through its coperiodic Weierstrass function.

    At a lattice point p_kappa has a pole and the value is exactly 1.
    """
    try:
        p: complex = wp(z, f.inv)
    except PoleError:
        return complex(1.0)

    return shen_from_wp(f.sig, f.m, p)


@formula_doc("""
    dn3(u) = 1 / F(1/3, 2/3; 1/2; kappa^2 sin^2 phi(u))
""")
def dn3_real(m: Modulus, u: float, /) -> float:
    """Evaluate dn3 on the real line through the inverse of the incomplete integral."""
    return 1 / integrand(Signature.THREE, m, invert_phi(Signature.THREE, m, u))


@formula_doc("""
    dn4(u) = cos(arcsin(kappa sin phi(u)))
""")
def dn4_real(m: Modulus, u: float, /) -> float:
    """Evaluate dn4 on the real line through the inverse of the incomplete integral."""
    s: float = m.kappa * math.sin(invert_phi(Signature.FOUR, m, u))
    return math.sqrt((1 - s) * (1 + s))


def dn_real(sig: Signature, m: Modulus, u: float, /) -> float:
    """Dispatch to `dn3_real` or `dn4_real`."""
    return dn3_real(m, u) if sig is Signature.THREE else dn4_real(m, u)
