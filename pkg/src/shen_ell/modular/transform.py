"""Quadratic & Cubic Weierstrassian Modular Transformations."""


from collections.abc import Sequence
from dataclasses import dataclass
from numbers import Real
from typing import LiteralString, Self

from .._util.doc import formula_doc
from ..weierstrass import Invariants


__all__: Sequence[LiteralString] = ('TransformResult',
                                    'quadratic_invariants',
                                    'cubic_invariants')


@dataclass(frozen=True)
class TransformResult:
    """Invariants h2, h3 of the transformed function and the value b used."""

    h2: Real
    h3: Real
    b: Real

    @property
    def invariants(self: Self, /) -> Invariants:
        """Transformed invariants as an `Invariants` value."""
        return Invariants(self.h2, self.h3)


@formula_doc("""
    q = p(. ; omega, omega'/2),  b = p(omega'):
    h2 = 60 b^2 - 4 g2,  h3 = 56 b^3 + 8 g3
""")
def quadratic_invariants(inv: Invariants, b: Real, /) -> TransformResult:
    """Invariants after halving the imaginary period.

    Pure polynomial arithmetic: exact when given `Fraction` inputs.
    """
    return TransformResult(h2=60 * b ** 2 - 4 * inv.g2,
                           h3=56 * b ** 3 + 8 * inv.g3,
                           b=b)


@formula_doc("""
    q = p(. ; omega, omega'/3),  b = p(2 omega'/3):
    h2 = 120 b^2 - 9 g2,  h3 = 280 b^3 - 42 b g2 - 27 g3
""")
def cubic_invariants(inv: Invariants, b: Real, /) -> TransformResult:
    """Invariants after dividing the imaginary period by three.

    Pure polynomial arithmetic: exact when given `Fraction` inputs.
    """
    return TransformResult(h2=120 * b ** 2 - 9 * inv.g2,
                           h3=280 * b ** 3 - 42 * b * inv.g2 - 27 * inv.g3,
                           b=b)
