"""Signatures of the alternative elliptic bases."""


from collections.abc import Sequence
from enum import IntEnum
from fractions import Fraction
import math
from typing import LiteralString, Self

from ..errors import DomainError


__all__: Sequence[LiteralString] = 'Signature', 'THREE', 'FOUR'


# hypergeometric parameter a (b = 1 - a), period-division order n,
# and the constant c of the relation (1 - f)(1/3 + p) = c * kappa^2
_A: dict[int, Fraction] = {3: Fraction(1, 3), 4: Fraction(1, 4)}
_ORDER: dict[int, int] = {3: 3, 4: 2}
_RHS_SCALE: dict[int, Fraction] = {3: Fraction(4, 9), 4: Fraction(1, 2)}


class Signature(IntEnum):
    """Signature of an alternative elliptic base.

    THREE uses F(1/3, 2/3; . ; .) and is divided by 3 along the imaginary
    period; FOUR uses F(1/4, 3/4; . ; .) and is divided by 2.
    """

    THREE: int = 3
    FOUR: int = 4

    @classmethod
    def from_label(cls, label: int | str, /) -> Self:
        """Look up a signature by its label 3 or 4."""
        try:
            return cls(int(label))
        except ValueError as err:
            raise DomainError(f'*** SIGNATURE {label!r} NOT ONE OF 3, 4 ***') from err

    @property
    def a(self: Self, /) -> Fraction:
        """First hypergeometric parameter."""
        return _A[self.value]

    @property
    def b(self: Self, /) -> Fraction:
        """Second hypergeometric parameter, 1 - a."""
        return 1 - _A[self.value]

    @property
    def order(self: Self, /) -> int:
        """Order n of the period division linking p_kappa and p_lambda."""
        return _ORDER[self.value]

    @property
    def period_scale(self: Self, /) -> float:
        """Square root of the period-division order."""
        return math.sqrt(self.order)

    @property
    def rhs_scale(self: Self, /) -> Fraction:
        """Constant c in (1 - f)(1/3 + p) = c * kappa^2."""
        return _RHS_SCALE[self.value]


# aliases
THREE: Signature = Signature.THREE
FOUR: Signature = Signature.FOUR
