"""Elliptic Modulus."""


from collections.abc import Sequence
from dataclasses import dataclass, field
import math
from typing import LiteralString, Optional, Self

from ..errors import DomainError
from .._util.type import Num


__all__: Sequence[LiteralString] = ('Modulus',)


@dataclass(frozen=True)
class Modulus:
    """Modulus kappa in (0, 1) with complementary modulus lambda.

    `kappa2` is stored alongside `kappa` so that a modulus built from its
    square (as the command line does) keeps that square exactly.
    """

    kappa: float
    kappa2: Optional[float] = None
    lam: float = field(init=False)
    lam2: float = field(init=False)

    def __post_init__(self: Self, /) -> None:
        """Validate and derive the complementary modulus."""
        assert isinstance(self.kappa, Num), \
            TypeError(f'*** kappa {self.kappa} NEITHER A FLOAT NOR AN INT ***')

        if not (math.isfinite(self.kappa) and 0 < self.kappa < 1):
            raise DomainError(f'*** MODULUS kappa={self.kappa} NOT IN (0, 1) ***')

        kappa2: float = self.kappa * self.kappa if self.kappa2 is None else float(self.kappa2)

        if not 0 < kappa2 < 1:
            raise DomainError(f'*** kappa^2={kappa2} NOT IN (0, 1) ***')

        assert math.isclose(kappa2, self.kappa * self.kappa, rel_tol=1e-12), \
            ValueError(f'*** kappa^2={kappa2} INCONSISTENT WITH kappa={self.kappa} ***')

        lam2: float = 1 - kappa2

        object.__setattr__(self, 'kappa2', kappa2)
        object.__setattr__(self, 'lam2', lam2)
        object.__setattr__(self, 'lam', math.sqrt(lam2))

    @classmethod
    def from_kappa2(cls, kappa2: float, /) -> Self:
        """Build a modulus from its square."""
        assert isinstance(kappa2, Num), \
            TypeError(f'*** kappa2 {kappa2} NEITHER A FLOAT NOR AN INT ***')

        if not (math.isfinite(kappa2) and 0 < kappa2 < 1):
            raise DomainError(f'*** kappa^2={kappa2} NOT IN (0, 1) ***')

        return cls(math.sqrt(kappa2), float(kappa2))

    def complementary(self: Self, /) -> Self:
        """Return the modulus with kappa and lambda swapped."""
        return type(self)(self.lam, self.lam2)
