"""Weierstrass Invariants & Cubic Roots."""


from collections.abc import Sequence
from dataclasses import dataclass, field
import logging
import math
from numbers import Real
from typing import LiteralString, Optional, Self

from ..errors import DegenerateLatticeError
from .._util.doc import formula_doc


__all__: Sequence[LiteralString] = 'Invariants', 'CubicRoots', 'cubic_roots'


_LOGGER: logging.Logger = logging.getLogger(__name__)


# relative discriminant below which a lattice counts as degenerate
DEGENERACY_TOL: float = 1e-12


@dataclass(frozen=True)
class Invariants:
    """Quadrinvariant g2 and cubinvariant g3 of a Weierstrass function.

    Exact rationals (`fractions.Fraction`) are accepted and kept exact.
    A discriminant known in closed form may be passed in; it is then
    trusted to its sign instead of being judged against rounding noise.
    """

    g2: Real
    g3: Real
    discriminant: Optional[Real] = field(default=None, compare=False, kw_only=True)
    closed_form: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self: Self, /) -> None:
        """Compute the discriminant unless given."""
        assert isinstance(self.g2, Real), TypeError(f'*** g2 {self.g2!r} NOT REAL ***')
        assert isinstance(self.g3, Real), TypeError(f'*** g3 {self.g3!r} NOT REAL ***')

        object.__setattr__(self, 'closed_form', self.discriminant is not None)
        if self.discriminant is None:
            object.__setattr__(self, 'discriminant', self.g2 ** 3 - 27 * self.g3 ** 2)

    @property
    def is_degenerate(self: Self, /) -> bool:
        """Whether the discriminant is non-positive (to relative tolerance unless closed-form)."""
        if self.closed_form:
            return self.discriminant <= 0

        scale = abs(self.g2) ** 3 + 27 * self.g3 ** 2
        return self.discriminant <= DEGENERACY_TOL * scale

    def cubic(self: Self, t: complex, /) -> complex:
        """Evaluate 4t^3 - g2 t - g3."""
        return 4 * t ** 3 - self.g2 * t - self.g3


@dataclass(frozen=True)
class CubicRoots:
    """Real roots e1 > e2 > e3 of 4t^3 - g2 t - g3."""

    e1: float
    e2: float
    e3: float

    def __iter__(self: Self, /):
        """Iterate in descending order."""
        return iter((self.e1, self.e2, self.e3))


@formula_doc("""
    4t^3 - g2 t - g3 = 4 (t - e1)(t - e2)(t - e3),
    t_k = sqrt(g2/3) cos(theta - 2 pi k / 3),  3 theta = atan2(sqrt(Delta), 3 sqrt(3) g3)
""")
def cubic_roots(inv: Invariants, /) -> CubicRoots:
    """Solve the invariant cubic by the trigonometric method.

    Each root gets one Newton polish on the undepressed cubic, except when
    the discriminant is closed-form: the angle is then exact to rounding and
    a polish against rounded coefficients would only blur nearly equal roots.
    """
    if inv.is_degenerate:
        raise DegenerateLatticeError(f'*** DISCRIMINANT {float(inv.discriminant):.6g} '
                                     f'OF g2={inv.g2}, g3={inv.g3} NOT POSITIVE ***')

    g2, g3 = float(inv.g2), float(inv.g3)

    radius: float = math.sqrt(g2 / 3)
    theta: float = math.atan2(math.sqrt(float(inv.discriminant)), 3 * math.sqrt(3) * g3) / 3

    roots: list[float] = []
    for k in range(3):
        t: float = radius * math.cos(theta - 2 * math.pi * k / 3)
        slope: float = 12 * t ** 2 - g2
        if slope and not inv.closed_form:
            t -= (4 * t ** 3 - g2 * t - g3) / slope
        roots.append(t)

    e1, e2, e3 = sorted(roots, reverse=True)
    _LOGGER.debug('roots of g2=%g, g3=%g: %r, %r, %r', g2, g3, e1, e2, e3)

    return CubicRoots(e1, e2, e3)
