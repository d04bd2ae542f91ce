"""Exceptions."""


from collections.abc import Sequence
from typing import LiteralString


__all__: Sequence[LiteralString] = ('ShenEllError',
                                    'DomainError',
                                    'NonConvergenceError',
                                    'DegenerateLatticeError',
                                    'PoleError')


class ShenEllError(Exception):
    """Base class of all errors raised by this package."""


class DomainError(ShenEllError, ValueError):
    """Argument outside the domain of an operation."""


class NonConvergenceError(ShenEllError, ArithmeticError):
    """Iteration budget exhausted before reaching tolerance."""


class DegenerateLatticeError(ShenEllError, ArithmeticError):
    """Invariants with non-positive discriminant."""


class PoleError(ShenEllError, ZeroDivisionError):
    """Evaluation at (or numerically too close to) a pole."""
