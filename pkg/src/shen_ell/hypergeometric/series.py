"""Gauss Hypergeometric Series."""


from collections.abc import Sequence
import logging
import math
from numbers import Real
from typing import LiteralString

from ..errors import DomainError, NonConvergenceError
from .._util.doc import formula_doc


__all__: Sequence[LiteralString] = 'gauss_2f1', 'MAX_TERMS', 'RELATIVE_CUTOFF'


_LOGGER: logging.Logger = logging.getLogger(__name__)


MAX_TERMS: int = 100_000
RELATIVE_CUTOFF: float = 1e-16


@formula_doc("""
    F(a, b; c; x) = sum_k (a)_k (b)_k / ((c)_k k!) x^k
""")
def gauss_2f1(a: Real, b: Real, c: Real, x: Real, /) -> float:
    """Sum the Gauss hypergeometric series on [0, 1).

    Summation stops once a term drops below 1e-16 of the partial sum.
    All parameters of interest are positive, so every term is positive
    and the truncated tail is the only source of error beyond rounding.
    """
    a, b, c, x = float(a), float(b), float(c), float(x)

    if not (math.isfinite(x) and 0 <= x < 1):
        raise DomainError(f'*** HYPERGEOMETRIC ARGUMENT x={x} NOT IN [0, 1) ***')

    if c <= 0 and c == math.floor(c):
        raise DomainError(f'*** HYPERGEOMETRIC PARAMETER c={c} IS A NON-POSITIVE INTEGER ***')

    partial_sum: float = 1.0
    term: float = 1.0

    for k in range(MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        partial_sum += term

        if abs(term) < RELATIVE_CUTOFF * abs(partial_sum):
            _LOGGER.debug('2F1(%g, %g; %g; %g) summed with %d terms', a, b, c, x, k + 1)
            return partial_sum

    raise NonConvergenceError(f'*** 2F1({a}, {b}; {c}; {x}) '
                              f'NOT CONVERGED WITHIN {MAX_TERMS} TERMS ***')
