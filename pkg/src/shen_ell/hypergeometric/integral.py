"""Incomplete Hypergeometric Integral & Its Inverse."""


from collections.abc import Sequence
from functools import lru_cache
import logging
import math
from typing import LiteralString

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import DomainError
from .._util.doc import formula_doc
from .._util.quadrature import integrate

from .modulus import Modulus
from .series import gauss_2f1
from .signature import Signature


__all__: Sequence[LiteralString] = ('integrand',
                                    'incomplete_integral',
                                    'complete_K',
                                    'invert_phi',
                                    'QUADRATURE_TOL')


_LOGGER: logging.Logger = logging.getLogger(__name__)


QUADRATURE_TOL: float = 1e-12

_NEWTON_TOL: float = 1e-13
_MAX_NEWTON_STEPS: int = 100

# half-width of the Newton bracket for the reduced argument
_BRACKET: float = 0.5 * math.pi + 1e-3


@formula_doc("""
    F(a, b; 1/2; kappa^2 sin^2 t) = cos((2a - 1) theta) / cos(theta),
    sin(theta) = kappa sin(t)
""")
def integrand(sig: Signature, m: Modulus, t: ArrayLike, /) -> float | NDArray[np.float64]:
    """Evaluate the integrand of the incomplete hypergeometric integral.

    Both signatures have b = 1 - a, for which the series has the elementary
    closed form above; `gauss_2f1` is the reference it is checked against.
    Arrays are evaluated elementwise.
    """
    s: NDArray[np.float64] = m.kappa * np.sin(t)
    value = np.cos((2 * float(sig.a) - 1) * np.arcsin(s)) / np.sqrt((1 - s) * (1 + s))

    return float(value) if np.ndim(value) == 0 else value


def _partial_integral(sig: Signature, m: Modulus, t: float, /) -> float:
    return integrate(lambda x: integrand(sig, m, x), 0.0, t, abs_tol=QUADRATURE_TOL).value


@lru_cache(maxsize=256)
def _quarter_period(sig: Signature, m: Modulus, /) -> float:
    """Quadrature value of the integral over [0, pi/2]."""
    return _partial_integral(sig, m, 0.5 * math.pi)


@formula_doc("""
    u(T) = int_0^T F(a, b; 1/2; kappa^2 sin^2 t) dt,  u(T + pi) = u(T) + 2K
""")
def incomplete_integral(sig: Signature, m: Modulus, T: float, /) -> float:
    """Integrate Shen's integrand from 0 to T.

    T is reduced to T = n pi + r with r in [-pi/2, pi/2); only the
    remainder is integrated and each full half-turn contributes 2K.
    """
    if not math.isfinite(T):
        raise DomainError(f'*** UPPER LIMIT T={T} NOT FINITE ***')

    n: int = math.floor(T / math.pi + 0.5)
    r: float = T - n * math.pi

    return 2 * n * _quarter_period(sig, m) + _partial_integral(sig, m, r)


@formula_doc("""
    K = int_0^(pi/2) F(a, b; 1/2; kappa^2 sin^2 t) dt = pi/2 F(a, b; 1; kappa^2)
""")
def complete_K(sig: Signature, m: Modulus, /) -> float:
    """Return the complete value K."""
    return 0.5 * math.pi * gauss_2f1(sig.a, sig.b, 1, m.kappa2)


@formula_doc("""
    u(phi(u)) = u,  phi(u + 2K) = phi(u) + pi
""")
def invert_phi(sig: Signature, m: Modulus, u: float, /) -> float:
    """Invert the incomplete integral.

    u is reduced modulo 2K; the reduced equation is solved by Newton's
    method (derivative = integrand >= 1) inside a shrinking bracket, with
    a bisection step whenever Newton would leave the bracket.
    """
    if not math.isfinite(u):
        raise DomainError(f'*** ARGUMENT u={u} NOT FINITE ***')

    quarter: float = _quarter_period(sig, m)
    n: int = math.floor(u / (2 * quarter) + 0.5)
    reduced: float = u - 2 * n * quarter

    lo, hi = -_BRACKET, _BRACKET
    t: float = reduced * math.pi / (2 * quarter)

    for step in range(_MAX_NEWTON_STEPS):
        residual: float = _partial_integral(sig, m, t) - reduced

        if abs(residual) <= _NEWTON_TOL:
            _LOGGER.debug('phi(%g) converged after %d Newton steps', u, step)
            return t + n * math.pi

        if residual > 0:
            hi = t
        else:
            lo = t

        t_next: float = t - residual / integrand(sig, m, t)

        if not lo < t_next < hi:
            _LOGGER.debug('phi(%g): Newton step left [%g, %g], bisecting', u, lo, hi)
            t_next = 0.5 * (lo + hi)

        if abs(t_next - t) <= 4 * math.ulp(max(1.0, abs(t))):
            return t_next + n * math.pi

        t = t_next

    _LOGGER.warning('phi(%g) not converged after %d steps; last iterate %r',
                    u, _MAX_NEWTON_STEPS, t)
    return t + n * math.pi
