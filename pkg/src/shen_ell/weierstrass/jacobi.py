"""Jacobi Elliptic Functions by the Arithmetic-Geometric Mean."""


from collections.abc import Sequence
import logging
import math
from typing import LiteralString

from .._util.doc import formula_doc


__all__: Sequence[LiteralString] = ('agm',
                                    'complete_elliptic_k',
                                    'ellipj_real',
                                    'ellipj')


_LOGGER: logging.Logger = logging.getLogger(__name__)


_MAX_STEPS: int = 32


def agm(a: float, b: float, /) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    for _ in range(_MAX_STEPS):
        if abs(a - b) <= 4 * math.ulp(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


@formula_doc("""
    K(m) = pi / (2 AGM(1, sqrt(1 - m)))
""")
def complete_elliptic_k(m: float, /) -> float:
    """Complete elliptic integral of the first kind, parameter m in [0, 1)."""
    return 0.5 * math.pi / agm(1.0, math.sqrt(1 - m))


def ellipj_real(u: float, m: float, /) -> tuple[float, float, float]:
    """Return sn, cn, dn of real u for parameter m in [0, 1).

    Descending Landen transformation: run the AGM of (1, sqrt(1 - m))
    forwards, then recover the amplitude backwards.
    """
    if m == 0:
        return math.sin(u), math.cos(u), 1.0

    a: list[float] = [1.0]
    c: list[float] = [math.sqrt(m)]
    b: float = math.sqrt(1 - m)
    two_n: float = 1.0

    while abs(c[-1]) > 4 * math.ulp(a[-1]):
        if len(a) > _MAX_STEPS:
            _LOGGER.warning('Landen sequence for m=%r not converged', m)
            break
        a_i: float = a[-1]
        c.append(0.5 * (a_i - b))
        a.append(0.5 * (a_i + b))
        b = math.sqrt(a_i * b)
        two_n *= 2

    phi: float = two_n * a[-1] * u
    for i in range(len(a) - 1, 0, -1):
        t: float = max(-1.0, min(1.0, c[i] * math.sin(phi) / a[i]))
        phi = 0.5 * (math.asin(t) + phi)

    sn: float = math.sin(phi)
    return sn, math.cos(phi), math.sqrt(1 - m * sn * sn)


@formula_doc("""
    sn(x + iy | m) = (s d1 + i c d s1 c1) / (c1^2 + m s^2 s1^2)
    cn(x + iy | m) = (c c1 - i s d s1 d1) / (c1^2 + m s^2 s1^2)
    dn(x + iy | m) = (d c1 d1 - i m s c s1) / (c1^2 + m s^2 s1^2)
    with s, c, d at (x | m) and s1, c1, d1 at (y | 1 - m)
""")
def ellipj(z: complex, m: float, /) -> tuple[complex, complex, complex]:
    """Return sn, cn, dn of complex z for parameter m in (0, 1)."""
    z = complex(z)

    s, c, d = ellipj_real(z.real, m)
    if not z.imag:
        return complex(s), complex(c), complex(d)

    s1, c1, d1 = ellipj_real(z.imag, 1 - m)
    denominator: float = c1 * c1 + m * s * s * s1 * s1

    return (complex(s * d1, c * d * s1 * c1) / denominator,
            complex(c * c1, -s * d * s1 * d1) / denominator,
            complex(d * c1 * d1, -m * s * c * s1) / denominator)
