"""Adaptive Gauss-Kronrod Quadrature."""


from collections.abc import Callable, Sequence
import heapq
import logging
import math
from typing import LiteralString, NamedTuple

import numpy as np
from numpy.typing import NDArray


__all__: Sequence[LiteralString] = 'QuadratureResult', 'integrate', 'integrate_panel'


_LOGGER: logging.Logger = logging.getLogger(__name__)


# G7/K15 nodes & weights (positive half, outermost first, centre last)
_XGK: NDArray[np.float64] = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])

_WGK: NDArray[np.float64] = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])

# Gauss weights sit on every other Kronrod node
_WG: NDArray[np.float64] = np.array([
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327,
])

_NODES: NDArray[np.float64] = np.concatenate((-_XGK[:-1], _XGK[::-1]))
_KRONROD_WEIGHTS: NDArray[np.float64] = np.concatenate((_WGK[:-1], _WGK[::-1]))
_GAUSS_WEIGHTS: NDArray[np.float64] = np.concatenate((_WG[:-1], _WG[::-1]))

_EPS: float = float(np.finfo(float).eps)


Integrand = Callable[[NDArray[np.float64]], NDArray[np.float64]]


class QuadratureResult(NamedTuple):
    """Integral value with its error estimate and the number of panels used."""

    value: float
    error: float
    panels: int


def integrate_panel(f: Integrand, a: float, b: float, /) -> tuple[float, float]:
    """Integrate over one panel with the 15-point Kronrod rule.

    The integrand is called once with all 15 nodes as a NumPy array.
    Returns the Kronrod value and the QUADPACK-style error estimate.
    """
    centre: float = 0.5 * (a + b)
    half: float = 0.5 * (b - a)

    fx: NDArray[np.float64] = np.asarray(f(centre + half * _NODES), dtype=float)

    result_kronrod: float = half * float(_KRONROD_WEIGHTS @ fx)
    result_gauss: float = half * float(_GAUSS_WEIGHTS @ fx)

    result_abs: float = abs(half) * float(_KRONROD_WEIGHTS @ np.abs(fx))
    mean: float = result_kronrod / (2 * half) if half else 0.0
    result_asc: float = abs(half) * float(_KRONROD_WEIGHTS @ np.abs(fx - mean))

    error: float = abs(result_kronrod - result_gauss)
    if result_asc and error:
        error = result_asc * min(1.0, (200 * error / result_asc) ** 1.5)
    if result_abs > np.finfo(float).tiny / (50 * _EPS):
        error = max(50 * _EPS * result_abs, error)

    return result_kronrod, error


def integrate(f: Integrand, a: float, b: float, /, *,
              abs_tol: float = 1e-12, rel_tol: float = 0.0,
              limit: int = 500) -> QuadratureResult:
    """Integrate `f` over `[a, b]` by globally adaptive bisection.

    The panel with the largest error estimate is halved until the summed
    error estimate is below `max(abs_tol, rel_tol * |integral|)`.
    Reversed limits give the negated integral.
    """
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    if b < a:
        value, error, panels = integrate(f, b, a,
                                         abs_tol=abs_tol, rel_tol=rel_tol, limit=limit)
        return QuadratureResult(-value, error, panels)

    value, error = integrate_panel(f, a, b)

    # max-heap on error estimate: (-error, left, right, value)
    heap: list[tuple[float, float, float, float]] = [(-error, a, b, value)]

    while True:
        total: float = math.fsum(item[3] for item in heap)
        total_error: float = math.fsum(-item[0] for item in heap)

        if total_error <= max(abs_tol, rel_tol * abs(total)):
            _LOGGER.debug('quadrature on [%g, %g] converged with %d panels', a, b, len(heap))
            return QuadratureResult(total, total_error, len(heap))

        if len(heap) >= limit:
            _LOGGER.warning('quadrature on [%g, %g] hit the %d-panel limit; '
                            'error estimate %.3g', a, b, limit, total_error)
            return QuadratureResult(total, total_error, len(heap))

        worst: tuple[float, float, float, float] = heapq.heappop(heap)
        _, left, right, _ = worst
        mid: float = 0.5 * (left + right)

        if not left < mid < right:
            _LOGGER.warning('quadrature on [%g, %g] cannot bisect further; '
                            'error estimate %.3g', a, b, total_error)
            heapq.heappush(heap, worst)
            return QuadratureResult(total, total_error, len(heap))

        for lo, hi in ((left, mid), (mid, right)):
            panel_value, panel_error = integrate_panel(f, lo, hi)
            heapq.heappush(heap, (-panel_error, lo, hi, panel_value))
