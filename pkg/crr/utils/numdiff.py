"""
Fourth-order central differences for first and second derivatives.

Step sizes follow the usual balance between truncation and rounding:
h = eps^(1/5)·scale for the first derivative and h = eps^(1/6)·scale for the
second, both with five-point stencils.
"""

import math

from crr._typing import *

_EPS = math.ulp(1.0)
H_FIRST = _EPS ** (1 / 5)
H_SECOND = _EPS ** (1 / 6)


def _step(x: float, base: float, h: Optional[float]) -> float:
    return h if h is not None else base * max(1.0, abs(x))


def central_first(f: Callable[[float], float], x: float, h: Optional[float] = None) -> float:
    """f′(x) ≈ (f(x−2h) − 8f(x−h) + 8f(x+h) − f(x+2h)) / 12h."""
    h = _step(x, H_FIRST, h)
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def central_second(f: Callable[[float], float], x: float, h: Optional[float] = None) -> float:
    """f″(x) ≈ (−f(x−2h) + 16f(x−h) − 30f(x) + 16f(x+h) − f(x+2h)) / 12h²."""
    h = _step(x, H_SECOND, h)
    return (
        -f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)
    ) / (12 * h * h)
