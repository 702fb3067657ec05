"""|Γ(z)| and ln|Γ(z)| for complex z, through :func:`scipy.special.loggamma`."""

import math

from scipy import special

from crr._typing import *
from crr.exceptions import PoleError


def _check_pole(z: complex) -> None:
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise PoleError("z not a non-positive integer", z=z)


def log_abs_gamma(z: Number) -> float:
    """
    ln|Γ(z)|, the real part of the principal complex log-gamma.

    Raises:
        PoleError: If z is a non-positive integer.
    """
    z = complex(z)
    _check_pole(z)
    return float(special.loggamma(z).real)


def complex_abs_gamma(z: Number) -> float:
    """
    |Γ(z)| for complex z.

    Raises:
        PoleError: If z is a non-positive integer.

    Examples:
        >>> round(complex_abs_gamma(5), 10)
        24.0
        >>> round(complex_abs_gamma(1 + 1j), 6)
        0.521564
    """
    return math.exp(log_abs_gamma(z))
