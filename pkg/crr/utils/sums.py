"""
Forward-product Pochhammer symbols and term-by-term hypergeometric sums.

Sums are first run in double precision while tracking Σ|t_k|. When the ratio
Σ|t_k| / |Σ t_k| says more digits cancel than double precision can spare,
the same term recurrence is rerun in :mod:`mpmath` with enough extra digits
to absorb the cancellation. Callers take the real part when the result is
known to be real.
"""

import math
from logging import DEBUG, getLogger

import mpmath

from crr._typing import *
from crr.exceptions import DomainError

logger = getLogger(__name__)

DOUBLE_DIGITS = 16
"""Decimal digits carried by a float64, rounded up."""

MAX_LOST_DIGITS = 3
"""Cancellation (in decimal digits) tolerated before a sum is redone in extended precision."""


def csum(terms: Iterable[Number]) -> complex:
    """
    Compensated sum of complex terms.

    Real and imaginary parts go through :func:`math.fsum` separately, so the
    result is the correctly rounded sum of the (already rounded) terms.
    """
    re: List[float] = []
    im: List[float] = []
    for t in terms:
        t = complex(t)
        re.append(t.real)
        im.append(t.imag)
    return complex(math.fsum(re), math.fsum(im))


def lost_digits(magnitude: float, total: complex) -> int:
    """Decimal digits lost when terms of absolute sum ``magnitude`` add up to ``total``."""
    if magnitude == 0.0:
        return 0
    scale = max(abs(total), math.ulp(1.0) * magnitude, 1e-300)
    return max(0, math.ceil(math.log10(magnitude / scale)))


def pochhammer(z: Number, n: int) -> Number:
    """
    Rising factorial (z)_n = z(z+1)…(z+n−1), by forward product.

    Examples:
        >>> pochhammer(2, 3)
        24
        >>> pochhammer(1j, 0)
        1
    """
    if n < 0:
        raise DomainError("n >= 0", n=n)
    out: Number = 1
    for k in range(n):
        out *= z + k
    return out


def _hyp2f1_terms(n: int, a: Any, c: Any, z: Any, one: Any) -> Iterator[Any]:
    term = one
    yield term
    for k in range(n):
        denom = (c + k) * (k + 1)
        if denom == 0:
            raise DomainError("c not a non-positive integer", c=c)
        term = term * (k - n) * (a + k) * z / denom
        yield term


def hyp2f1_terminating(n: int, a: Number, c: Number, z: Number, guard_digits: int = 4) -> complex:
    """
    The polynomial ₂F₁(−n, a; c; z), summed for k = 0..n with the term ratio
    t_{k+1}/t_k = (k−n)(a+k) z / ((c+k)(k+1)).

    ``c`` may not be a non-positive integer ≥ −n+1 (a pole hit before termination).

    Args:
        n: Degree, n ≥ 0.
        a, c, z: Remaining parameters and argument, real or complex.
        guard_digits: Extra digits on top of the detected cancellation when the sum is redone.

    Examples:
        >>> hyp2f1_terminating(0, 2.5, 3.0, 7.0)
        (1+0j)
        >>> hyp2f1_terminating(1, 2.0, 4.0, 0.5)
        (0.75+0j)
    """
    if n < 0:
        raise DomainError("n >= 0", n=n)
    terms = list(_hyp2f1_terms(n, complex(a), complex(c), complex(z), complex(1.0)))
    total = csum(terms)
    lost = lost_digits(math.fsum(abs(t) for t in terms), total)
    if lost <= MAX_LOST_DIGITS:
        return total
    dps = DOUBLE_DIGITS + lost + guard_digits
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "2F1(-%s, %s; %s; %s): %s digits cancel, redoing at dps=%s", (n, a, c, z, lost, dps))
    with mpmath.workdps(dps):
        precise = mpmath.fsum(
            _hyp2f1_terms(n, mpmath.mpc(a), mpmath.mpc(c), mpmath.mpc(z), mpmath.mpc(1))
        )
        return complex(precise)
