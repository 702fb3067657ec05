"""
Small numerical building blocks shared by the polynomial, circle and Coulomb modules:
Pochhammer symbols, terminating ₂F₁ sums, compensated complex summation,
complex |Γ| and finite-difference derivatives.
"""

import math

from crr.utils.gammafn import complex_abs_gamma, log_abs_gamma
from crr.utils.numdiff import central_first, central_second
from crr.utils.sums import csum, hyp2f1_terminating, lost_digits, pochhammer


__all__ = [
    "csum",
    "lost_digits",
    "pochhammer",
    "hyp2f1_terminating",
    "complex_abs_gamma",
    "log_abs_gamma",
    "central_first",
    "central_second",
    "EPS",
]

EPS = math.ulp(1.0)
"""Machine epsilon for float64."""
