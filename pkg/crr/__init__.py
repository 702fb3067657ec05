"""
This package implements the complementary Romanovski–Routh (CRR) polynomials 𝒫_n(b;·) and
the structures built on them: the chain sequence of their recurrence, orthogonal and
para-orthogonal polynomials on the unit circle, the electrostatic description of their zeros,
and generating-function evaluation of extended regular Coulomb wave functions and Bessel
functions. Every identity that ties these together is exposed as a residual that can be checked
numerically.

Modules and components included:
    - :mod:`~crr.poly`: evaluation of 𝒫_n by recurrence and by ₂F₁, coefficients, monic form, ODE residual.
    - :mod:`~crr.chain`: recurrence coefficients, minimal and maximal parameter sequences, γ_n.
    - :mod:`~crr.opuc`: the circle measure dμ^(b), Φ_n, the CD kernel and the para-orthogonal R_n.
    - :mod:`~crr.quadrature`: endpoint-aware quadrature on the circle and the line, orthogonality matrices.
    - :mod:`~crr.coulomb`: ₁F₁, 𝒩, 𝓜, F_L, J_α and the Appell, Weber and sine/cosine expansions.
    - :mod:`~crr.zeros`: zeros of 𝒫_n, the energy functional and its minimizer.
    - :mod:`~crr.cli`: the ``crr`` command line.
    - :mod:`~crr.executor`: async process and thread pools for grid work.

Examples:
    >>> from crr import ParamB, crr_eval_recurrence, crr_zeros
    >>> crr_eval_recurrence(ParamB(1.0), 2, 1.0)
    0.5
    >>> [round(x, 12) for x in crr_zeros(1.0, 2).positions]
    [-0.57735026919, 0.57735026919]

See Also:
    - :mod:`crr.ENVIRONMENT_VARIABLES` for the ``CRR_*`` settings.
    - :mod:`crr.exceptions` for the error hierarchy.
"""

from crr import chain, coulomb, exceptions, opuc, poly, quadrature, zeros
from crr.chain import *
from crr.coulomb import *
from crr.executor import *
from crr.opuc import *
from crr.params import ParamB, SeriesControl
from crr.poly import *
from crr.quadrature import *
from crr.zeros import *
