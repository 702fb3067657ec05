"""
Parameter records shared by every numerical module.

:class:`ParamB` carries the complex parameter b = λ + iη that indexes the CRR
polynomials, the circle measures and the Coulomb-type functions.
:class:`SeriesControl` is the truncation policy for infinite series.
"""

import math
from dataclasses import dataclass, field

from crr import ENVIRONMENT_VARIABLES as ENVS
from crr._typing import *
from crr.exceptions import DomainError


@final
@dataclass(frozen=True)
class ParamB:
    """
    The complex parameter b = λ + iη, split into its real parts.

    ``lambda`` is a Python keyword, so the real part lives on :attr:`lam`.

    Examples:
        >>> b = ParamB(1.0, 2.0)
        >>> b.b
        (1+2j)
        >>> ParamB.from_complex(0.7 - 3j).eta
        -3.0
    """

    lam: float
    """λ = Re b."""

    eta: float = 0.0
    """η = Im b."""

    def __post_init__(self) -> None:
        lam, eta = float(self.lam), float(self.eta)
        if not (math.isfinite(lam) and math.isfinite(eta)):
            raise DomainError("b finite", lam=self.lam, eta=self.eta)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "eta", eta)

    @classmethod
    def from_complex(cls, b: Number) -> Self:
        b = complex(b)
        return cls(b.real, b.imag)

    @property
    def b(self) -> complex:
        return complex(self.lam, self.eta)

    @property
    def conj(self) -> complex:
        """b̄ = λ − iη."""
        return complex(self.lam, -self.eta)

    def conjugate(self) -> "ParamB":
        return ParamB(self.lam, -self.eta)

    def shifted(self, k: Real) -> "ParamB":
        """b + k for real k; shifts λ only."""
        return ParamB(self.lam + k, self.eta)

    def require_positive(self) -> None:
        """Checks λ > 0, the standing hypothesis of every polynomial and Coulomb formula."""
        if not self.lam > 0:
            raise DomainError("lambda > 0", lam=self.lam)

    def require_orthogonality(self) -> None:
        """Checks λ > 1/2, needed wherever the weight ν^(λ,η) is integrated."""
        if not self.lam > 0.5:
            raise DomainError("lambda > 1/2", lam=self.lam)

    def require_circle(self) -> None:
        """Checks λ > −1/2, the range in which Φ_n(b;·) and dμ^(b) exist."""
        if not self.lam > -0.5:
            raise DomainError("lambda > -1/2", lam=self.lam)

    def __str__(self) -> str:
        return f"{self.b}"


def as_param(b: Union[ParamB, Number]) -> ParamB:
    """Accepts a :class:`ParamB` or any real/complex number."""
    return b if isinstance(b, ParamB) else ParamB.from_complex(b)


@final
@dataclass(frozen=True)
class SeriesControl:
    """
    Truncation and tolerance policy for infinite series (₁F₁ and the generating functions).

    Defaults come from the ``CRR_*`` environment variables, see :mod:`crr.ENVIRONMENT_VARIABLES`.

    Examples:
        >>> SeriesControl(rel_tol=1e-12).max_terms
        10000
    """

    rel_tol: float = field(default_factory=lambda: float(ENVS.REL_TOL))
    """Stop once |term| ≤ rel_tol·|partial sum| for 3 consecutive terms."""

    abs_floor: float = 1e-300
    """Absolute floor for the stopping test, so sums that converge to 0 stop too."""

    max_terms: int = field(default_factory=lambda: int(ENVS.MAX_TERMS))
    """Hard cap on the number of terms."""

    guard_digits: int = field(default_factory=lambda: int(ENVS.GUARD_DIGITS))
    """Extra working digits for series summed in extended precision."""

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError("rel_tol > 0", rel_tol=self.rel_tol)
        if not self.abs_floor >= 0:
            raise DomainError("abs_floor >= 0", abs_floor=self.abs_floor)
        if self.max_terms < 1:
            raise DomainError("max_terms >= 1", max_terms=self.max_terms)
        if self.guard_digits < 0:
            raise DomainError("guard_digits >= 0", guard_digits=self.guard_digits)

    def with_max_terms(self, max_terms: int) -> "SeriesControl":
        return SeriesControl(self.rel_tol, self.abs_floor, max_terms, self.guard_digits)


def is_close_to_real(z: complex, tol: float) -> bool:
    """True when |Im z| ≤ tol·max(1, |z|)."""
    return abs(z.imag) <= tol * max(1.0, abs(z))

