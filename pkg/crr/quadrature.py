"""
Numerical integration over the unit circle and the real line.

Integrals over θ ∈ (0, 2π) carry the algebraic endpoint singularity (sin²(θ/2))^s
of the measures dμ^(b). The interval is split into three panels:

- [0, a] and [2π − a, 2π] use tanh-sinh (double exponential) nodes, whose clustering at
  the endpoints absorbs the singularity. The distance to the endpoint is computed
  directly, so nodes very close to θ = 0 keep full relative precision. Near θ = 2π the
  integrand only sees the rounded θ, which costs roughly ulp(2π)^(2s+1) in absolute
  accuracy; that is below 1e-12 for s ≥ −0.1 but grows quickly as s → −1/2.
- [a, 2π − a] uses adaptive Gauss–Kronrod panels through :func:`scipy.integrate.quad`,
  run once on the real and once on the imaginary part.

Integrals over the real line go through x = cot(θ/2), dx = dθ/(2 sin²(θ/2)).

Examples:
    >>> res = integrate_circle(lambda t: 1 / (2 * math.pi), 0.0)
    >>> round(res.value.real, 12), res.converged
    (1.0, True)
"""

import cmath
import math
from dataclasses import dataclass
from logging import DEBUG, getLogger

import numpy as np
from scipy import integrate

from crr import config
from crr._typing import *
from crr.chain import gamma_seq
from crr.exceptions import DomainError, QuadratureDidNotConverge
from crr.opuc import MeasureSpec, phi_coeffs, r_coeffs, theta_to_line
from crr.params import ParamB, as_param

if TYPE_CHECKING:
    from crr.executor import AsyncExecutor

logger = getLogger(__name__)

DEFAULT_TOL = 1e-10
"""Absolute tolerance for mass-1 integrals."""

ENDPOINT_PANEL = 0.5 * math.pi
"""Width of each tanh-sinh panel at θ = 0 and θ = 2π."""

MAX_LEVELS = 12
"""Step halvings allowed in a tanh-sinh panel."""

_HALF_PI = 0.5 * math.pi


@final
@dataclass(frozen=True)
class QuadratureResult:
    """
    An integral estimate.

    Examples:
        >>> QuadratureResult(1.0 + 0j, 1e-14, 42).converged
        True
    """

    value: complex
    error_estimate: float
    evaluations: int
    converged: bool = True

    def __post_init__(self) -> None:
        if not self.error_estimate >= 0:
            raise DomainError("error_estimate >= 0", error_estimate=self.error_estimate)
        if self.evaluations < 1:
            raise DomainError("evaluations >= 1", evaluations=self.evaluations)

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
        )


class _Counted:
    """Wraps an integrand, counting calls and coercing results to complex."""

    __slots__ = "fn", "calls"

    def __init__(self, fn: Integrand) -> None:
        self.fn = fn
        self.calls = 0

    def __call__(self, theta: float) -> complex:
        self.calls += 1
        return complex(self.fn(theta))


def _t_max(s: float, tol: float) -> float:
    # node offsets fall like exp(-2u); the neglected tail scales like offset**(2s+1)
    u = (math.log(1.0 / tol) + 10.0) / (2.0 * (2.0 * s + 1.0))
    return math.asinh(min(max(u, 3.0), 350.0) / _HALF_PI)


def _t_bounds(s: float, tol: float) -> Tuple[float, float]:
    """
    Truncation points (t_sing, t_reg) of the tanh-sinh sum.

    The singular side (t < 0) is sized from the exponent s. On the regular side (t > 0) the
    integrand is O(1) and the weights decay like width·e^{−2u}, so it is sized as if s = 0.

    Examples:
        >>> t_sing, t_reg = _t_bounds(3.0, 1e-10)
        >>> t_sing < t_reg
        True
    """
    return _t_max(s, tol), max(_t_max(s, tol), _t_max(0.0, tol))


def _endpoint_panel(
    f: _Counted, width: float, s: float, tol: float, budget: int, at_end: bool
) -> QuadratureResult:
    """
    ∫ over [0, width] (or [2π − width, 2π] if ``at_end``) with tanh-sinh nodes.

    The node offset from the singular endpoint is δ(t) = width/(1 + e^{−2u}), u = (π/2)sinh t.
    """
    t_sing, t_reg = _t_bounds(s, tol)
    start = f.calls

    def node(t: float) -> complex:
        u = _HALF_PI * math.sinh(t)
        if u < -350.0:
            return 0j
        offset = width / (1.0 + math.exp(-2.0 * u))
        theta = 2 * math.pi - offset if at_end else offset
        if not 0.0 < theta < 2 * math.pi:
            return 0j
        weight = width * _HALF_PI * math.cosh(t) / (2.0 * math.cosh(u) ** 2)
        return weight * f(theta)

    h = 1.0
    n_lo, n_hi = int(math.ceil(t_sing / h)), int(math.ceil(t_reg / h))
    total = sum((node(k * h) for k in range(-n_lo, n_hi + 1)), 0j)
    estimate = total * h
    error = math.inf
    for level in range(1, MAX_LEVELS + 1):
        h *= 0.5
        n_lo, n_hi = int(math.ceil(t_sing / h)), int(math.ceil(t_reg / h))
        # only the new (odd) nodes
        total += sum((node(k * h) for k in range(-n_lo + (1 - n_lo % 2), n_hi + 1, 2)), 0j)
        refined = total * h
        error = abs(refined - estimate)
        estimate = refined
        if logger.isEnabledFor(DEBUG):
            logger._log(DEBUG, "tanh-sinh level %s: %r (error %.3g)", (level, estimate, error))
        if error <= tol or f.calls - start >= budget:
            break
    return QuadratureResult(estimate, error, max(1, f.calls - start), error <= tol)


def _interior(f: _Counted, lo: float, hi: float, tol: float, budget: int) -> QuadratureResult:
    start = f.calls
    limit = max(50, budget // 42)
    value, error, converged = 0j, 0.0, True
    for part, unit in ((lambda t: f(t).real, 1.0), (lambda t: f(t).imag, 1j)):
        res, err, info, *flag = integrate.quad(
            part, lo, hi, epsabs=0.5 * tol, epsrel=0.0, limit=limit, full_output=1
        )
        value += unit * res
        error += err
        converged = converged and not flag and err <= 0.5 * tol
    return QuadratureResult(value, error, max(1, f.calls - start), converged)


def _finish(result: QuadratureResult, tol: float, strict: bool, what: str) -> QuadratureResult:
    if result.converged:
        return result
    if strict:
        raise QuadratureDidNotConverge(result, tol)
    logger.warning(
        "%s: error estimate %.3g exceeds tol %.3g after %s evaluations, returning best estimate",
        what,
        result.error_estimate,
        tol,
        result.evaluations,
    )
    return result


def integrate_circle(
    f: Integrand,
    b_exponent: float,
    tol: float = DEFAULT_TOL,
    budget: Optional[int] = None,
    strict: bool = False,
) -> QuadratureResult:
    """
    ∫₀^{2π} f(θ) dθ for f behaving like (sin²(θ/2))^{b_exponent} at the endpoints.

    Args:
        f: The integrand; real or complex valued. Never evaluated at θ ∈ {0, 2π}.
        b_exponent: The endpoint singularity strength s, s > −1/2.
        tol: Absolute tolerance.
        budget: Evaluation budget, :obj:`~crr.config.QUAD_BUDGET` by default.
        strict: Raise instead of returning a flagged result when tol is not met.

    Raises:
        DomainError: If s ≤ −1/2 or tol ≤ 0.
        QuadratureDidNotConverge: If ``strict`` and the budget ran out.
    """
    if not b_exponent > -0.5:
        raise DomainError("b_exponent > -1/2", b_exponent=b_exponent)
    if not tol > 0:
        raise DomainError("tol > 0", tol=tol)
    budget = config.QUAD_BUDGET if budget is None else int(budget)
    counted = _Counted(f)
    share = budget // 3
    result = (
        _endpoint_panel(counted, ENDPOINT_PANEL, b_exponent, tol / 3, share, at_end=False)
        + _interior(counted, ENDPOINT_PANEL, 2 * math.pi - ENDPOINT_PANEL, tol / 3, share)
        + _endpoint_panel(counted, ENDPOINT_PANEL, b_exponent, tol / 3, share, at_end=True)
    )
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "integrate_circle: %s", (result,))
    return _finish(result, tol, strict, "integrate_circle")


def integrate_line(
    f: Callable[[float], Number],
    tol: float = DEFAULT_TOL,
    decay: float = 1.0,
    budget: Optional[int] = None,
    strict: bool = False,
) -> QuadratureResult:
    """
    ∫_{−∞}^{∞} f(x) dx through x = cot(θ/2), dx = dθ/(2 sin²(θ/2)).

    Args:
        f: The integrand.
        tol: Absolute tolerance.
        decay: λ such that f(x) = O((1 + x²)^{−λ}); λ > 1/2. Sets the endpoint
            exponent λ − 1 of the pulled-back integrand.
        budget: Evaluation budget.
        strict: Raise instead of returning a flagged result.

    Examples:
        >>> res = integrate_line(lambda x: 1 / (math.pi * (1 + x * x)))
        >>> round(res.value.real, 12)
        1.0
    """
    if not decay > 0.5:
        raise DomainError("decay > 1/2", decay=decay)

    def pulled_back(theta: float) -> complex:
        s = math.sin(0.5 * theta)
        return f(theta_to_line(theta)) / (2.0 * s * s)

    return integrate_circle(pulled_back, decay - 1.0, tol, budget, strict)


# Matrices and moments


def _ortho_entry(b: ParamB, m: int, n: int, tol: float) -> QuadratureResult:
    # x^m P_n(x) (1+x²)^{-n} = cos^m(θ/2) sin^{n-m}(θ/2) R_n(e^{iθ}) e^{-inθ/2} / 2^n
    spec = MeasureSpec.of(b.shifted(-1))
    rn = r_coeffs(b, n)
    scale = 0.5**n

    def integrand(theta: float) -> complex:
        half = 0.5 * theta
        trig = math.cos(half) ** m * math.sin(half) ** (n - m)
        return trig * scale * rn(cmath.exp(1j * theta)) * cmath.exp(-0.5j * n * theta) * spec.density(theta)

    return integrate_circle(integrand, b.lam - 1, tol)


def _gram_entry(b: ParamB, m: int, n: int, tol: float) -> QuadratureResult:
    spec = MeasureSpec.of(b)
    phi_m, phi_n = phi_coeffs(b, m), phi_coeffs(b, n)

    def integrand(theta: float) -> complex:
        z = cmath.exp(1j * theta)
        return phi_m(z).conjugate() * phi_n(z) * spec.density(theta)

    return integrate_circle(integrand, b.lam, tol)


def _grid(
    fn: Callable[..., QuadratureResult],
    jobs: List[Tuple[Any, ...]],
    executor: Optional["AsyncExecutor"],
) -> List[QuadratureResult]:
    from crr.executor import evaluate_grid

    return evaluate_grid(fn, jobs, executor)


def _report(results: Iterable[QuadratureResult], tol: float, what: str) -> None:
    bad = [r for r in results if not r.converged]
    if bad:
        logger.warning("%s: %s of the integrals missed tol %.3g", what, len(bad), tol)


def orthogonality_matrix(
    b: Union[ParamB, Number],
    n_max: int,
    tol: float = DEFAULT_TOL,
    executor: Optional["AsyncExecutor"] = None,
) -> RealArray:
    """
    M[m, n] = ∫ x^m 𝒫_n(b;x)/(1 + x²)^n ν^(λ,η)(x) dx for 0 ≤ m ≤ n ≤ n_max.

    The diagonal reproduces :func:`~crr.chain.gamma_seq`, everything above it vanishes.
    Entries below the diagonal are left at 0. Each integral is computed on the circle,
    where ν dx becomes dμ^(b−1).

    Raises:
        DomainError: If λ ≤ 1/2.
    """
    b = as_param(b)
    b.require_orthogonality()
    if n_max < 0:
        raise DomainError("n_max >= 0", n_max=n_max)
    jobs = [(b, m, n, tol) for n in range(n_max + 1) for m in range(n + 1)]
    results = _grid(_ortho_entry, jobs, executor)
    _report(results, tol, "orthogonality_matrix")
    out = np.zeros((n_max + 1, n_max + 1))
    for (_, m, n, _), res in zip(jobs, results):
        out[m, n] = res.value.real
    return out


def opuc_gram_matrix(
    b: Union[ParamB, Number],
    n_max: int,
    tol: float = DEFAULT_TOL,
    executor: Optional["AsyncExecutor"] = None,
) -> ComplexArray:
    """G[m, n] = ∫ conj(Φ_m) Φ_n dμ^(b), diagonal with entries ‖Φ_n‖² in exact arithmetic."""
    b = as_param(b)
    b.require_circle()
    jobs = [(b, m, n, tol) for m in range(n_max + 1) for n in range(n_max + 1)]
    results = _grid(_gram_entry, jobs, executor)
    _report(results, tol, "opuc_gram_matrix")
    out = np.zeros((n_max + 1, n_max + 1), dtype=np.complex128)
    for (_, m, n, _), res in zip(jobs, results):
        out[m, n] = res.value
    return out


def moment(b: Union[ParamB, Number], k: int, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """
    μ_k = ∫ ζ^{−k} dμ^(b)(ζ) by quadrature.

    Examples:
        >>> round(abs(moment(1.0, 0).value), 10)
        1.0
    """
    b = as_param(b)
    spec = MeasureSpec.of(b)
    return integrate_circle(lambda t: cmath.exp(-1j * k * t) * spec.density(t), b.lam, tol)


def gamma_mismatch(b: Union[ParamB, Number], matrix: RealArray) -> float:
    """Largest |M[n, n] − γ_n| over the diagonal of an :func:`orthogonality_matrix` result."""
    b = as_param(b)
    n_max = matrix.shape[0] - 1
    gamma = gamma_seq(b.lam, n_max)
    return max(abs(matrix[n, n] - gamma[n]) for n in range(n_max + 1))


def off_diagonal_max(matrix: RealArray) -> float:
    """Largest |M[m, n]| with m < n."""
    upper = np.triu(np.abs(matrix), k=1)
    return float(upper.max()) if upper.size else 0.0


__all__ = [
    "QuadratureResult",
    "integrate_circle",
    "integrate_line",
    "orthogonality_matrix",
    "opuc_gram_matrix",
    "moment",
    "gamma_mismatch",
    "off_diagonal_max",
]
