"""
Orthogonal polynomials on the unit circle attached to the CRR family.

The probability measure

    dμ^(b)(e^{iθ}) = κ(b) e^{(π−θ)η} (sin²(θ/2))^λ dθ,   κ(b) = 4^λ |Γ(b+1)|² / (Γ(2λ+1) 2π),

has a Fisher–Hartwig type singularity at θ = 0 and exists for λ > −1/2. Its monic
orthogonal polynomials are

    Φ_n(b;z) = ((2λ+1)_n/(b+1)_n) ₂F₁(−n, b+1; 2λ+1; 1−z),   ‖Φ_n‖² = (2λ+1)_n n!/|(b+1)_n|².

The Cayley map ζ = (x+i)/(x−i) sends the real line onto the circle minus ζ = 1 and turns
𝒫_n(b;x) into R_n(b;ζ) = 2ⁿ/(x−i)ⁿ · 𝒫_n(b;x). R_n is para-orthogonal for μ^(b), so its
zeros lie on |z| = 1, and for λ > 1/2 it is a kernel polynomial of μ^(b−1) at w = 1.

Examples:
    >>> cayley_to_circle(1.0)
    1j
    >>> opuc_norm_sq(ParamB(1.0), 1)
    0.75
"""

import cmath
import functools
import math
from dataclasses import dataclass
from logging import DEBUG, getLogger

import numpy as np
from numpy.polynomial import polynomial as npoly

from crr._typing import *
from crr.chain import c_coeff, d_coeff, maximal_params
from crr.exceptions import DomainError, MethodDisagreement, PoleError
from crr.params import ParamB, as_param
from crr.poly import DensePolynomial
from crr.utils import hyp2f1_terminating, log_abs_gamma, pochhammer

if TYPE_CHECKING:
    from crr.quadrature import QuadratureResult

logger = getLogger(__name__)

UNIT_CIRCLE_TOL = 1e-12
"""How far from |ζ| = 1 a point handed to :func:`cayley_to_line` may lie."""

SINGULAR_TOL = 1e-14
"""Smallest |conj(w)z − 1| the closed Christoffel–Darboux formula accepts."""

METHOD_AGREEMENT_TOL = 1e-10
"""Relative tolerance within which the three constructions of R_n must agree."""


@final
class ComplexPolynomial(DensePolynomial):
    """Complex coefficients. Used for Φ_n(b;·), Φ*_n(b;·), R_n(b;·) and kernels."""

    dtype = np.complex128

    def star(self, n: Optional[int] = None) -> "ComplexPolynomial":
        """
        The reversed polynomial p*(z) = zⁿ conj(p(1/z̄)) in degree ``n`` (default: own degree).

        Examples:
            >>> ComplexPolynomial([1]).star(1)
            ComplexPolynomial([0j, (1+0j)])
        """
        n = self.degree if n is None else n
        if n < self.degree:
            raise DomainError("n >= degree", n=n, degree=self.degree)
        padded = np.zeros(n + 1, dtype=np.complex128)
        padded[: len(self.coeffs)] = self.coeffs
        return ComplexPolynomial(np.conj(padded[::-1]))


def poly_star(p: ComplexPolynomial, n: Optional[int] = None) -> ComplexPolynomial:
    """Coefficient ``k`` of the output is the conjugate of coefficient ``n − k`` of ``p``."""
    return p.star(n)


# Cayley transform


def cayley_to_circle(x: float) -> complex:
    """ζ = (x + i)/(x − i). Real x lands on the unit circle minus ζ = 1."""
    return complex(x, 1.0) / complex(x, -1.0)


def cayley_to_line(zeta: complex) -> float:
    """
    x = i(ζ + 1)/(ζ − 1), the inverse of :func:`cayley_to_circle`; for ζ = e^{iθ}, x = cot(θ/2).

    Raises:
        DomainError: If |ζ| is not 1 within :data:`UNIT_CIRCLE_TOL`.
        PoleError: At ζ = 1, the image of x = ∞.

    Examples:
        >>> cayley_to_line(-1)
        -0.0
    """
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > UNIT_CIRCLE_TOL:
        raise DomainError("|zeta| = 1", zeta=zeta)
    if abs(zeta - 1.0) < UNIT_CIRCLE_TOL:
        raise PoleError("zeta != 1", zeta=zeta)
    return (1j * (zeta + 1) / (zeta - 1)).real


def theta_to_line(theta: float) -> float:
    """x = cot(θ/2), θ ∈ (0, 2π)."""
    half = 0.5 * theta
    return math.cos(half) / math.sin(half)


def circle_to_line_factor(x: Number, n: int) -> complex:
    """(x − i)ⁿ/2ⁿ, so that 𝒫_n(b;x) = (x − i)ⁿ/2ⁿ · R_n(b; ζ(x))."""
    return ((complex(x) - 1j) / 2) ** n


# Measures


def arccot(x: float) -> float:
    """The branch of arccot continuous on ℝ and decreasing from π to 0: π/2 − arctan x."""
    return 0.5 * math.pi - math.atan(x)


@final
@dataclass(frozen=True)
class MeasureSpec:
    """
    The circle measure dμ^(b) and its normalization κ(b) = 4^λ|Γ(b+1)|²/(Γ(2λ+1)·2π).

    The normalization is kept in log form as well, so large λ does not overflow.

    Examples:
        >>> spec = MeasureSpec.of(ParamB(1.0))
        >>> round(spec.normalization * math.pi, 12)
        1.0
    """

    b: ParamB
    normalization: float
    log_normalization: float

    @classmethod
    def of(cls, b: Union[ParamB, Number]) -> "MeasureSpec":
        b = as_param(b)
        b.require_circle()
        lam = b.lam
        log_norm = (
            lam * math.log(4.0)
            + 2 * log_abs_gamma(b.b + 1)
            - math.lgamma(2 * lam + 1)
            - math.log(2 * math.pi)
        )
        return cls(b, math.exp(log_norm), log_norm)

    def density(self, theta: float) -> float:
        """Density of dμ^(b) with respect to dθ at θ ∈ (0, 2π)."""
        if not 0.0 < theta < 2 * math.pi:
            raise DomainError("0 < theta < 2*pi", theta=theta)
        log_sin = math.log(math.sin(0.5 * theta))
        return math.exp(self.log_normalization + (math.pi - theta) * self.b.eta + 2 * self.b.lam * log_sin)


@functools.lru_cache(maxsize=64)
def _measure(b: ParamB) -> MeasureSpec:
    return MeasureSpec.of(b)


def measure_density_circle(b: Union[ParamB, Number], theta: float) -> float:
    """
    Density of dμ^(b) with respect to dθ: κ(b) e^{(π−θ)η} (sin²(θ/2))^λ.

    Raises:
        DomainError: If λ ≤ −1/2 or θ ∉ (0, 2π).

    Examples:
        >>> round(measure_density_circle(1.0, math.pi) * math.pi, 12)
        1.0
    """
    return _measure(as_param(b)).density(theta)


def measure_density_line(b: Union[ParamB, Number], x: float) -> float:
    """
    The weight ν^(λ,η)(x) = κ(b−1)·2·e^{η(π − 2 arccot x)}/(1 + x²)^λ.

    It is the pullback of dμ^(b−1) under x = cot(θ/2): ν(x)|dx/dθ| is the circle density
    of μ^(b−1) at θ. Integrates to 1 over the real line.

    Raises:
        DomainError: If λ ≤ 1/2.

    Examples:
        >>> round(measure_density_line(1.0, 0.0) * math.pi, 12)
        1.0
    """
    b = as_param(b)
    b.require_orthogonality()
    spec = _measure(b.shifted(-1))
    log_nu = (
        spec.log_normalization
        + math.log(2.0)
        + b.eta * (math.pi - 2 * arccot(x))
        - b.lam * math.log1p(x * x)
    )
    return math.exp(log_nu)


def moment_first(b: Union[ParamB, Number]) -> complex:
    """
    ∫ ζ^{−1} dμ^(b−1)(ζ) = (1 − b)/b̄. The moment ∫ ζ dμ^(b−1) is its conjugate.

    Raises:
        DomainError: If λ ≤ 1/2.

    Examples:
        >>> moment_first(2.0)
        (-0.5+0j)
    """
    b = as_param(b)
    b.require_orthogonality()
    return (1 - b.b) / b.conj


# Φ_n


def _check_circle(b: Union[ParamB, Number], n: int) -> ParamB:
    b = as_param(b)
    b.require_circle()
    if n < 0:
        raise DomainError("n >= 0", n=n)
    return b


def phi_at_zero(b: ParamB, n: int) -> complex:
    """Φ_n(b;0) = (b̄)_n/(b+1)_n, by Chu–Vandermonde."""
    return pochhammer(b.conj, n) / pochhammer(b.b + 1, n)


@functools.lru_cache(maxsize=128)
def _phi_table(b: ParamB, n: int) -> Tuple[ComplexPolynomial, ...]:
    # Szegő recursion Φ_{k+1} = zΦ_k + Φ_{k+1}(0)Φ*_k
    table = [ComplexPolynomial([1.0])]
    for k in range(n):
        phi = table[-1]
        shifted = np.concatenate(([0j], phi.coeffs))
        star = np.concatenate((phi.star().coeffs, [0j]))
        table.append(ComplexPolynomial(shifted + phi_at_zero(b, k + 1) * star))
    return tuple(table)


def phi_coeffs(b: Union[ParamB, Number], n: int) -> ComplexPolynomial:
    """
    Coefficients of the monic Φ_n(b;·), built with the Szegő recursion from the values Φ_k(b;0).

    Examples:
        >>> phi_coeffs(1 + 1j, 1).coeffs
        array([0.2-0.6j, 1. +0.j ])
    """
    b = _check_circle(b, n)
    return _phi_table(b, n)[n]


def opuc_phi_eval(b: Union[ParamB, Number], n: int, z: Number) -> complex:
    """
    Φ_n(b;z) from its terminating hypergeometric form.

    Raises:
        DomainError: If λ ≤ −1/2 or n < 0.

    Examples:
        >>> opuc_phi_eval(1.0, 0, 0.3 + 0.1j)
        (1+0j)
    """
    b = _check_circle(b, n)
    lam = b.lam
    scale = pochhammer(2 * lam + 1, n) / pochhammer(b.b + 1, n)
    return scale * hyp2f1_terminating(n, b.b + 1, 2 * lam + 1, 1 - complex(z))


def opuc_norm_sq(b: Union[ParamB, Number], n: int) -> float:
    """
    ‖Φ_n‖² = (2λ+1)_n n!/|(b+1)_n|² in L²(μ^(b)).

    Examples:
        >>> opuc_norm_sq(1 + 2j, 0)
        1.0
    """
    b = _check_circle(b, n)
    out = 1.0
    for k in range(n):
        out *= (2 * b.lam + 1 + k) * (k + 1) / abs(b.b + 1 + k) ** 2
    return out


def _orthonormal(b: ParamB, k: int, z: complex) -> Tuple[complex, complex]:
    phi = phi_coeffs(b, k)
    norm = math.sqrt(opuc_norm_sq(b, k))
    return phi(z) / norm, phi.star()(z) / norm


# Christoffel–Darboux kernel


def cd_kernel_eval(b: Union[ParamB, Number], n: int, z: Number, w: Number) -> complex:
    """
    K_n(b;z,w) from the closed Christoffel–Darboux formula

        (conj(φ_{n+1}(w))φ_{n+1}(z) − conj(φ*_{n+1}(w))φ*_{n+1}(z)) / (conj(w)z − 1),

    φ_k = Φ_k/‖Φ_k‖ being the orthonormal polynomials.

    Raises:
        PoleError: If |conj(w)z − 1| < :data:`SINGULAR_TOL`; the confluent limit is
            available through :func:`cd_kernel_sum`.
    """
    b = _check_circle(b, n)
    z, w = complex(z), complex(w)
    denom = w.conjugate() * z - 1
    if abs(denom) < SINGULAR_TOL:
        raise PoleError("conj(w)*z != 1", z=z, w=w)
    pz, psz = _orthonormal(b, n + 1, z)
    pw, psw = _orthonormal(b, n + 1, w)
    return (pw.conjugate() * pz - psw.conjugate() * psz) / denom


def cd_kernel_sum(b: Union[ParamB, Number], n: int, z: Number, w: Number) -> complex:
    """K_n(b;z,w) = Σ_{k≤n} conj(φ_k(w)) φ_k(z), valid everywhere including conj(w)z = 1."""
    b = _check_circle(b, n)
    z, w = complex(z), complex(w)
    total = 0j
    for k in range(n + 1):
        total += _orthonormal(b, k, w)[0].conjugate() * _orthonormal(b, k, z)[0]
    return total


def cd_kernel_coeffs(b: Union[ParamB, Number], n: int, w: Number) -> ComplexPolynomial:
    """Coefficients in z of K_n(b;z,w) for fixed w; of exact degree n when |w| ≥ 1."""
    b = _check_circle(b, n)
    w = complex(w)
    acc = np.zeros(n + 1, dtype=np.complex128)
    for k in range(n + 1):
        phi = phi_coeffs(b, k)
        norm_sq = opuc_norm_sq(b, k)
        acc[: k + 1] += phi(w).conjugate() / norm_sq * phi.coeffs
    return ComplexPolynomial(acc)


# R_n


def _check_r(b: Union[ParamB, Number], n: int) -> ParamB:
    b = as_param(b)
    b.require_positive()
    if n < 0:
        raise DomainError("n >= 0", n=n)
    return b


def _r_recurrence(b: ParamB, n: int, z: Any) -> Any:
    r_prev = z * 0 + 1
    if n == 0:
        return r_prev
    c1 = c_coeff(b, 1)
    r = (1 + 1j * c1) * z + (1 - 1j * c1)
    for k in range(1, n):
        c = c_coeff(b, k + 1)
        r_prev, r = r, ((1 + 1j * c) * z + (1 - 1j * c)) * r - 4 * d_coeff(b.lam, k) * z * r_prev
    return r


def _r_hypergeometric(b: ParamB, n: int, z: complex) -> complex:
    lam = b.lam
    return pochhammer(2 * lam, n) / pochhammer(lam, n) * hyp2f1_terminating(n, b.b, 2 * lam, 1 - z)


def _r_para(b: ParamB, n: int, z: complex) -> complex:
    if n == 0:
        return 1 + 0j
    phi = phi_coeffs(b, n - 1)
    b_n = pochhammer(b.b, n)
    twist = pochhammer(b.conj, n) / b_n
    return b_n / pochhammer(b.lam, n) * (z * phi(z) + twist * phi.star()(z))


_R_METHODS: Dict[str, Callable[[ParamB, int, complex], complex]] = {
    "recurrence": _r_recurrence,
    "hypergeometric": _r_hypergeometric,
    "para": _r_para,
}


def para_r_eval(
    b: Union[ParamB, Number], n: int, z: Number, method: RMethod = "recurrence"
) -> complex:
    """
    R_n(b;z) by one of three independent constructions.

    Args:
        b: The parameter, λ > 0.
        n: Degree.
        z: Evaluation point.
        method: ``"recurrence"`` runs R_{k+1} = [(1+ic_{k+1})z + (1−ic_{k+1})]R_k − 4d_{k+1}zR_{k−1};
            ``"hypergeometric"`` sums ((2λ)_n/(λ)_n)₂F₁(−n, b; 2λ; 1−z);
            ``"para"`` uses ((b)_n/(λ)_n)[zΦ_{n−1}(z) + ((b̄)_n/(b)_n)Φ*_{n−1}(z)].

    Examples:
        >>> para_r_eval(1.0, 2, 1.0, method="hypergeometric")
        (3+0j)
    """
    b = _check_r(b, n)
    try:
        impl = _R_METHODS[method]
    except KeyError:
        raise DomainError(f"method in {sorted(_R_METHODS)}", method=method) from None
    return complex(impl(b, n, complex(z)))


def para_r_checked(
    b: Union[ParamB, Number], n: int, z: Number, tol: float = METHOD_AGREEMENT_TOL
) -> complex:
    """
    R_n(b;z) by recurrence after checking the other two constructions against it.

    Raises:
        MethodDisagreement: If any two constructions differ by more than
            ``tol``·max(1, |R_n|).
    """
    values = [para_r_eval(b, n, z, m) for m in _R_METHODS]
    scale = max(1.0, max(abs(v) for v in values))
    spread = max(abs(u - v) for u in values for v in values) / scale
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "R_%s(%s;%s) spread across methods: %.3g", (n, b, z, spread))
    if spread > tol:
        raise MethodDisagreement(f"R_{n}({b};{z})", spread, tol)
    return values[0]


def r_coeffs(b: Union[ParamB, Number], n: int) -> ComplexPolynomial:
    """Coefficients of R_n(b;·), from the recurrence run on coefficient vectors."""
    b = _check_r(b, n)
    r_prev = np.array([1.0 + 0j])
    if n == 0:
        return ComplexPolynomial(r_prev)
    c1 = c_coeff(b, 1)
    r = np.array([1 - 1j * c1, 1 + 1j * c1])
    for k in range(1, n):
        c = c_coeff(b, k + 1)
        nxt = npoly.polymul([1 - 1j * c, 1 + 1j * c], r)
        nxt = npoly.polysub(nxt, 4 * d_coeff(b.lam, k) * npoly.polymulx(r_prev))
        r_prev, r = r, nxt
    return ComplexPolynomial(r)


def r_zeros(b: Union[ParamB, Number], n: int) -> ComplexArray:
    """Zeros of R_n(b;·), sorted by argument in (0, 2π). They lie on |z| = 1."""
    zs = r_coeffs(b, n).roots()
    return zs[np.argsort(np.mod(np.angle(zs), 2 * np.pi))]


# kernel polynomial relation


def kernel_scale(lam: float, n: int) -> float:
    """
    ξ_n = n!/(λ)_n = Π_{j≤n} 2(1 − 𝓛_j), the factor with R_n(b;z) = ξ_n K_n(b−1; z, 1).

    R_n is normalized by its recurrence, so R_n(b;1) = (2λ)_n/(λ)_n, while
    K_n(b−1;1,1) = Σ_{k≤n}(2λ−1)_k/k! = (2λ)_n/n!.

    Raises:
        DomainError: If λ ≤ 1/2.
    """
    bigL = maximal_params(lam, max(1, n))
    out = 1.0
    for j in range(1, n + 1):
        out *= 2 * (1 - bigL[j])
    return out


def kernel_relation_residual(b: Union[ParamB, Number], n: int, z: Number) -> float:
    """
    |R_n(b;z) − ξ_n K_n(b−1; z, 1)| / max(1, |R_n(b;z)|).

    The kernel comes from the closed formula, or from the sum when z is at the pole z = 1.

    Raises:
        DomainError: If λ ≤ 1/2.
    """
    b = _check_r(b, n)
    b.require_orthogonality()
    z = complex(z)
    r = para_r_eval(b, n, z)
    lower = b.shifted(-1)
    if abs(z - 1) < SINGULAR_TOL:
        kernel = cd_kernel_sum(lower, n, z, 1.0)
    else:
        kernel = cd_kernel_eval(lower, n, z, 1.0)
    return abs(r - kernel_scale(b.lam, n) * kernel) / max(1.0, abs(r))


def kernel_orthogonality_residual(
    b: Union[ParamB, Number], n: int, k: int, tol: float = 1e-10
) -> "QuadratureResult":
    """
    ∫ ζ^{−k} R_n(b;ζ)(1 − ζ^{−1}) dμ^(b−1)(ζ), zero for 0 ≤ k ≤ n − 1.

    Raises:
        DomainError: If λ ≤ 1/2 or k is outside 0..n−1.
    """
    from crr.quadrature import integrate_circle

    b = _check_r(b, n)
    b.require_orthogonality()
    if not 0 <= k <= n - 1:
        raise DomainError("0 <= k <= n-1", k=k, n=n)
    spec = _measure(b.shifted(-1))
    rn = r_coeffs(b, n)

    def integrand(theta: float) -> complex:
        zeta = cmath.exp(1j * theta)
        return zeta ** (-k) * rn(zeta) * (1 - 1 / zeta) * spec.density(theta)

    return integrate_circle(integrand, b.lam - 1, tol)


__all__ = [
    "ComplexPolynomial",
    "poly_star",
    "cayley_to_circle",
    "cayley_to_line",
    "theta_to_line",
    "circle_to_line_factor",
    "arccot",
    "MeasureSpec",
    "measure_density_circle",
    "measure_density_line",
    "moment_first",
    "phi_at_zero",
    "phi_coeffs",
    "opuc_phi_eval",
    "opuc_norm_sq",
    "cd_kernel_eval",
    "cd_kernel_sum",
    "cd_kernel_coeffs",
    "para_r_eval",
    "para_r_checked",
    "r_coeffs",
    "r_zeros",
    "kernel_scale",
    "kernel_relation_residual",
    "kernel_orthogonality_residual",
]
