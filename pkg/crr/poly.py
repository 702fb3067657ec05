"""
The complementary Romanovski–Routh (CRR) polynomials 𝒫_n(b;·).

For b = λ + iη with λ > 0, 𝒫_n(b;·) is the real degree-n polynomial built by

    𝒫_0 = 1,  𝒫_1 = x − η/λ,
    𝒫_{n+1}(x) = (x − c_{n+1}) 𝒫_n(x) − d_{n+1} (x² + 1) 𝒫_{n−1}(x),

with the coefficients of :mod:`crr.chain`. Equivalently

    𝒫_n(b;x) = ((x − i)ⁿ / 2ⁿ) ((2λ)_n / (λ)_n) ₂F₁(−n, b; 2λ; −2i/(x − i)).

The monic form 𝒫̂_n = 2ⁿ(λ)_n/(2λ)_n · 𝒫_n is an Appell sequence,
d/dx 𝒫̂_n = n 𝒫̂_{n−1}, and 𝒫_n solves

    (x² + 1) y″ − 2((λ + n − 1)x − η) y′ + n(n − 1 + 2λ) y = 0.

Forward recurrence is used as-is for large |x|: the relative error grows like
O(n·eps·cond) and nothing here guards against overflow beyond n ≈ 200, |x| ≈ 10³.

Examples:
    >>> crr_eval_recurrence(ParamB(1.0), 2, 1.0)
    0.5
    >>> crr_monic_coeffs(ParamB(1.0), 2).coeffs
    array([-0.33333333,  0.        ,  1.        ])
"""

from logging import DEBUG, getLogger

import numpy as np
from numpy.polynomial import polynomial as npoly

from crr._typing import *
from crr.chain import c_coeff, d_coeff, leading_coeffs, one_minus_ell
from crr.exceptions import DomainError, ImaginaryResidueError
from crr.params import ParamB, as_param, is_close_to_real
from crr.utils import hyp2f1_terminating, pochhammer

logger = getLogger(__name__)

IMAGINARY_RESIDUE_TOL = 1e-10
"""Largest imaginary part, relative to max(1, |value|), tolerated on a value known to be real."""


class DensePolynomial:
    """
    A dense coefficient vector, ``coeffs[k]`` being the coefficient of x^k.

    Trailing zeros are trimmed on construction so that the leading coefficient
    is nonzero (the zero polynomial keeps a single 0 and has degree 0).
    The coefficient array is read-only.
    """

    dtype: ClassVar[type] = np.float64

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]) -> None:
        arr = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs)
        arr = np.atleast_1d(arr.astype(self.dtype))
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("coeffs is a non-empty 1-d sequence", shape=arr.shape)
        arr = npoly.polytrim(arr, tol=0).astype(self.dtype)
        arr.flags.writeable = False
        self.coeffs = arr

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Number:
        return self.coeffs[-1].item()

    def __call__(self, x: Any) -> Any:
        return npoly.polyval(x, self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.coeffs.tolist()})"

    def deriv(self) -> Self:
        return type(self)(npoly.polyder(self.coeffs))

    def roots(self) -> ComplexArray:
        """Eigenvalues of the (scaled) companion matrix, see :func:`numpy.polynomial.polynomial.polyroots`."""
        return np.asarray(npoly.polyroots(self.coeffs), dtype=np.complex128)

    def tolist(self) -> List[Number]:
        return self.coeffs.tolist()


@final
class RealPolynomial(DensePolynomial):
    """Real coefficients. Used for 𝒫_n(b;·) and its monic form."""

    dtype = np.float64


def _check(b: Union[ParamB, Number], n: int) -> ParamB:
    b = as_param(b)
    b.require_positive()
    if n < 0:
        raise DomainError("n >= 0", n=n)
    return b


def crr_eval_recurrence(b: Union[ParamB, Number], n: int, x: Any) -> Any:
    """
    𝒫_n(b;x) by forward three-term recurrence.

    ``x`` may be a real or complex scalar or a numpy array; arithmetic follows its type.

    Args:
        b: The parameter, λ > 0.
        n: Degree, n ≥ 0.
        x: Evaluation point(s).

    Raises:
        DomainError: If λ ≤ 0 or n < 0.

    Examples:
        >>> crr_eval_recurrence(0.7 + 3j, 0, 5.0)
        1.0
        >>> crr_eval_recurrence(1 + 2j, 1, 0.5)
        -1.5
    """
    b = _check(b, n)
    x2p1 = x * x + 1
    p_prev = x * 0 + 1.0
    if n == 0:
        return p_prev
    p = x - c_coeff(b, 1)
    for k in range(1, n):
        p_prev, p = p, (x - c_coeff(b, k + 1)) * p - d_coeff(b.lam, k) * x2p1 * p_prev
    return p


def crr_eval_sequence(b: Union[ParamB, Number], n_max: int, x: Number) -> List[Number]:
    """[𝒫_0(b;x), …, 𝒫_{n_max}(b;x)] from a single recurrence run."""
    b = _check(b, n_max)
    out: List[Number] = [x * 0 + 1.0]
    if n_max == 0:
        return out
    out.append(x - c_coeff(b, 1))
    x2p1 = x * x + 1
    for k in range(1, n_max):
        out.append((x - c_coeff(b, k + 1)) * out[k] - d_coeff(b.lam, k) * x2p1 * out[k - 1])
    return out


def crr_monic_sequence(b: Union[ParamB, Number], n_max: int, x: Number) -> List[Number]:
    """[𝒫̂_0(b;x), …, 𝒫̂_{n_max}(b;x)] for real or complex ``x``."""
    b = _check(b, n_max)
    lead = leading_coeffs(b.lam, n_max)
    return [p / lead[n] for n, p in enumerate(crr_eval_sequence(b, n_max, x))]


def crr_eval_hypergeometric(b: Union[ParamB, Number], n: int, x: float) -> float:
    """
    𝒫_n(b;x) from the terminating ₂F₁ form, summed in complex arithmetic.

    The result is real in exact arithmetic. Its imaginary part is checked against
    :data:`IMAGINARY_RESIDUE_TOL` and then dropped.

    Raises:
        DomainError: If λ ≤ 0 or n < 0.
        ImaginaryResidueError: If the computed value is not real to working accuracy.

    Examples:
        >>> crr_eval_hypergeometric(1.0, 2, 1.0)
        0.5
        >>> crr_eval_hypergeometric(2.5 - 1j, 0, -3.0)
        1.0
    """
    b = _check(b, n)
    x = float(x)
    xm = complex(x, -1.0)
    lam = b.lam
    prefactor = (xm / 2) ** n * (pochhammer(2 * lam, n) / pochhammer(lam, n))
    value = prefactor * hyp2f1_terminating(n, b.b, 2 * lam, -2j / xm)
    if not is_close_to_real(value, IMAGINARY_RESIDUE_TOL):
        raise ImaginaryResidueError(f"P_{n}({b};{x})", value, IMAGINARY_RESIDUE_TOL)
    return value.real


def crr_coeffs(b: Union[ParamB, Number], n: int) -> RealPolynomial:
    """
    Coefficients of 𝒫_n(b;·), produced by running the recurrence on coefficient vectors.

    Examples:
        >>> crr_coeffs(1.0, 2).coeffs
        array([-0.25,  0.  ,  0.75])
    """
    b = _check(b, n)
    p_prev = np.array([1.0])
    if n == 0:
        return RealPolynomial(p_prev)
    p = np.array([-c_coeff(b, 1), 1.0])
    x2p1 = np.array([1.0, 0.0, 1.0])
    for k in range(1, n):
        nxt = npoly.polysub(
            npoly.polymulx(p) - c_coeff(b, k + 1) * np.pad(p, (0, 1)),
            d_coeff(b.lam, k) * npoly.polymul(x2p1, p_prev),
        )
        p_prev, p = p, nxt
    return RealPolynomial(p)


def monic_scale(lam: float, n: int) -> float:
    """1/𝔭_n = 2ⁿ(λ)_n/(2λ)_n, the factor taking 𝒫_n to 𝒫̂_n."""
    return 1.0 / leading_coeffs(lam, n)[n]


def crr_monic_coeffs(b: Union[ParamB, Number], n: int) -> RealPolynomial:
    """
    Coefficients of the monic polynomial 𝒫̂_n(b;·).

    Examples:
        >>> crr_monic_coeffs(3 + 1.5j, 1).coeffs
        array([-0.5,  1. ])
    """
    b = _check(b, n)
    coeffs = crr_coeffs(b, n).coeffs * monic_scale(b.lam, n)
    coeffs[-1] = 1.0
    return RealPolynomial(coeffs)


def crr_eval_monic(b: Union[ParamB, Number], n: int, x: Any) -> Any:
    """
    𝒫̂_n(b;x) for real or complex ``x`` (the sine/cosine sequences need x = ±i).

    Examples:
        >>> crr_eval_monic(1.0, 2, 1j)
        (-1.3333333333333333+0j)
    """
    b = _check(b, n)
    return monic_scale(b.lam, n) * crr_eval_recurrence(b, n, x)


def monic_at_i(b: Union[ParamB, Number], n: int) -> complex:
    """
    Closed form 𝒫̂_n(b;i) = 2ⁿ iⁿ (b)_n/(2λ)_n. The value at −i is its conjugate.

    Examples:
        >>> monic_at_i(1.0, 2)
        (-1.3333333333333333+0j)
    """
    b = _check(b, n)
    return (2j) ** n * pochhammer(b.b, n) / pochhammer(2 * b.lam, n)


def crr_derivative_eval(b: Union[ParamB, Number], n: int, x: Any) -> Any:
    """
    𝒫_n′(b;x) = n(1 − ℓ_n) 𝒫_{n−1}(b;x).

    The derivative of 𝒫_0 is returned as 0.0.

    Examples:
        >>> crr_derivative_eval(1.0, 2, 1.0)
        1.5
        >>> crr_derivative_eval(1 + 2j, 1, 7.0)
        1.0
    """
    b = _check(b, n)
    if n == 0:
        return x * 0.0
    return n * one_minus_ell(b.lam, n) * crr_eval_recurrence(b, n - 1, x)


def _second_derivative(b: ParamB, n: int, x: Any) -> Any:
    if n < 2:
        return x * 0.0
    factor = n * one_minus_ell(b.lam, n) * (n - 1) * one_minus_ell(b.lam, n - 1)
    return factor * crr_eval_recurrence(b, n - 2, x)


def crr_ode_residual(b: Union[ParamB, Number], n: int, x: float, scaled: bool = False) -> float:
    """
    Left-hand side of (x²+1)𝒫″ − 2((λ+n−1)x − η)𝒫′ + n(n−1+2λ)𝒫 at ``x``.

    Both derivatives come from the Appell relation, so the check is independent of
    any finite-difference step.

    Args:
        b: The parameter, λ > 0.
        n: Degree, n ≥ 1.
        x: Evaluation point.
        scaled: Divide by max(1, sum of the magnitudes of the three terms).

    Examples:
        >>> crr_ode_residual(1.0, 2, 1.0)
        0.0
    """
    b = _check(b, n)
    if n < 1:
        raise DomainError("n >= 1", n=n)
    lam, eta = b.lam, b.eta
    terms = (
        (x * x + 1) * _second_derivative(b, n, x),
        -2 * ((lam + n - 1) * x - eta) * crr_derivative_eval(b, n, x),
        n * (n - 1 + 2 * lam) * crr_eval_recurrence(b, n, x),
    )
    residual = sum(terms)
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "ODE residual for P_%s(%s;%s): %s", (n, b, x, residual))
    if scaled:
        return residual / max(1.0, sum(abs(t) for t in terms))
    return residual


__all__ = [
    "DensePolynomial",
    "RealPolynomial",
    "crr_eval_recurrence",
    "crr_eval_sequence",
    "crr_monic_sequence",
    "crr_eval_hypergeometric",
    "crr_coeffs",
    "monic_scale",
    "crr_monic_coeffs",
    "crr_eval_monic",
    "monic_at_i",
    "crr_derivative_eval",
    "crr_ode_residual",
]
