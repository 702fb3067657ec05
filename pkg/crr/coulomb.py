"""
Extended regular Coulomb wave functions and their generating functions.

For b = λ + iη with λ > 0 and real w,

    𝒩(b;w) = e^{−iw} ₁F₁(b; 2λ; 2iw)                        (real, by Kummer's transformation)
    𝔠(b)   = 2^{λ−1} e^{πη/2} |Γ(b)| / Γ(2λ)
    𝓜(b;w) = 𝔠(b) w^λ 𝒩(b;w)                                (w > 0)

The regular Coulomb wave functions are F_L(η,w) = 𝓜(L+1−iη; w), with Gamow–Sommerfeld
factor C_L(η) = 𝔠(L+1−iη), and for η = 0 the Bessel functions appear through
J_α(w) = 𝒩(α+1/2; w)(w/2)^α/Γ(α+1).

The monic CRR polynomials generate 𝒩:

    e^{xw} 𝒩(b;w) = Σ 𝒫̂_n(b;x) wⁿ/n!

for every real or complex x. At x = ±i this gives the sine/cosine sequences 𝔞_n = Re 𝒫̂_n(b;i),
𝔟_n = Im 𝒫̂_n(b;i), which satisfy

    𝔞_{n+1} = 2/(2λ+n) · (−η𝔞_n − (λ+n)𝔟_n),
    𝔟_{n+1} = 2/(2λ+n) · ((λ+n)𝔞_n − η𝔟_n),      𝔞₀ = 1, 𝔟₀ = 0,

and cos(w)𝒩 = Σ 𝔞_n wⁿ/n!, sin(w)𝒩 = Σ 𝔟_n wⁿ/n!.

The ₁F₁ series with imaginary argument cancels heavily (about log₁₀ e^{|z|} digits), so
:func:`kummer_1f1` reruns it in :mod:`mpmath` at a working precision that covers the
cancellation it measured on a first double-precision pass.

Examples:
    >>> round(coulomb_f(0, 0.0, 2.0), 10)
    0.9092974268
    >>> round(gamow_factor(ParamB(2.0)), 12)
    0.333333333333
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from logging import DEBUG, getLogger

import mpmath

from crr import config
from crr._typing import *
from crr.exceptions import (
    DomainError,
    ImaginaryResidueError,
    PoleError,
    SeriesDidNotConverge,
    WindowViolation,
)
from crr.opuc import arccot
from crr.params import ParamB, SeriesControl, as_param, is_close_to_real
from crr.poly import crr_monic_sequence
from crr.utils import central_second, complex_abs_gamma, hyp2f1_terminating, log_abs_gamma, lost_digits, pochhammer
from crr.utils.numdiff import H_SECOND
from crr.utils.sums import DOUBLE_DIGITS

logger = getLogger(__name__)

REALITY_TOL = 1e-10
"""Largest relative imaginary residue accepted on 𝒩(b;w) before it is dropped."""

A_COEFF_REALITY_TOL = 1e-12
"""Same for the coefficients A_k^L(η)."""

FLOAT_LOST_DIGITS = 1
"""Digits a double-precision ₁F₁ pass may lose before the sum is redone in extended precision."""

MAX_ABS_W = 20.0
"""Largest |w| accepted by 𝒩(b;w), so the ₁F₁ argument 2iw has modulus at most 40.

No asymptotic expansion is implemented beyond it.
"""


@final
@dataclass(frozen=True)
class ErcwValue:
    """
    𝒩(b;w), 𝓜(b;w) and 𝔠(b) at one point w > 0.

    ``m_value == gamow * w**lam * n_value`` up to rounding.
    """

    n_value: float
    m_value: float
    gamow: float


def _ctl(ctl: Optional[SeriesControl]) -> SeriesControl:
    return config.default_series_control() if ctl is None else ctl


# Kummer series


def _is_nonpositive_integer(c: complex) -> bool:
    return c.imag == 0 and c.real <= 0 and c.real == math.floor(c.real)


def _kummer_pass(a: Any, c: Any, z: Any, one: Any, ctl: SeriesControl) -> Tuple[Any, float]:
    term = one
    total = one
    magnitude = 1.0
    z_abs = float(abs(z))
    small = 0
    t_abs = 0.0
    for k in range(ctl.max_terms):
        term = term * (a + k) * z / ((c + k) * (k + 1))
        total += term
        t_abs = float(abs(term))
        magnitude += t_abs
        if t_abs <= ctl.rel_tol * float(abs(total)) or t_abs <= ctl.abs_floor:
            small += 1
            if small >= 3 and k + 1 >= z_abs:
                return total, magnitude
        else:
            small = 0
    raise SeriesDidNotConverge("1F1", ctl.max_terms, t_abs / max(float(abs(total)), 1e-300))


def kummer_1f1(a: Number, c: Number, z: Number, ctl: Optional[SeriesControl] = None) -> complex:
    """
    Kummer's function ₁F₁(a; c; z) = Σ (a)_k z^k/((c)_k k!).

    The terms are generated by their ratio and summed until |t_k| ≤ rel_tol·|partial sum|
    for 3 consecutive terms (and k has passed |z|). When the double-precision pass
    reports that more than :data:`FLOAT_LOST_DIGITS` digits cancelled, the same
    recurrence runs again in :mod:`mpmath` with that many digits plus
    :attr:`~crr.params.SeriesControl.guard_digits` on top of double precision.

    Raises:
        PoleError: If c is a non-positive integer.
        SeriesDidNotConverge: If :attr:`~crr.params.SeriesControl.max_terms` is hit.

    Examples:
        >>> kummer_1f1(0.3, 1.2, 0)
        (1+0j)
        >>> abs(kummer_1f1(2.5, 2.5, 1.7) - math.exp(1.7)) < 1e-13
        True
    """
    ctl = _ctl(ctl)
    a, c, z = complex(a), complex(c), complex(z)
    if _is_nonpositive_integer(c):
        raise PoleError("c not a non-positive integer", c=c)
    total, magnitude = _kummer_pass(a, c, z, 1 + 0j, ctl)
    lost = lost_digits(magnitude, total)
    if lost <= FLOAT_LOST_DIGITS:
        return total
    dps = DOUBLE_DIGITS + lost + ctl.guard_digits
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "1F1(%s; %s; %s): %s digits cancel, redoing at dps=%s", (a, c, z, lost, dps))
    with mpmath.workdps(dps):
        precise, _ = _kummer_pass(mpmath.mpc(a), mpmath.mpc(c), mpmath.mpc(z), mpmath.mpc(1), ctl)
        return complex(precise)


# 𝒩, 𝔠, 𝓜


def curly_n(b: Union[ParamB, Number], w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    𝒩(b;w) = e^{−iw} ₁F₁(b; 2λ; 2iw), real for real w.

    Raises:
        DomainError: If λ ≤ 0 or |w| > :data:`MAX_ABS_W`.
        ImaginaryResidueError: If the imaginary residue exceeds :data:`REALITY_TOL`.

    Examples:
        >>> curly_n(ParamB(1.5, -2.0), 0.0)
        1.0
        >>> abs(curly_n(1.0, math.pi / 2) - 2 / math.pi) < 1e-13
        True
    """
    b = as_param(b)
    b.require_positive()
    w = float(w)
    if abs(w) > MAX_ABS_W:
        raise DomainError(f"|w| <= {MAX_ABS_W}", w=w)
    value = cmath.exp(-1j * w) * kummer_1f1(b.b, 2 * b.lam, 2j * w, ctl)
    if not is_close_to_real(value, REALITY_TOL):
        raise ImaginaryResidueError(f"N({b};{w})", value, REALITY_TOL)
    return value.real


def gamow_factor(b: Union[ParamB, Number]) -> float:
    """
    𝔠(b) = 2^{λ−1} e^{πη/2} |Γ(b)|/Γ(2λ). For b = L+1−iη this is the Gamow–Sommerfeld factor C_L(η).

    Examples:
        >>> round(gamow_factor(1.0), 12)
        1.0
        >>> round(gamow_factor(1 - 1j), 6)
        0.108423
    """
    b = as_param(b)
    b.require_positive()
    lam = b.lam
    return math.exp(
        (lam - 1) * math.log(2.0) + 0.5 * math.pi * b.eta + log_abs_gamma(b.b) - math.lgamma(2 * lam)
    )


def _real_power(w: float, lam: float) -> float:
    if w > 0:
        return w**lam
    if lam == math.floor(lam):
        return float(w ** int(lam))
    raise DomainError("w > 0 or lambda an integer", w=w, lam=lam)


def curly_m(b: Union[ParamB, Number], w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    𝓜(b;w) = 𝔠(b) w^λ 𝒩(b;w).

    Raises:
        DomainError: If w ≤ 0 and λ is not an integer (w^λ has no real value).

    Examples:
        >>> round(curly_m(1.0, 1.0), 12)
        0.841470984808
    """
    b = as_param(b)
    b.require_positive()
    return gamow_factor(b) * _real_power(float(w), b.lam) * curly_n(b, w, ctl)


def ercw_value(b: Union[ParamB, Number], w: float, ctl: Optional[SeriesControl] = None) -> ErcwValue:
    """The :class:`ErcwValue` record at w > 0."""
    b = as_param(b)
    b.require_positive()
    if not w > 0:
        raise DomainError("w > 0", w=w)
    n_value = curly_n(b, w, ctl)
    gamow = gamow_factor(b)
    return ErcwValue(n_value, gamow * w**b.lam * n_value, gamow)


# Coulomb wave functions


def _coulomb_param(L: int, eta: float) -> ParamB:
    if L < 0 or int(L) != L:
        raise DomainError("L a non-negative integer", L=L)
    return ParamB(int(L) + 1, -float(eta))


def coulomb_f(L: int, eta: float, w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    The regular Coulomb wave function F_L(η,w) = 𝓜(L+1−iη; w).

    Examples:
        >>> round(coulomb_f(0, 0.0, 2.0), 12)
        0.909297426826
    """
    return curly_m(_coulomb_param(L, eta), w, ctl)


def coulomb_ode_residual(L: int, eta: float, w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    F″ + [1 − 2η/w − L(L+1)/w²] F at w, with F″ from a fourth-order central difference.

    Compare against max(1, |F|). The difference step is eps^{1/6} for every w.
    """
    if not w > 0:
        raise DomainError("w > 0", w=w)
    f = lambda v: coulomb_f(L, eta, v, ctl)
    value = f(w)
    return central_second(f, w, h=H_SECOND) + (1 - 2 * eta / w - L * (L + 1) / (w * w)) * value


def powell_recurrence_residual(L: int, eta: float, w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    Relative residual of the three-term recurrence in L, for L ≥ 1:

        L|L+1+iη| F_{L+1} = (2L+1)[L(L+1)/w + η] F_L − (L+1)|L+iη| F_{L−1}.
    """
    if L < 1:
        raise DomainError("L >= 1", L=L)
    f_lo, f_mid, f_hi = (coulomb_f(ell, eta, w, ctl) for ell in (L - 1, L, L + 1))
    lhs = L * abs(complex(L + 1, eta)) * f_hi
    rhs = (2 * L + 1) * (L * (L + 1) / w + eta) * f_mid - (L + 1) * abs(complex(L, eta)) * f_lo
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def lambda_recurrence_residual(b: Union[ParamB, Number], w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    Relative residual of

        𝓜(b+2;w) = ((2λ+1)/(λ|b+1|))[λ(λ+1)/w − η]𝓜(b+1;w) − ((λ+1)|b|/(λ|b+1|))𝓜(b;w).

    Examples:
        >>> lambda_recurrence_residual(1.0, 2.5) < 1e-9
        True
    """
    b = as_param(b)
    b.require_positive()
    if not w > 0:
        raise DomainError("w > 0", w=w)
    lam, eta = b.lam, b.eta
    m0, m1, m2 = (curly_m(b.shifted(k), w, ctl) for k in (0, 1, 2))
    b1 = abs(b.b + 1)
    rhs = (2 * lam + 1) / (lam * b1) * (lam * (lam + 1) / w - eta) * m1 - (lam + 1) * abs(b.b) / (lam * b1) * m0
    return abs(m2 - rhs) / max(1.0, abs(m2))


# Bessel functions


def _check_alpha(alpha: float, w: float) -> None:
    if not alpha > -0.5:
        raise DomainError("alpha > -1/2", alpha=alpha)
    if w < 0 and alpha != math.floor(alpha):
        raise DomainError("w >= 0 or alpha an integer", w=w, alpha=alpha)


def _bessel_at_origin(alpha: float) -> float:
    if alpha < 0:
        raise PoleError("w != 0 or alpha >= 0", alpha=alpha, w=0.0)
    return 1.0 if alpha == 0 else 0.0


def bessel_j(alpha: float, w: float, ctl: Optional[SeriesControl] = None) -> float:
    """
    J_α(w) = 𝒩(α+1/2; w)(w/2)^α/Γ(α+1). Negative w only for integer α.

    Raises:
        DomainError: If α ≤ −1/2, or w < 0 with α not an integer.
        PoleError: At w = 0 with α < 0, where J_α is infinite.

    Examples:
        >>> bessel_j(0.0, 0.0)
        1.0
    """
    _check_alpha(alpha, w)
    if w == 0:
        return _bessel_at_origin(alpha)
    return curly_n(ParamB(alpha + 0.5), w, ctl) * _real_power(0.5 * w, alpha) / math.gamma(alpha + 1)


def bessel_j_series(alpha: float, w: float, max_terms: int = 500) -> float:
    """
    J_α(w) = Σ (−1)^k (w/2)^{α+2k}/(k! Γ(α+k+1)), summed with :func:`math.fsum`.

    Independent of :func:`bessel_j`; serves as its cross-check.
    """
    _check_alpha(alpha, w)
    if w == 0:
        return _bessel_at_origin(alpha)
    q = 0.25 * w * w
    term = _real_power(0.5 * w, alpha) / math.gamma(alpha + 1)
    terms = [term]
    for k in range(max_terms):
        term *= -q / ((k + 1) * (alpha + k + 1))
        terms.append(term)
        if abs(term) <= 1e-17 * abs(terms[0]) and k + 1 > q:
            break
    else:
        raise SeriesDidNotConverge("J_alpha power series", max_terms, abs(term))
    return math.fsum(terms)


# Generating functions


def _exp_series(coeffs: Sequence[Number], w: float) -> complex:
    """Σ c_n wⁿ/n!."""
    total, power = [], 1.0
    for n, c in enumerate(coeffs):
        if n:
            power *= w / n
        total.append(complex(c) * power)
    return complex(math.fsum(t.real for t in total), math.fsum(t.imag for t in total))


def appell_genfunc_residual(
    b: Union[ParamB, Number], x: float, w: float, N: int, ctl: Optional[SeriesControl] = None
) -> float:
    """
    |e^{xw}𝒩(b;w) − Σ_{n≤N} 𝒫̂_n(b;x) wⁿ/n!|.

    Examples:
        >>> appell_genfunc_residual(1.0, 0.0, 1.0, 25) <= 1e-12
        True
        >>> appell_genfunc_residual(ParamB(1.3, 0.8), 0.7, 0.0, 0)
        0.0
    """
    b = as_param(b)
    lhs = math.exp(x * w) * curly_n(b, w, ctl)
    return abs(lhs - _exp_series(crr_monic_sequence(b, N, x), w))


def weber_window(x: float) -> float:
    """The default validity window 1/(2(1+x²)) on |w| for Weber's generating function."""
    return 0.5 / (1 + x * x)


def weber_radius(x: float) -> float:
    """Radius of convergence 1/√(1+x²) of the Weber series in w."""
    return 1 / math.sqrt(1 + x * x)


def weber_genfunc_lhs(b: Union[ParamB, Number], x: float, w: float, window: Optional[float] = None) -> float:
    """
    Closed form of Weber's generating function,

        e^{2η arccot x} / ([(xw − 1)² + w²]^λ e^{2η arccot(x − w(x²+1))}),

    which equals Σ (2λ)_n 𝒫̂_n(b;x) wⁿ/n! for |w| < ``window``.

    Args:
        window: Bound on |w|; defaults to :func:`weber_window`, may be raised up to
            :func:`weber_radius`.

    Raises:
        DomainError: If ``window`` exceeds the radius of convergence.
        WindowViolation: If |w| ≥ window.

    Examples:
        >>> round(weber_genfunc_lhs(1.0, 0.0, 0.1), 12)
        0.990099009901
    """
    b = as_param(b)
    b.require_positive()
    radius = weber_radius(x)
    window = weber_window(x) if window is None else window
    if window > radius:
        raise DomainError("window <= 1/sqrt(1+x^2)", window=window, radius=radius)
    if abs(w) >= window:
        raise WindowViolation("|w| < window", w=w, window=window)
    lam, eta = b.lam, b.eta
    base = (x * w - 1) ** 2 + w * w
    return math.exp(2 * eta * (arccot(x) - arccot(x - w * (x * x + 1))) - lam * math.log(base))


def weber_genfunc_series(b: Union[ParamB, Number], x: float, w: float, N: int) -> float:
    """Σ_{n≤N} (2λ)_n 𝒫̂_n(b;x) wⁿ/n!."""
    b = as_param(b)
    monic = crr_monic_sequence(b, N, x)
    coeffs = [pochhammer(2 * b.lam, n) * p for n, p in enumerate(monic)]
    return _exp_series(coeffs, w).real


# A_k^L and the series for F_L


def a_coeffs(L: int, eta: float, K: int) -> List[float]:
    """
    A_{L+1}^L(η), …, A_{L+1+K}^L(η) with A_{k+L+1}^L = ((−i)^k/k!) ₂F₁(−k, L+1−iη; 2L+2; 2).

    k!·A_{k+L+1}^L equals 𝒫̂_k(L+1−iη; 0).

    Raises:
        ImaginaryResidueError: If a coefficient is not real to :data:`A_COEFF_REALITY_TOL`.

    Examples:
        >>> a_coeffs(0, 2.0, 1)
        [1.0, 2.0]
    """
    b = _coulomb_param(L, eta)
    if K < 0:
        raise DomainError("K >= 0", K=K)
    out = []
    factorial = 1.0
    for k in range(K + 1):
        if k:
            factorial *= k
        value = (-1j) ** k / factorial * hyp2f1_terminating(k, b.b, 2 * L + 2, 2.0)
        if not is_close_to_real(value, A_COEFF_REALITY_TOL):
            raise ImaginaryResidueError(f"A_{k + L + 1}^{L}({eta})", value, A_COEFF_REALITY_TOL)
        out.append(value.real)
    return out


def coulomb_f_series(L: int, eta: float, w: float, K: int) -> float:
    """F_L(η,w) ≈ C_L(η) w^{L+1} Σ_{k≤K} A_{k+L+1}^L(η) w^k."""
    b = _coulomb_param(L, eta)
    coeffs = a_coeffs(L, eta, K)
    total = math.fsum(a * w**k for k, a in enumerate(coeffs))
    return gamow_factor(b) * w ** (L + 1) * total


def coulomb_expansion_residual(
    L: int, eta: float, x: float, w: float, N: int, ctl: Optional[SeriesControl] = None
) -> float:
    """|e^{xw}F_L(η,w) − C_L(η) w^{L+1} Σ_{n≤N} 𝒫̂_n(L+1−iη; x) wⁿ/n!| for w > 0."""
    b = _coulomb_param(L, eta)
    lhs = math.exp(x * w) * coulomb_f(L, eta, w, ctl)
    rhs = gamow_factor(b) * w ** (L + 1) * _exp_series(crr_monic_sequence(b, N, x), w).real
    return abs(lhs - rhs)


def bessel_expansion_residual(
    alpha: float, x: float, w: float, N: int, ctl: Optional[SeriesControl] = None
) -> float:
    """|e^{xw}J_α(w) − (w/2)^α/Γ(α+1) Σ_{n≤N} 𝒫̂_n(α+1/2; x) wⁿ/n!|."""
    lhs = math.exp(x * w) * bessel_j(alpha, w, ctl)
    series = _exp_series(crr_monic_sequence(ParamB(alpha + 0.5), N, x), w).real
    return abs(lhs - _real_power(0.5 * w, alpha) / math.gamma(alpha + 1) * series)


# sine/cosine sequences


def _ab_recurrence(lam: Any, eta: Any, N: int) -> Tuple[List[Any], List[Any]]:
    a, b = [lam * 0 + 1], [lam * 0]
    for n in range(N):
        scale = 2 / (2 * lam + n)
        a.append(scale * (-eta * a[n] - (lam + n) * b[n]))
        b.append(scale * ((lam + n) * a[n] - eta * b[n]))
    return a, b


def ab_sequences(b: Union[ParamB, Number, Tuple[Any, Any]], N: int) -> Tuple[List[Any], List[Any]]:
    """
    The sequences 𝔞_0..𝔞_N and 𝔟_0..𝔟_N, with 2𝔞_n = 𝒫̂_n(b;i) + 𝒫̂_n(b;−i) and
    2i𝔟_n = 𝒫̂_n(b;i) − 𝒫̂_n(b;−i).

    ``b`` may also be a ``(lam, eta)`` pair of :class:`fractions.Fraction` for exact arithmetic.

    Examples:
        >>> ab_sequences(ParamB(2.0, 1.0), 1)
        ([1.0, -0.5], [0.0, 1.0])
    """
    if isinstance(b, tuple):
        lam, eta = b
        if not lam > 0:
            raise DomainError("lambda > 0", lam=lam)
        return _ab_recurrence(lam, eta, N)
    b = as_param(b)
    b.require_positive()
    return _ab_recurrence(b.lam, b.eta, N)


def coulomb_ab_sequences(L: int, eta: float, N: int) -> Tuple[List[float], List[float]]:
    """:func:`ab_sequences` at b = L+1−iη."""
    return ab_sequences(_coulomb_param(L, eta), N)


def bessel_ab_closed(alpha: Any, N: int) -> Tuple[List[Any], List[Any]]:
    """
    Closed forms of the η = 0 sequences for b = α + 1/2:

        𝔞_{2n}   = (−1)ⁿ 2^{2n} (α+1/2)_{2n}/(2α+1)_{2n},
        𝔟_{2n+1} = (−1)ⁿ 2^{2n} (α+3/2)_{2n}/(2α+2)_{2n},

    for 2n ≤ N and 2n+1 ≤ N respectively; 𝔞_{odd} and 𝔟_{even} vanish.
    ``alpha`` may be a :class:`fractions.Fraction`.

    Examples:
        >>> bessel_ab_closed(Fraction(1, 2), 2)
        ([Fraction(1, 1), Fraction(-4, 3)], [Fraction(1, 1)])
    """
    if not alpha > -0.5:
        raise DomainError("alpha > -1/2", alpha=alpha)
    one = Fraction(1) if isinstance(alpha, Fraction) else 1.0
    half = one / 2

    def closed(n: int, top: Any, bottom: Any) -> Any:
        return one * (-4) ** n * pochhammer(top, 2 * n) / pochhammer(bottom, 2 * n)

    a_even = [closed(n, alpha + half, 2 * alpha + 1) for n in range(N // 2 + 1)]
    b_odd = [closed(n, alpha + 3 * half, 2 * alpha + 2) for n in range((N + 1) // 2)]
    return a_even, b_odd


def _sincos_residual(
    a: Sequence[float], bseq: Sequence[float], n_value: float, w: float, N: int, which: SinCos
) -> float:
    if which == "cos":
        return abs(math.cos(w) * n_value - _exp_series(a[: N + 1], w).real)
    if which == "sin":
        # w Σ 𝔟_{n+1}/(n+1) wⁿ/n! = Σ_{n≥1} 𝔟_n wⁿ/n!
        return abs(math.sin(w) * n_value - _exp_series([0.0, *bseq[1 : N + 2]], w).real)
    if which == "combined":
        c = [a[n] * math.cos(w) + bseq[n + 1] / (n + 1) * w * math.sin(w) for n in range(N + 1)]
        return abs(n_value - _exp_series(c, w).real)
    raise DomainError("which in ('cos', 'sin', 'combined')", which=which)


def sincos_expansion_residual(
    b: Union[ParamB, Number], w: float, N: int, which: SinCos = "combined", ctl: Optional[SeriesControl] = None
) -> float:
    """
    Truncation residual of one of

        cos(w)𝒩(b;w) = Σ 𝔞_n wⁿ/n!,
        sin(w)𝒩(b;w) = w Σ 𝔟_{n+1}/(n+1) wⁿ/n!,
        𝒩(b;w)       = Σ [𝔞_n cos w + 𝔟_{n+1}/(n+1) w sin w] wⁿ/n!,

    each summed for n ≤ N.

    Examples:
        >>> sincos_expansion_residual(ParamB(0.9, 2.0), 0.0, 0, "cos")
        0.0
    """
    b = as_param(b)
    a, bseq = ab_sequences(b, N + 1)
    return _sincos_residual(a, bseq, curly_n(b, w, ctl), w, N, which)


def bessel_sincos_residual(
    alpha: float, w: float, N: int, which: SinCos = "combined", ctl: Optional[SeriesControl] = None
) -> float:
    """:func:`sincos_expansion_residual` at b = α + 1/2 with the coefficients from :func:`bessel_ab_closed`."""
    a_even, b_odd = bessel_ab_closed(alpha, N + 1)
    a = [0.0] * (N + 2)
    bseq = [0.0] * (N + 2)
    for n, value in enumerate(a_even):
        a[2 * n] = float(value)
    for n, value in enumerate(b_odd):
        bseq[2 * n + 1] = float(value)
    return _sincos_residual(a, bseq, curly_n(ParamB(alpha + 0.5), w, ctl), w, N, which)


__all__ = [
    "ErcwValue",
    "kummer_1f1",
    "complex_abs_gamma",
    "curly_n",
    "gamow_factor",
    "curly_m",
    "ercw_value",
    "coulomb_f",
    "coulomb_ode_residual",
    "powell_recurrence_residual",
    "lambda_recurrence_residual",
    "bessel_j",
    "bessel_j_series",
    "appell_genfunc_residual",
    "weber_window",
    "weber_radius",
    "weber_genfunc_lhs",
    "weber_genfunc_series",
    "a_coeffs",
    "coulomb_f_series",
    "coulomb_expansion_residual",
    "bessel_expansion_residual",
    "ab_sequences",
    "coulomb_ab_sequences",
    "bessel_ab_closed",
    "sincos_expansion_residual",
    "bessel_sincos_residual",
]
