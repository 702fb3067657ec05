"""
Recurrence coefficients of the CRR polynomials and the positive chain sequence they form.

For b = λ + iη the three-term recurrence

    𝒫_{n+1}(x) = (x − c_{n+1}) 𝒫_n(x) − d_{n+1} (x² + 1) 𝒫_{n−1}(x)

has c_n = η/(λ+n−1) and d_{n+1} = n(2λ+n−1) / (4(λ+n−1)(λ+n)). The sequence
{d_{n+1}} is a positive chain sequence: it admits parameter sequences g with
(1 − g_n) g_{n+1} = d_{n+1}. The minimal one is ℓ_n; when λ > 1/2 the maximal
one 𝓛_n differs from it and drives γ_n, the diagonal of the orthogonality relation.

Lists are 1-based in the mathematical sense and padded at index 0 so that
``seq[n]`` is the n-th term; the padding entry is documented per function.
"""

from dataclasses import dataclass

from crr._typing import *
from crr.exceptions import DomainError, LengthMismatch
from crr.params import ParamB, as_param

DEFAULT_TOL = 1e-12
"""Absolute tolerance used by :func:`is_parameter_seq`; every quantity involved is O(1)."""


def _check_lam(lam: float) -> float:
    lam = float(lam)
    if not lam > 0:
        raise DomainError("lambda > 0", lam=lam)
    return lam


def _check_n_max(n_max: int) -> int:
    if n_max < 1:
        raise DomainError("n_max >= 1", n_max=n_max)
    return int(n_max)


def c_coeff(b: ParamB, n: int) -> float:
    """c_n = η/(λ+n−1), n ≥ 1."""
    return b.eta / (b.lam + n - 1)


def d_coeff(lam: float, n: int) -> float:
    """d_{n+1} = n(2λ+n−1)/(4(λ+n−1)(λ+n)), n ≥ 1. Independent of η."""
    return 0.25 * n * (2 * lam + n - 1) / ((lam + n - 1) * (lam + n))


def one_minus_ell(lam: float, n: int) -> float:
    """1 − ℓ_n = (2λ+n−1)/(2(λ+n−1)), n ≥ 1."""
    return (2 * lam + n - 1) / (2 * (lam + n - 1))


def recurrence_coeffs(b: Union[ParamB, Number], n_max: int) -> Tuple[List[float], List[float]]:
    """
    The recurrence coefficients c_1..c_{n_max} and d_2..d_{n_max}.

    Returns:
        ``(c, d)`` with ``c[n]`` = c_n for 1 ≤ n ≤ n_max and ``d[n+1]`` = d_{n+1}
        for 1 ≤ n ≤ n_max−1. ``c[0]``, ``d[0]`` and ``d[1]`` are 0.0 placeholders.

    Examples:
        >>> c, d = recurrence_coeffs(ParamB(2, 1), 2)
        >>> c[1], d[2]
        (0.5, 0.16666666666666666)
    """
    b = as_param(b)
    b.require_positive()
    n_max = _check_n_max(n_max)
    c = [0.0] + [c_coeff(b, n) for n in range(1, n_max + 1)]
    d = [0.0, 0.0] + [d_coeff(b.lam, n) for n in range(1, n_max)]
    return c, d


def minimal_params(lam: float, n_max: int) -> List[float]:
    """
    Minimal parameter sequence ℓ_n = (n−1)/(2(λ+n−1)) for 1 ≤ n ≤ n_max.

    Computed from the closed ratio, not by iterating (1−ℓ_n)ℓ_{n+1} = d_{n+1}:
    that iteration is repelled from the minimal solution.

    Returns:
        List with ``ell[n]`` = ℓ_n; ``ell[0]`` is a 0.0 placeholder.
    """
    lam = _check_lam(lam)
    n_max = _check_n_max(n_max)
    return [0.0] + [(n - 1) / (2 * (lam + n - 1)) for n in range(1, n_max + 1)]


def maximal_params(lam: float, n_max: int) -> List[float]:
    """
    Maximal parameter sequence 𝓛_n = (2λ+n−2)/(2(λ+n−1)) for 1 ≤ n ≤ n_max.

    Only exists as a sequence distinct from the minimal one when λ > 1/2;
    for 0 < λ ≤ 1/2 the minimal sequence is the only parameter sequence.

    Returns:
        List with ``bigL[n]`` = 𝓛_n; ``bigL[0]`` is a 0.0 placeholder.

    Raises:
        DomainError: If λ ≤ 1/2.
    """
    lam = float(lam)
    if not lam > 0.5:
        raise DomainError("lambda > 1/2", lam=lam)
    n_max = _check_n_max(n_max)
    return [0.0] + [0.5 * (2 * lam + n - 2) / (lam + n - 1) for n in range(1, n_max + 1)]


def gamma_seq(lam: float, n_max: int) -> List[float]:
    """
    γ_0 = 1 and γ_n = (1 − 𝓛_n) γ_{n−1}, for 0 ≤ n ≤ n_max.

    Since 1 − 𝓛_n = n/(2(λ+n−1)), γ_1 = 1/(2λ). The values also satisfy
    γ_{n+1} = γ_n − d_{n+1} γ_{n−1}.

    Examples:
        >>> gamma_seq(1.0, 2)
        [1.0, 0.5, 0.25]
    """
    bigL = maximal_params(lam, max(1, n_max))
    gamma = [1.0]
    for n in range(1, n_max + 1):
        gamma.append((1.0 - bigL[n]) * gamma[-1])
    return gamma


def leading_coeffs(lam: float, n_max: int) -> List[float]:
    """
    Leading coefficients 𝔭_n = (2λ)_n / (2ⁿ(λ)_n) of 𝒫_n, for 0 ≤ n ≤ n_max,
    built as 𝔭_n = (1 − ℓ_n) 𝔭_{n−1}.
    """
    lam = _check_lam(lam)
    out = [1.0]
    for n in range(1, n_max + 1):
        out.append(one_minus_ell(lam, n) * out[-1])
    return out


def is_parameter_seq(d: Sequence[float], g: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    """
    Checks whether ``g`` is a parameter sequence of the chain sequence ``d``.

    Uses the same padded layout as the rest of this module: ``d[n+1]`` = d_{n+1}
    for n ≥ 1 (``d[0]``, ``d[1]`` ignored) and ``g[n]`` = g_n for n ≥ 1
    (``g[0]`` ignored). Every d_{n+1} present must have a g_{n+1} to pair with.

    True iff g_1 ∈ [0, 1), g_n ∈ (0, 1) for n ≥ 2 and |(1 − g_n) g_{n+1} − d_{n+1}| ≤ tol.

    Raises:
        LengthMismatch: If ``len(g) < len(d)``.
        DomainError: If ``tol <= 0``.

    Examples:
        >>> _, d = recurrence_coeffs(1.0, 10)
        >>> is_parameter_seq(d, minimal_params(1.0, 10))
        True
        >>> is_parameter_seq(d, [0.0] + [0.9] * 10)
        False
    """
    if not tol > 0:
        raise DomainError("tol > 0", tol=tol)
    if len(g) < len(d):
        raise LengthMismatch("len(g) >= len(d)", d=len(d), g=len(g))
    if len(g) < 2:
        raise LengthMismatch("len(g) >= 2", g=len(g))
    if not 0.0 <= g[1] < 1.0:
        return False
    if any(not 0.0 < gn < 1.0 for gn in g[2:]):
        return False
    return all(abs((1.0 - g[n]) * g[n + 1] - d[n + 1]) <= tol for n in range(1, len(d) - 1))


@dataclass(frozen=True)
class ChainSequences:
    """
    Every sequence attached to the chain sequence {d_{n+1}} for a given λ, in the padded layout.

    ``bigL`` and ``gamma`` are empty when λ ≤ 1/2 (no maximal sequence distinct from the minimal one).
    """

    lam: float
    d: List[float]
    ell: List[float]
    bigL: List[float]
    gamma: List[float]


def chain_sequences(lam: float, n_max: int) -> ChainSequences:
    """Builds the :class:`ChainSequences` record up to index ``n_max``."""
    _, d = recurrence_coeffs(ParamB(lam), n_max + 1)
    ell = minimal_params(lam, n_max + 1)
    if lam > 0.5:
        bigL = maximal_params(lam, n_max + 1)
        gamma = gamma_seq(lam, n_max)
    else:
        bigL, gamma = [], []
    return ChainSequences(float(lam), d, ell, bigL, gamma)


__all__ = [
    "c_coeff",
    "d_coeff",
    "one_minus_ell",
    "recurrence_coeffs",
    "minimal_params",
    "maximal_params",
    "gamma_seq",
    "leading_coeffs",
    "is_parameter_seq",
    "ChainSequences",
    "chain_sequences",
]
