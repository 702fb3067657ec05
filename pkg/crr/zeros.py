"""
Zeros of 𝒫_n(b;·) and their electrostatic characterization.

Put m unit charges at real points x_1 < … < x_m, with fixed charges λ_m/2 at ±i and an
external field whose potential is −η·arctan(x). The energy

    E(x) = Σ_{j<k} ln(1/|x_j − x_k|) + (λ_m/2) Σ_j ln(x_j² + 1) − η Σ_j arctan(x_j)

is bounded below whenever λ_m > m − 1, and with λ_m = λ + m − 1 its minimizer is the zero
set of 𝒫_m(λ + iη; ·). :func:`crr_zeros` computes that set directly and
:func:`minimize_energy` finds it from the energy alone.
"""

import math
from dataclasses import dataclass
from logging import DEBUG, getLogger

import numpy as np

from crr._typing import *
from crr.exceptions import CoincidentCharges, DomainError, MinimizationDidNotConverge, RootPolishFailed
from crr.opuc import cayley_to_circle
from crr.params import ParamB, as_param
from crr.poly import crr_derivative_eval, crr_eval_recurrence, crr_monic_coeffs

logger = getLogger(__name__)

MIN_GAP = 1e-12
"""Charges closer than this are treated as coincident."""

ROOT_IMAG_TOL = 1e-8
"""Largest imaginary part a polished zero may keep."""

NEWTON_STEPS = 50

ARMIJO = 1e-4
"""Sufficient-decrease constant of the backtracking line search."""


@final
@dataclass(frozen=True)
class ZeroConfiguration:
    """
    Sorted charge positions with their energy and gradient norm.

    The energy and gradient are those of :func:`energy_eval` and :func:`energy_gradient`
    at λ_m = λ + m − 1.
    """

    positions: Tuple[float, ...]
    energy: float
    grad_norm: float

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def circle_images(self) -> List[complex]:
        """(x_k + i)/(x_k − i), the positions carried to the unit circle."""
        return [cayley_to_circle(x) for x in self.positions]


def _as_positions(xs: Iterable[float]) -> RealArray:
    arr = np.asarray(list(xs), dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("xs a non-empty list of reals", xs=xs)
    if arr.size > 1:
        gaps = np.diff(np.sort(arr))
        if gaps.min() < MIN_GAP:
            raise CoincidentCharges(f"min gap >= {MIN_GAP}", gap=float(gaps.min()))
    return arr


def energy_eval(lambda_m: float, eta: float, xs: Iterable[float]) -> float:
    """
    The energy E(x) of the module docstring.

    Raises:
        CoincidentCharges: If two positions are closer than :data:`MIN_GAP`.

    Examples:
        >>> energy_eval(1.0, 0.0, [0.0])
        0.0
        >>> abs(energy_eval(1.0, 2.0, [2.0]) - (0.5 * math.log(5) - 2 * math.atan(2))) < 1e-14
        True
    """
    x = _as_positions(xs)
    # sorted pairs make the sum independent of the input order
    x = np.sort(x)
    i, j = np.triu_indices(x.size, k=1)
    mutual = -math.fsum(np.log(x[j] - x[i]))
    fixed = 0.5 * lambda_m * math.fsum(np.log1p(x * x))
    field = -eta * math.fsum(np.arctan(x))
    return mutual + fixed + field


def energy_gradient(lambda_m: float, eta: float, xs: Iterable[float]) -> List[float]:
    """
    ∂E/∂x_k = −Σ_{j≠k} 1/(x_k − x_j) + (λ_m x_k − η)/(x_k² + 1), in the order given.

    Examples:
        >>> energy_gradient(2.0, 1.0, [0.5])
        [0.0]
    """
    return _gradient(lambda_m, eta, _as_positions(xs)).tolist()


def _gradient(lambda_m: float, eta: float, x: RealArray) -> RealArray:
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    return -(1.0 / diff).sum(axis=1) + (lambda_m * x - eta) / (x * x + 1)


def _hessian(lambda_m: float, eta: float, x: RealArray) -> RealArray:
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    inv2 = 1.0 / (diff * diff)
    hess = -inv2
    x2p1 = x * x + 1
    np.fill_diagonal(hess, inv2.sum(axis=1) + (lambda_m * (1 - x * x) + 2 * eta * x) / (x2p1 * x2p1))
    return hess


def _configuration(lambda_m: float, eta: float, x: RealArray) -> ZeroConfiguration:
    x = np.sort(x)
    return ZeroConfiguration(
        tuple(x.tolist()),
        energy_eval(lambda_m, eta, x),
        float(np.linalg.norm(_gradient(lambda_m, eta, x))),
    )


# direct computation


def _polish(b: ParamB, n: int, z: complex) -> complex:
    for _ in range(NEWTON_STEPS):
        step = crr_eval_recurrence(b, n, z) / crr_derivative_eval(b, n, z)
        z -= step
        if abs(step) <= 4 * np.finfo(float).eps * max(1.0, abs(z)):
            break
    return z


def crr_zeros(b: Union[ParamB, Number], n: int) -> ZeroConfiguration:
    """
    The n real zeros of 𝒫_n(b;·), sorted.

    Starts from the companion-matrix eigenvalues of 𝒫̂_n and polishes each one by
    Newton's method in complex arithmetic, with 𝒫_n′ = n(1 − ℓ_n)𝒫_{n−1}.

    Raises:
        DomainError: If λ ≤ 0 or n < 1.
        RootPolishFailed: If a polished zero keeps an imaginary part above
            :data:`ROOT_IMAG_TOL`, or two zeros collapse onto each other.

    Examples:
        >>> crr_zeros(1 + 2j, 1).positions
        (2.0,)
    """
    b = as_param(b)
    b.require_positive()
    if n < 1:
        raise DomainError("n >= 1", n=n)
    roots = [_polish(b, n, complex(z)) for z in crr_monic_coeffs(b, n).roots()]
    worst = max(abs(z.imag) for z in roots)
    if worst > ROOT_IMAG_TOL:
        raise RootPolishFailed(f"zero of P_{n}({b}) kept imaginary part {worst:.3g}")
    x = np.sort(np.array([z.real for z in roots]))
    if n > 1 and np.diff(x).min() < MIN_GAP:
        raise RootPolishFailed(f"two zeros of P_{n}({b}) collapsed during polishing")
    if logger.isEnabledFor(DEBUG):
        logger._log(DEBUG, "zeros of P_%s(%s): %s", (n, b, x.tolist()))
    return _configuration(b.lam + n - 1, b.eta, x)


def interlacing(b: Union[ParamB, Number], n: int) -> bool:
    """
    Whether the zeros of 𝒫_{n−1}(b;·) strictly separate those of 𝒫_n(b;·).

    Holds for every λ > 0: d_{n+1} > 0 makes 𝒫_0, …, 𝒫_n a Sturm sequence.

    Examples:
        >>> interlacing(1.0, 2)
        True
    """
    if n < 2:
        raise DomainError("n >= 2", n=n)
    outer = crr_zeros(b, n).positions
    inner = crr_zeros(b, n - 1).positions
    return all(outer[k] < inner[k] < outer[k + 1] for k in range(n - 1))


# minimization


def auto_init(m: int) -> RealArray:
    """x_k = cot(θ_k/2) with θ_k = 2πk/(m+1): preimages of equally spaced points on the circle."""
    theta = 2 * np.pi * np.arange(1, m + 1) / (m + 1)
    return np.sort(1 / np.tan(theta / 2))


def _max_step(x: RealArray) -> float:
    if x.size == 1:
        return 1.0 + abs(x[0])
    return 0.5 * float(np.diff(x).min())


def minimize_energy(
    m: int,
    b: Union[ParamB, Number],
    init: Union[Literal["auto"], Sequence[float]] = "auto",
    tol: float = 1e-10,
    max_iter: int = 500,
) -> ZeroConfiguration:
    """
    Minimizes E with λ_m = λ + m − 1 by a damped Newton method.

    Each iteration takes the Newton direction when the Hessian is positive definite and
    the steepest-descent direction otherwise, clips it so that no charge moves by more
    than half the smallest gap (the ordering x_1 < … < x_m is kept), and backtracks until
    the energy decreases.

    Args:
        m: Number of charges.
        b: The parameter, λ > 0.
        init: Starting positions, or ``"auto"`` for :func:`auto_init`.
        tol: Stop once the gradient norm is ≤ tol.
        max_iter: Iteration cap.

    Raises:
        MinimizationDidNotConverge: If ``max_iter`` is reached, or the line search stalls.

    Examples:
        >>> [round(x, 8) for x in minimize_energy(1, 1 + 2j).positions]
        [2.0]
    """
    b = as_param(b)
    b.require_positive()
    if m < 1:
        raise DomainError("m >= 1", m=m)
    lambda_m, eta = b.lam + m - 1, b.eta
    x = auto_init(m) if isinstance(init, str) and init == "auto" else np.sort(_as_positions(init))
    if x.size != m:
        raise DomainError("len(init) == m", m=m, init=len(x))
    energy = energy_eval(lambda_m, eta, x)
    for iteration in range(max_iter):
        grad = _gradient(lambda_m, eta, x)
        if np.linalg.norm(grad) <= tol:
            return _configuration(lambda_m, eta, x)
        try:
            hess = _hessian(lambda_m, eta, x)
            np.linalg.cholesky(hess)
            direction = -np.linalg.solve(hess, grad)
        except np.linalg.LinAlgError:
            direction = -grad
        largest = np.abs(direction).max()
        direction *= min(1.0, _max_step(x) / largest)
        slope = float(grad @ direction)
        slack = 1e-13 * max(1.0, abs(energy))
        t = 1.0
        for _ in range(60):
            trial = x + t * direction
            try:
                trial_energy = energy_eval(lambda_m, eta, trial)
            except CoincidentCharges:
                # rounding can still merge two charges; reject the step
                t *= 0.5
                continue
            if trial_energy <= energy + ARMIJO * t * slope + slack:
                break
            t *= 0.5
        else:
            break
        x, energy = np.sort(trial), trial_energy
        if logger.isEnabledFor(DEBUG):
            logger._log(DEBUG, "iteration %s: E=%s |grad|=%s", (iteration, energy, np.linalg.norm(grad)))
    else:
        iteration = max_iter
    raise MinimizationDidNotConverge(_configuration(lambda_m, eta, x), iteration)


def is_local_minimum(
    b: Union[ParamB, Number], m: int, samples: int = 100, size: float = 1e-2, seed: int = 0
) -> bool:
    """
    Whether E at the zeros of 𝒫_m is ≤ E at ``samples`` random perturbations of size ``size``.

    Examples:
        >>> is_local_minimum(1.0, 3, samples=10)
        True
    """
    b = as_param(b)
    config = crr_zeros(b, m)
    lambda_m = b.lam + m - 1
    x = np.asarray(config.positions)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        trial = x + size * rng.uniform(-1.0, 1.0, size=m)
        try:
            if energy_eval(lambda_m, b.eta, trial) < config.energy:
                return False
        except CoincidentCharges:
            continue
    return True


__all__ = [
    "ZeroConfiguration",
    "crr_zeros",
    "interlacing",
    "energy_eval",
    "energy_gradient",
    "auto_init",
    "minimize_energy",
    "is_local_minimum",
]
