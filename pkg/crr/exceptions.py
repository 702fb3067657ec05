"""
This module defines custom exceptions for the crr library.

Three families cover everything the numerical code can report:

- :class:`DomainError`: a parameter precondition failed. The message names the precondition.
- :class:`ConvergenceError`: an iterative process ran out of budget.
- :class:`ConsistencyError`: an identity that must hold numerically did not.
"""

from crr._typing import *

if TYPE_CHECKING:
    from crr.quadrature import QuadratureResult
    from crr.zeros import ZeroConfiguration


class CRRException(Exception):
    """Base class for every error raised by crr."""


class DomainError(CRRException, ValueError):
    """
    Raised when an argument violates a precondition of the requested operation.

    Examples:
        >>> try:
        ...     raise DomainError("lambda > 0", lam=-1.0)
        ... except DomainError as e:
        ...     print(e)
        precondition violated: lambda > 0 (lam=-1.0)
    """

    def __init__(self, precondition: str, **values: Any) -> None:
        """
        Initializes the DomainError exception.

        Args:
            precondition: The violated precondition, written as it should hold.
            **values: The offending values, echoed in the message.
        """
        msg = f"precondition violated: {precondition}"
        if values:
            msg += " (" + ", ".join(f"{k}={v!r}" for k, v in values.items()) + ")"
        super().__init__(msg)
        self.precondition = precondition
        self.values = values


class PoleError(DomainError):
    """
    Raised when an argument hits a pole: Γ at a non-positive integer, a ₁F₁
    lower parameter at a non-positive integer, or the Cayley map at ζ = 1.

    Examples:
        >>> try:
        ...     raise PoleError("z not a non-positive integer", z=-2)
        ... except PoleError as e:
        ...     print(e)
        precondition violated: z not a non-positive integer (z=-2)
    """


class WindowViolation(DomainError):
    """Raised when the Weber generating function is evaluated outside its validity window."""


class CoincidentCharges(DomainError):
    """Raised when two charge positions coincide (the energy is infinite there)."""


class LengthMismatch(DomainError):
    """
    Raised when two sequences that must be paired element by element have incompatible lengths.

    Examples:
        >>> try:
        ...     raise LengthMismatch("len(g) >= len(d) + 1", d=3, g=2)
        ... except LengthMismatch as e:
        ...     print(e)
        precondition violated: len(g) >= len(d) + 1 (d=3, g=2)
    """


class ConvergenceError(CRRException, ArithmeticError):
    """Base class for numerical processes that exhausted their budget."""


class SeriesDidNotConverge(ConvergenceError):
    """
    Raised when an infinite series hits :attr:`~crr.params.SeriesControl.max_terms`
    before its terms became negligible.

    Examples:
        >>> try:
        ...     raise SeriesDidNotConverge("1F1", 10, 0.5)
        ... except SeriesDidNotConverge as e:
        ...     print(e)
        1F1 did not converge within 10 terms (last relative term 0.5)
    """

    def __init__(self, what: str, terms: int, last_ratio: float) -> None:
        super().__init__(
            f"{what} did not converge within {terms} terms (last relative term {last_ratio:.3g})"
        )
        self.terms = terms
        self.last_ratio = last_ratio


class QuadratureDidNotConverge(ConvergenceError):
    """
    Raised when an integral could not be brought under its tolerance within the evaluation budget.

    The best estimate is kept on :attr:`result`.
    """

    def __init__(self, result: "QuadratureResult", tol: float) -> None:
        super().__init__(
            f"quadrature error estimate {result.error_estimate:.3g} exceeds tol {tol:.3g} "
            f"after {result.evaluations} evaluations"
        )
        self.result = result


class MinimizationDidNotConverge(ConvergenceError):
    """
    Raised when the energy minimization did not reach its gradient tolerance.

    The last iterate is kept on :attr:`configuration`.
    """

    def __init__(self, configuration: "ZeroConfiguration", iterations: int) -> None:
        super().__init__(
            f"energy minimization stopped after {iterations} iterations "
            f"with gradient norm {configuration.grad_norm:.3g}"
        )
        self.configuration = configuration


class RootPolishFailed(ConvergenceError):
    """Raised when a computed zero keeps an imaginary part after Newton polishing."""


class ConsistencyError(CRRException, ArithmeticError):
    """Base class for identities that failed to hold numerically."""


class ImaginaryResidueError(ConsistencyError):
    """
    Raised when a value that is real in exact arithmetic comes out with a large imaginary part.

    This signals loss of precision, not a mathematical error.

    Examples:
        >>> try:
        ...     raise ImaginaryResidueError("P_n(b;x)", 1+1e-3j, 1e-10)
        ... except ImaginaryResidueError as e:
        ...     print(e)
        P_n(b;x): imaginary residue 0.001 exceeds 1e-10 relative to |value| = 1
    """

    def __init__(self, what: str, value: complex, tol: float) -> None:
        super().__init__(
            f"{what}: imaginary residue {abs(value.imag):.3g} exceeds {tol:.3g} "
            f"relative to |value| = {abs(value):.3g}"
        )
        self.value = value


class MethodDisagreement(ConsistencyError):
    """
    Raised when independent evaluation routes of the same quantity disagree.

    Examples:
        >>> try:
        ...     raise MethodDisagreement("R_n", 1e-6, 1e-10)
        ... except MethodDisagreement as e:
        ...     print(e)
        R_n: methods disagree by 1e-06 (tolerance 1e-10)
    """

    def __init__(self, what: str, discrepancy: float, tol: float) -> None:
        super().__init__(f"{what}: methods disagree by {discrepancy:.3g} (tolerance {tol:.3g})")
        self.discrepancy = discrepancy
