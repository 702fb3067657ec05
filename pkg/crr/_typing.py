"""
This module provides type definitions and type-related utilities for the `crr` library.

It includes the scalar, array and callable aliases used throughout the library so that
signatures stay readable and IDEs can help.

Examples:
    Typing an integrand handed to :mod:`crr.quadrature`:

    ```python
    from crr._typing import Integrand

    def density(theta: float) -> complex:
        ...

    f: Integrand = density
    ```

See Also:
    - :mod:`typing`
    - :mod:`numpy.typing`
"""

from typing import (
    TYPE_CHECKING,
    Any,
    Callable,
    ClassVar,
    Dict,
    Iterable,
    Iterator,
    List,
    Literal,
    Mapping,
    NoReturn,
    Optional,
    Sequence,
    TextIO,
    Tuple,
    TypeVar,
    Union,
    final,
)

import numpy as np
import numpy.typing as npt
from typing_extensions import ParamSpec, Self

T = TypeVar("T")
P = ParamSpec("P")
"""A :class:`ParamSpec` used by the executor helpers."""

Real = Union[int, float]
"""Type alias for real scalars accepted by the public API."""

Number = Union[int, float, complex]
"""Type alias for real or complex scalars."""

RealArray = npt.NDArray[np.float64]
"Type alias for a float64 numpy array."

ComplexArray = npt.NDArray[np.complex128]
"Type alias for a complex128 numpy array."

Integrand = Callable[[float], Number]
"""Type alias for functions of one real variable handed to the quadrature routines."""

RMethod = Literal["recurrence", "hypergeometric", "para"]
"""Construction routes for the para-orthogonal polynomials R_n."""

EvalMethod = Literal["recurrence", "hyper", "both"]
"""Evaluation routes exposed by the CLI for CRR polynomials."""

SinCos = Literal["cos", "sin", "combined"]
"""Which of the sine/cosine expansions to check."""

OutputFormat = Literal["json", "csv"]
"""Serialization formats for CLI records."""
