"""
This module builds the process-wide defaults of the crr library from the ``CRR_*``
environment variables declared in :mod:`crr.ENVIRONMENT_VARIABLES`.

Environment Variables:
    :obj:`~crr.ENVIRONMENT_VARIABLES.MAX_TERMS`, :obj:`~crr.ENVIRONMENT_VARIABLES.REL_TOL`
        and :obj:`~crr.ENVIRONMENT_VARIABLES.GUARD_DIGITS` feed :func:`default_series_control`.
    :obj:`~crr.ENVIRONMENT_VARIABLES.QUAD_BUDGET` is the evaluation budget used by
        :mod:`crr.quadrature` when none is passed.
    :obj:`~crr.ENVIRONMENT_VARIABLES.EXECUTOR_TYPE` selects processes or threads for
        grid work. Valid values start with 'p' (e.g. 'processes') or 't' (e.g. 'threads').
    :obj:`~crr.ENVIRONMENT_VARIABLES.EXECUTOR_VALUE` is the number of workers.
        0 means every job runs inline in the calling thread.

Examples:
    To tabulate grids on 4 worker threads:

    .. code-block:: bash

        export CRR_EXECUTOR_TYPE=threads
        export CRR_EXECUTOR_VALUE=4

See Also:
    - :mod:`crr.executor`
    - :class:`crr.params.SeriesControl`
"""

import functools

from crr import ENVIRONMENT_VARIABLES as ENVS
from crr._typing import *
from crr.params import SeriesControl

if TYPE_CHECKING:
    from crr.executor import AsyncExecutor


EXECUTOR_TYPE: str = str(ENVS.EXECUTOR_TYPE)
"""Specifies the type of executor to use for grid work. Defaults to 'processes'."""

EXECUTOR_VALUE: int = int(ENVS.EXECUTOR_VALUE)
"""Specifies the number of workers for the grid executor. Defaults to 0 (synchronous mode)."""

QUAD_BUDGET: int = int(ENVS.QUAD_BUDGET)
"""Default number of integrand evaluations a quadrature may spend."""


@functools.lru_cache(maxsize=1)
def default_series_control() -> SeriesControl:
    """
    The :class:`~crr.params.SeriesControl` built from the environment.

    Examples:
        >>> default_series_control().rel_tol
        1e-14
    """
    return SeriesControl()


def make_executor(kind: str, workers: int) -> "AsyncExecutor":
    """
    Builds an async executor of the requested kind.

    Args:
        kind: Anything starting with 'p' for processes or 't' for threads, case-insensitive.
        workers: Number of workers, 0 for synchronous mode.

    Raises:
        ValueError: If ``kind`` starts with neither letter.
    """
    from crr.executor import AsyncProcessPoolExecutor, AsyncThreadPoolExecutor

    if kind.lower().startswith("p"):  # p, P, proc, Processes, etc
        return AsyncProcessPoolExecutor(workers)
    elif kind.lower().startswith("t"):  # t, T, thread, THREADS, etc
        return AsyncThreadPoolExecutor(workers)
    raise ValueError("Invalid value for CRR_EXECUTOR_TYPE. Please use 'threads' or 'processes'.")


@functools.lru_cache(maxsize=1)
def get_default_executor() -> "AsyncExecutor":
    """Get the default grid executor based on the CRR_EXECUTOR_TYPE environment variable.

    Returns:
        An instance of either :class:`~crr.executor.AsyncProcessPoolExecutor`
        or :class:`~crr.executor.AsyncThreadPoolExecutor`, with
        :obj:`EXECUTOR_VALUE` workers.

    Raises:
        ValueError: If an invalid CRR_EXECUTOR_TYPE is specified.

    Examples:
        >>> executor = get_default_executor()
        >>> executor.sync_mode  # CRR_EXECUTOR_VALUE defaults to 0
        True
    """
    return make_executor(EXECUTOR_TYPE, EXECUTOR_VALUE)
