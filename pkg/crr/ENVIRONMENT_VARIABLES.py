from typed_envs import EnvVarFactory

envs = EnvVarFactory("CRR")

# Numerical defaults. Every one of these can also be overridden per call.

MAX_TERMS = envs.create_env("MAX_TERMS", int, default=10_000, verbose=False)
"""int: Default cap on the number of terms summed by infinite series.

Feeds :attr:`crr.params.SeriesControl.max_terms`.

Examples:
    .. code-block:: bash

        export CRR_MAX_TERMS=500
"""

REL_TOL = envs.create_env("REL_TOL", float, default=1e-14, verbose=False)
"""float: Default relative stopping tolerance for infinite series."""

GUARD_DIGITS = envs.create_env("GUARD_DIGITS", int, default=12, verbose=False)
"""int: Extra decimal digits carried by confluent series beyond double precision.

The series for ₁F₁ with a purely imaginary argument cancels heavily, so the
term recurrence is run in :mod:`mpmath` at ``16 + GUARD_DIGITS`` digits plus
the number of digits the cancellation is expected to eat.
"""

QUAD_BUDGET = envs.create_env("QUAD_BUDGET", int, default=200_000, verbose=False)
"""int: Default number of integrand evaluations a quadrature may spend."""

# Grid parallelism.

EXECUTOR_TYPE = envs.create_env("EXECUTOR_TYPE", str, default="processes", verbose=False)
"""str: 'processes' or 'threads'. Only the first letter is checked.

See Also:
    :func:`crr.config.get_default_executor`
"""

EXECUTOR_VALUE = envs.create_env("EXECUTOR_VALUE", int, default=0, verbose=False)
"""int: Number of workers for the grid executor. 0 runs every job inline (synchronous mode)."""

DEBUG_MODE = envs.create_env("DEBUG_MODE", bool, default=False, verbose=False)
"""bool: Turns on debug logging for the command line frontend.

Examples:
    .. code-block:: bash

        export CRR_DEBUG_MODE=True
"""
